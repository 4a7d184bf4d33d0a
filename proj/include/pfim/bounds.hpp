// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFIM_BOUNDS_HPP_
#define PFIM_BOUNDS_HPP_

namespace pfim {

// Closed-form approximation guarantees of the alpha-greedy policies.
// The plain forms are ratios against the optimal adaptive value; the
// epsilon forms are absolute lower bounds on the expected cascade given
// f_star = f(pi*) and may be negative.

struct BoundValue {
  double value = 0.0;
  bool vacuous() const { return value < 0.0; }
};

// alpha (1 - e^{-1/alpha}); 0 at alpha = 0.
double bound_uniform(double alpha);

// alpha (1 - e^{-(1/alpha)(B - c_max)/B}). Requires 0 < c_max <= B.
double bound_nonuniform(double alpha, double budget, double c_max);

// bound_uniform(alpha) / 2.
double bound_enhanced(double alpha);

BoundValue bound_uniform_eps(double alpha, double epsilon, double n, double f_star);

BoundValue bound_nonuniform_eps(double alpha, double epsilon, double n, double budget,
                                double c_max, double c_min, double f_star);

BoundValue bound_enhanced_eps(double alpha, double epsilon, double n, double budget,
                              double c_min, double f_star);

}  // namespace pfim

#endif  // PFIM_BOUNDS_HPP_
