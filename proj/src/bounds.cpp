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

#include "pfim/bounds.hpp"

#include <cmath>

#include "pfim/error.hpp"

namespace pfim {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("bad-alpha", "alpha must lie in [0, 1]");
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw Error("bad-epsilon", "epsilon must lie in [0, 1)");
  }
}

void check_costs(double budget, double c_max) {
  if (!(c_max > 0.0 && c_max <= budget)) {
    throw Error("bad-cost", "need 0 < c_max <= B");
  }
}

// alpha (1 - e^{-scale/alpha}), continuous at alpha = 0 for scale >= 0.
double saturating(double alpha, double scale) {
  if (alpha == 0.0) return 0.0;
  return alpha * -std::expm1(-scale / alpha);
}

}  // namespace

double bound_uniform(double alpha) {
  check_alpha(alpha);
  return saturating(alpha, 1.0);
}

double bound_nonuniform(double alpha, double budget, double c_max) {
  check_alpha(alpha);
  check_costs(budget, c_max);
  return saturating(alpha, (budget - c_max) / budget);
}

double bound_enhanced(double alpha) { return bound_uniform(alpha) / 2.0; }

BoundValue bound_uniform_eps(double alpha, double epsilon, double n, double f_star) {
  check_alpha(alpha);
  check_epsilon(epsilon);
  const double gain = saturating(alpha, 1.0 - epsilon) / (1.0 + epsilon) * f_star;
  const double loss = 2.0 * epsilon / (1.0 + epsilon) * n;
  return {gain - loss};
}

BoundValue bound_nonuniform_eps(double alpha, double epsilon, double n, double budget,
                                double c_max, double c_min, double f_star) {
  check_alpha(alpha);
  check_epsilon(epsilon);
  check_costs(budget, c_max);
  if (!(c_min > 0.0)) throw Error("bad-cost", "need c_min > 0");
  const double gain =
      saturating(alpha, (1.0 - epsilon) * (budget - c_max) / budget) / (1.0 + epsilon) * f_star;
  const double loss = 2.0 * epsilon / (1.0 + epsilon) * (1.0 / c_min + 1.0) * n * budget;
  return {gain - loss};
}

BoundValue bound_enhanced_eps(double alpha, double epsilon, double n, double budget,
                              double c_min, double f_star) {
  check_alpha(alpha);
  check_epsilon(epsilon);
  if (!(c_min > 0.0)) throw Error("bad-cost", "need c_min > 0");
  const double gain = saturating(alpha, 1.0 - epsilon) / (1.0 + epsilon) * f_star;
  const double loss = 2.0 * epsilon / (1.0 + epsilon) * (1.0 / c_min + 1.0) * n * budget;
  return {0.5 * (1.0 - epsilon) / (1.0 + epsilon) * (gain - loss)};
}

}  // namespace pfim
