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

#ifndef PFIM_COST_HPP_
#define PFIM_COST_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pfim {

// Exact signed decimal with six fractional digits. Node costs and
// budgets use this so that repeated "B <- B - c_v" never drifts.
class Cost {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Cost() = default;

  static constexpr Cost from_micros(std::int64_t micros) { return Cost(micros); }
  static constexpr Cost units(std::int64_t whole) { return Cost(whole * kScale); }

  // Accepts "3", "2.5", "0.000001". More than six fractional digits, signs,
  // exponents and junk are rejected with pfim::Error("bad-cost").
  static Cost parse(std::string_view text);

  constexpr std::int64_t micros() const { return micros_; }
  constexpr double to_double() const {
    return static_cast<double>(micros_) / static_cast<double>(kScale);
  }

  // Shortest decimal that parses back to the same value ("2.5", "10").
  std::string to_string() const;

  constexpr Cost& operator+=(Cost other) {
    micros_ += other.micros_;
    return *this;
  }
  constexpr Cost& operator-=(Cost other) {
    micros_ -= other.micros_;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr Cost operator-(Cost a, Cost b) { return a -= b; }
  friend constexpr auto operator<=>(Cost, Cost) = default;

 private:
  constexpr explicit Cost(std::int64_t micros) : micros_(micros) {}
  std::int64_t micros_ = 0;
};

}  // namespace pfim

#endif  // PFIM_COST_HPP_
