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

#include "pfim/cost.hpp"

#include <cstdlib>
#include <limits>

#include "pfim/error.hpp"

namespace pfim {

Cost Cost::parse(std::string_view text) {
  auto fail = [&] {
    return Error("bad-cost", "invalid cost '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) throw fail();
      seen_dot = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw fail();
    seen_digit = true;
    if (seen_dot) {
      if (++frac_digits > 6) throw fail();
      frac = frac * 10 + (ch - '0');
    } else {
      if (whole > std::numeric_limits<std::int64_t>::max() / kScale / 10) throw fail();
      whole = whole * 10 + (ch - '0');
    }
  }
  if (!seen_digit) throw fail();
  for (int k = frac_digits; k < 6; ++k) frac *= 10;
  return Cost(whole * kScale + frac);
}

std::string Cost::to_string() const {
  std::int64_t magnitude = micros_ < 0 ? -micros_ : micros_;
  std::string out = micros_ < 0 ? "-" : "";
  out += std::to_string(magnitude / kScale);
  std::int64_t frac = magnitude % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace pfim
