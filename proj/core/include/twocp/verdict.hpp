// Copyright 2026 The twocp Authors
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

#pragma once

#include <algorithm>
#include <initializer_list>

namespace twocp {

inline constexpr double kDefaultTol = 1e-9;

/// Outcome of a numerical check: the residual of the equation under test
/// (max-absolute-entry norm) and whether it is within tolerance.
struct Verdict {
  bool pass = true;
  double deviation = 0.0;

  static Verdict within(double deviation, double tol) {
    return Verdict{deviation <= tol, deviation};
  }
};

/// Conjunction of verdicts; the deviation is the worst one.
inline Verdict all_of(std::initializer_list<Verdict> vs) {
  Verdict out;
  for (const auto& v : vs) {
    out.pass = out.pass && v.pass;
    out.deviation = std::max(out.deviation, v.deviation);
  }
  return out;
}

}  // namespace twocp
