// Copyright 2026 The qharmonic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHARMONIC_PARAMS_HPP_
#define QHARMONIC_PARAMS_HPP_

#include <cmath>
#include <string>

#include "qharmonic/errors.hpp"

namespace qharmonic {

inline void require_base(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("q must lie in (0,1), got " + std::to_string(q));
  }
}

/// Deformation parameters (q, alpha), validated on construction:
/// 0 < q < 1 and alpha > -1.
class QParams {
 public:
  QParams(double q, double alpha) : q_(q), alpha_(alpha) {
    require_base(q);
    if (!(alpha > -1.0) || !std::isfinite(alpha)) {
      throw DomainError("alpha must be > -1, got " + std::to_string(alpha));
    }
  }

  double q() const { return q_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const QParams&, const QParams&) = default;

 private:
  double q_;
  double alpha_;
};

/// Truncation and precision policy shared by every infinite sum and product.
struct SeriesControl {
  int max_terms = 512;
  /// Stop once a term falls below rel_tol times the partial sum.
  double rel_tol = 1e-16;
  /// Working precision of the high-accuracy path. At the default (53) the
  /// high-accuracy path runs at kEscalationBits when cancellation is detected.
  unsigned precision_bits = 53;

  static constexpr unsigned kEscalationBits = 256;

  void validate() const {
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
      throw DomainError("rel_tol must lie in (0,1)");
    }
    if (precision_bits < 53) throw DomainError("precision_bits must be >= 53");
  }

  /// Precision used once the double path has been rejected.
  unsigned escalation_bits() const {
    return precision_bits > kEscalationBits ? precision_bits : kEscalationBits;
  }
};

}  // namespace qharmonic

#endif  // QHARMONIC_PARAMS_HPP_
