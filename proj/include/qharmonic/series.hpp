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

#ifndef QHARMONIC_SERIES_HPP_
#define QHARMONIC_SERIES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qharmonic/errors.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/scalar.hpp"

namespace qharmonic {

/// Truncated sum of a series together with the sum of absolute term values,
/// which bounds the rounding error of the evaluation.
template <class Real>
struct SeriesSum {
  Complex<Real> value;
  Real magnitude;
  int terms = 0;

  /// Bits lost to cancellation: log2(sum |t_k| / |sum t_k|).
  double cancellation_bits() const {
    using std::abs;
    const double mag = log2_abs(magnitude);
    if (mag < -1e8) return 0.0;
    const double val = log2_abs(Real(abs(value)));
    return val < -1e8 ? 1e9 : std::max(0.0, mag - val);
  }
};

/// Accumulates series terms and applies the stopping rule: two consecutive
/// terms with |t| <= tol * |partial sum|. Throws ConvergenceError when the
/// term cap is reached, or when the rule fires while terms are still growing.
template <class Real>
class SeriesSummer {
 public:
  SeriesSummer(const Field<Real>& field, const SeriesControl& ctrl,
               const char* what)
      : acc_(field),
        magnitude_(field(0.0)),
        prev_abs_(field(0.0)),
        tol_(detail::stop_tolerance(field, ctrl)),
        cap_(detail::term_cap(ctrl, field.bits)),
        what_(what) {}

  /// Adds a term; returns true once the series has converged.
  bool add(const Complex<Real>& t) {
    using std::abs;
    using std::isfinite;
    const Real t_abs = abs(t);
    acc_.add(t);
    magnitude_ += t_abs;
    ++terms_;
    const Real s_abs = abs(acc_.value());
    if (!isfinite(t_abs) || !isfinite(s_abs)) {
      throw RangeError(std::string(what_) + ": terms overflow the working range");
    }
    if (t_abs <= tol_ * s_abs) {
      ++small_;
    } else {
      small_ = 0;
    }
    const bool growing = terms_ > 1 && t_abs > prev_abs_;
    prev_abs_ = t_abs;
    if (small_ >= 2) {
      if (growing) {
        throw ConvergenceError(std::string(what_) +
                               ": terms still growing at the stopping point");
      }
      return true;
    }
    if (terms_ >= cap_) {
      throw ConvergenceError(std::string(what_) + ": no convergence within " +
                             std::to_string(cap_) + " terms");
    }
    return false;
  }

  SeriesSum<Real> result() const { return {acc_.value(), magnitude_, terms_}; }

 private:
  Accumulator<Real> acc_;
  Real magnitude_;
  Real prev_abs_;
  Real tol_;
  int cap_;
  int terms_ = 0;
  int small_ = 0;
  const char* what_;
};

/// Cancellation tolerated on the double path before escalating.
inline constexpr double kDoubleCancellationBits = 4.0;
/// Bits beyond double precision that must survive cancellation on the
/// high-precision path.
inline constexpr double kGuardBits = 11.0;

/// Throws CancellationError if a high-precision sum lost too many bits.
template <class Real>
void require_resolved(const SeriesSum<Real>& s, unsigned bits,
                      const char* what) {
  const double lost = s.cancellation_bits();
  if (static_cast<double>(bits) - lost < 53.0 + kGuardBits) {
    throw CancellationError(
        std::string(what) + ": cancellation of ~" +
        std::to_string(static_cast<long>(lost)) + " bits exceeds the " +
        std::to_string(bits) + "-bit working precision; raise precision_bits");
  }
}

/// Evaluates a series on the double path and re-runs it at
/// ctrl.escalation_bits() when cancellation exceeds kDoubleCancellationBits
/// or the double terms overflow.
/// eval is called with a Field<double> or Field<BigFloat> and returns the
/// matching SeriesSum.
template <class Eval>
std::complex<double> evaluate_guarded(const Eval& eval,
                                      const SeriesControl& ctrl,
                                      const char* what) {
  ctrl.validate();
  try {
    const SeriesSum<double> fast = eval(Field<double>{});
    if (fast.cancellation_bits() <= kDoubleCancellationBits) return fast.value;
  } catch (const RangeError&) {
  }
  const Field<BigFloat> wide{ctrl.escalation_bits()};
  const SeriesSum<BigFloat> slow = eval(wide);
  require_resolved(slow, wide.bits, what);
  const std::complex<double> v = to_double(slow.value);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw RangeError(std::string(what) + ": value exceeds the double range");
  }
  return v;
}

}  // namespace qharmonic

#endif  // QHARMONIC_SERIES_HPP_
