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

#ifndef QHARMONIC_HYPERSERIES_HPP_
#define QHARMONIC_HYPERSERIES_HPP_

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qharmonic/errors.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/scalar.hpp"
#include "qharmonic/series.hpp"

namespace qharmonic {

/// Parameters of a basic hypergeometric series r_phi_s(a; b | base; argument).
struct PhiSpec {
  std::vector<std::complex<double>> numerator;
  std::vector<std::complex<double>> denominator;
  double base = 0.5;
  std::complex<double> argument;

  /// N when some numerator parameter equals base^{-N}, N >= 0 (the series
  /// then has N+1 terms).
  std::optional<int> terminating_index() const {
    std::optional<int> best;
    for (const auto& a : numerator) {
      if (auto n = nonpositive_power(a)) {
        if (!best || -*n < *best) best = -*n;
      }
    }
    return best;
  }

  void validate() const {
    require_base(base);
    const auto r = numerator.size();
    const auto s = denominator.size();
    if (r > s + 1) {
      throw DomainError("phi_rs: needs r <= s+1, got r=" + std::to_string(r) +
                        ", s=" + std::to_string(s));
    }
    if (r == s + 1 && !(std::abs(argument) < 1.0) && !terminating_index()) {
      throw DomainError("phi_rs: r = s+1 requires |argument| < 1");
    }
    for (const auto& b : denominator) {
      if (nonpositive_power(b)) {
        throw DomainError("phi_rs: denominator parameter is base^{-k}");
      }
    }
  }

 private:
  // k <= 0 with v == base^k, if any.
  std::optional<int> nonpositive_power(std::complex<double> v) const {
    if (v.imag() != 0.0 || !(v.real() > 0.0)) return std::nullopt;
    const double e = std::log(v.real()) / std::log(base);
    const double k = std::round(e);
    if (k > 0.0 || std::fabs(e - k) > 1e-9 * std::max(1.0, std::fabs(e))) {
      return std::nullopt;
    }
    return static_cast<int>(k);
  }
};

/// Truncated r_phi_s at the precision of field. The k-th term is
///   [(-1)^k base^{k(k-1)/2}]^{1+s-r} (a;base)_k / (b;base)_k x^k / (base;base)_k
/// built from the ratio of consecutive terms.
template <class Real>
SeriesSum<Real> phi_rs_series(const Field<Real>& field, const PhiSpec& spec,
                              const SeriesControl& ctrl) {
  spec.validate();
  const int power = 1 + static_cast<int>(spec.denominator.size()) -
                    static_cast<int>(spec.numerator.size());
  const auto stop = spec.terminating_index();
  const Real q = field(spec.base);
  const Complex<Real> x = field.complex(spec.argument);
  const Complex<Real> one = field.complex(1.0);
  std::vector<Complex<Real>> a, b;
  for (const auto& v : spec.numerator) a.push_back(field.complex(v));
  for (const auto& v : spec.denominator) b.push_back(field.complex(v));

  SeriesSummer<Real> sum(field, ctrl, "phi_rs");
  Complex<Real> term = one;
  Real qk = field(1.0);
  for (int k = 0;; ++k) {
    const bool converged = sum.add(term);
    if (converged || (stop && k == *stop)) break;
    const Real qk1 = qk * q;
    Complex<Real> ratio = x / (field(1.0) - qk1);
    for (const auto& ai : a) ratio *= one - ai * qk;
    for (const auto& bj : b) ratio = ratio / (one - bj * qk);
    for (int i = 0; i < power; ++i) ratio *= -qk;
    term *= ratio;
    qk = qk1;
  }
  return sum.result();
}

/// Basic hypergeometric series, escalating to extended precision when the
/// double evaluation loses too many bits to cancellation.
inline std::complex<double> phi_rs(const PhiSpec& spec,
                                   const SeriesControl& ctrl = {}) {
  spec.validate();
  return evaluate_guarded(
      [&](const auto& field) { return phi_rs_series(field, spec, ctrl); },
      ctrl, "phi_rs");
}

/// True when x^nu needs the principal branch on the negative real axis.
inline bool q_bessel_on_branch_cut(double nu, std::complex<double> x) {
  return x.imag() == 0.0 && x.real() < 0.0 && nu != std::floor(nu);
}

/// q^2-analogue Bessel function
///   J_nu(x;q) = (q^{nu+1};q)_inf / (q;q)_inf x^nu 1_phi_1(0; q^{nu+1} | q; q^2 x^2),
/// with the principal branch of x^nu.
inline std::complex<double> q_bessel(double nu, std::complex<double> x,
                                     double q, const SeriesControl& ctrl = {}) {
  require_base(q);
  if (!(nu > -1.0)) throw DomainError("q_bessel: nu must be > -1");
  const double qnu = std::pow(q, nu + 1.0);
  const double prefactor =
      q_pochhammer_inf(qnu, q, ctrl) / q_pochhammer_inf(q, q, ctrl);
  std::complex<double> power;
  if (x == 0.0) {
    power = nu == 0.0 ? 1.0 : 0.0;
  } else {
    power = std::pow(x, nu);
  }
  const PhiSpec spec{{0.0}, {qnu}, q, q * q * x * x};
  return prefactor * power * phi_rs(spec, ctrl);
}

}  // namespace qharmonic

#endif  // QHARMONIC_HYPERSERIES_HPP_
