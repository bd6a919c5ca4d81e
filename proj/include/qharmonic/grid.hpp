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

#ifndef QHARMONIC_GRID_HPP_
#define QHARMONIC_GRID_HPP_

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qharmonic/errors.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/scalar.hpp"

namespace qharmonic {

/// Exponent range [n_min, n_max] of the symmetric grid {+q^n, -q^n}.
struct GridWindow {
  int n_min = 0;
  int n_max = 0;

  void validate() const {
    if (n_min > n_max) {
      throw WindowError("grid window needs n_min <= n_max, got [" +
                        std::to_string(n_min) + ", " + std::to_string(n_max) +
                        "]");
    }
  }
  int size() const { return n_max - n_min + 1; }
  bool contains(int n) const { return n >= n_min && n <= n_max; }
  bool contains(const GridWindow& w) const {
    return w.n_min >= n_min && w.n_max <= n_max;
  }
  friend bool operator==(const GridWindow&, const GridWindow&) = default;
};

/// q^n at the precision of field.
template <class Real>
Real grid_point(const Field<Real>& field, double q, int n) {
  using std::pow;
  return pow(field(q), n);
}

inline bool is_finite_value(const std::complex<double>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
inline bool is_finite_value(const BasicComplex<BigFloat>& z) {
  return z.re.is_finite() && z.im.is_finite();
}

/// Complex-valued function sampled on {+q^n, -q^n : n in window}.
/// Immutable after construction.
template <class Real>
class BasicGridFunction {
 public:
  using value_type = Complex<Real>;

  BasicGridFunction(const QParams& params, const GridWindow& window,
                    std::vector<value_type> pos, std::vector<value_type> neg)
      : params_(params),
        window_(window),
        pos_(std::move(pos)),
        neg_(std::move(neg)) {
    window_.validate();
    const auto n = static_cast<std::size_t>(window_.size());
    if (pos_.size() != n || neg_.size() != n) {
      throw WindowError("grid function needs " + std::to_string(n) +
                        " values per branch");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_finite_value(pos_[i]) || !is_finite_value(neg_[i])) {
        throw DomainError("grid function values must be finite");
      }
    }
  }

  static BasicGridFunction zeros(const QParams& params,
                                 const GridWindow& window,
                                 const Field<Real>& field = {}) {
    window.validate();
    std::vector<value_type> z(window.size(), field.complex(0.0));
    return BasicGridFunction(params, window, z, z);
  }

  /// Samples fn(x) at x = +q^n and x = -q^n (x passed as Real).
  template <class Fn>
  static BasicGridFunction sample(const QParams& params,
                                  const GridWindow& window, Fn&& fn,
                                  const Field<Real>& field = {}) {
    window.validate();
    std::vector<value_type> pos, neg;
    pos.reserve(window.size());
    neg.reserve(window.size());
    for (int n = window.n_min; n <= window.n_max; ++n) {
      const Real x = grid_point(field, params.q(), n);
      pos.push_back(fn(x));
      neg.push_back(fn(-x));
    }
    return BasicGridFunction(params, window, std::move(pos), std::move(neg));
  }

  const QParams& params() const { return params_; }
  const GridWindow& window() const { return window_; }
  const std::vector<value_type>& pos_values() const { return pos_; }
  const std::vector<value_type>& neg_values() const { return neg_; }

  /// Value at +q^n.
  const value_type& pos(int n) const { return pos_[index(n)]; }
  /// Value at -q^n.
  const value_type& neg(int n) const { return neg_[index(n)]; }
  /// Value at sign * q^n, sign in {+1, -1}.
  const value_type& at(int sign, int n) const {
    return sign > 0 ? pos(n) : neg(n);
  }

  friend BasicGridFunction operator+(const BasicGridFunction& a,
                                     const BasicGridFunction& b) {
    return combine(a, b, [](const value_type& u, const value_type& v) {
      return u + v;
    });
  }
  friend BasicGridFunction operator-(const BasicGridFunction& a,
                                     const BasicGridFunction& b) {
    return combine(a, b, [](const value_type& u, const value_type& v) {
      return u - v;
    });
  }
  friend BasicGridFunction operator*(const value_type& c,
                                     const BasicGridFunction& f) {
    std::vector<value_type> pos, neg;
    for (const auto& v : f.pos_) pos.push_back(c * v);
    for (const auto& v : f.neg_) neg.push_back(c * v);
    return BasicGridFunction(f.params_, f.window_, std::move(pos),
                             std::move(neg));
  }

 private:
  std::size_t index(int n) const {
    if (!window_.contains(n)) {
      throw WindowError("exponent " + std::to_string(n) +
                        " outside grid window");
    }
    return static_cast<std::size_t>(n - window_.n_min);
  }

  template <class Op>
  static BasicGridFunction combine(const BasicGridFunction& a,
                                   const BasicGridFunction& b, Op op) {
    if (!(a.window_ == b.window_) || !(a.params_ == b.params_)) {
      throw WindowError("grid functions live on different grids");
    }
    std::vector<value_type> pos, neg;
    for (std::size_t i = 0; i < a.pos_.size(); ++i) {
      pos.push_back(op(a.pos_[i], b.pos_[i]));
      neg.push_back(op(a.neg_[i], b.neg_[i]));
    }
    return BasicGridFunction(a.params_, a.window_, std::move(pos),
                             std::move(neg));
  }

  QParams params_;
  GridWindow window_;
  std::vector<value_type> pos_;
  std::vector<value_type> neg_;
};

using GridFunction = BasicGridFunction<double>;

/// Arithmetic context matching the precision of the stored samples.
inline Field<double> field_of(const BasicGridFunction<double>&) { return {}; }
inline Field<BigFloat> field_of(const BasicGridFunction<BigFloat>& f) {
  return {precision_of(f.pos_values().front())};
}

/// f = even + odd, with even(-x) = even(x) and odd(-x) = -odd(x).
template <class Real>
struct BasicEvenOddParts {
  BasicGridFunction<Real> even;
  BasicGridFunction<Real> odd;
};

using EvenOddParts = BasicEvenOddParts<double>;

}  // namespace qharmonic

#endif  // QHARMONIC_GRID_HPP_
