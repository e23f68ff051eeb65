/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOMAC_QSERIES_HPP
#define CYCLOMAC_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace cyclomac {

/// Power series in q truncated after q^M. Coefficients are Rational or
/// CycNum; every CycNum coefficient of one series shares a level.
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Nothing beyond index M is ever read or written.
template <class C>
class QSeries {
   public:
    using coefficient_type = C;

    /// Zero series of order M; `zero` fixes the coefficient level for CycNum.
    explicit QSeries(std::size_t order, const C& zero = C()) : coeffs_(order + 1, zero_like(zero)) {}

    explicit QSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least the q^0 coefficient");
    }

    /// The constant series c.
    static QSeries constant(std::size_t order, const C& c) {
        QSeries s(order, c);
        s.coeffs_[0] = c;
        return s;
    }

    /// Truncated expansion of a polynomial, with coefficients converted via `like`.
    static QSeries from_polynomial(const Polynomial& p, std::size_t order, const C& like = C()) {
        QSeries s(order, like);
        for (std::size_t i = 0; i < p.coeffs().size() && i <= order; ++i) s.coeffs_[i] = p.coeffs()[i] * one_like(like);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](std::size_t i) const { return coeffs_.at(i); }
    C& operator[](std::size_t i) { return coeffs_.at(i); }

    /// Least exponent with a nonzero coefficient; order()+1 for the zero series.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return i;
        return coeffs_.size();
    }

    QSeries truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return QSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    QSeries& operator+=(const QSeries& rhs) {
        shrink_to(rhs.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    QSeries& operator-=(const QSeries& rhs) {
        shrink_to(rhs.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    template <class S>
    QSeries& operator*=(const S& scalar) {
        for (auto& c : coeffs_) c *= scalar;
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator-(QSeries a) { return a *= Rational(-1); }

    /// Truncated Cauchy product; zero coefficients of either factor are skipped,
    /// which makes products with sparse series (e.g. f(q^n)) cheap.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t m = std::min(a.order(), b.order());
        QSeries out(m, a.coeffs_[0]);
        for (std::size_t i = 0; i <= m; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= m; ++j) {
                if (is_zero(b.coeffs_[j])) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    QSeries& operator*=(const QSeries& rhs) { return *this = *this * rhs; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void shrink_to(std::size_t order) {
        if (order < this->order()) coeffs_.resize(order + 1);
    }

    std::vector<C> coeffs_;
};

/// Multiplicative inverse up to the series order; requires a(0) != 0.
template <class C>
QSeries<C> series_inv(const QSeries<C>& a) {
    if (is_zero(a[0])) throw Error("series_inv: constant term is not a unit");
    const std::size_t m = a.order();
    QSeries<C> out(m, a[0]);
    const C c0_inv = inverse(a[0]);
    out[0] = c0_inv;
    for (std::size_t n = 1; n <= m; ++n) {
        C acc = zero_like(a[0]);
        for (std::size_t i = 1; i <= n; ++i) {
            if (is_zero(a[i])) continue;
            acc += a[i] * out[n - i];
        }
        out[n] = -(acc * c0_inv);
    }
    return out;
}

/// Non-negative integer power of a series.
template <class C>
QSeries<C> series_pow(const QSeries<C>& a, unsigned e) {
    QSeries<C> result = QSeries<C>::constant(a.order(), one_like(a[0]));
    QSeries<C> base = a;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

/// f(q^n) truncated at the given order.
template <class C>
QSeries<C> substitute_qn(const QSeries<C>& f, std::size_t n, std::size_t order) {
    if (n == 0) throw std::invalid_argument("substitute_qn: n must be positive");
    QSeries<C> out(order, f[0]);
    for (std::size_t i = 0; i <= f.order() && i * n <= order; ++i) out[i * n] = f[i];
    if (f.order() * n < order) {
        // The source is only known through q^(order(f)); exponents past that are unknown.
        return out.truncated(f.order() * n + n - 1 < order ? f.order() * n + n - 1 : order);
    }
    return out;
}

/// p(q^n) truncated at the given order.
inline QSeries<Rational> substitute_qn(const Polynomial& p, std::size_t n, std::size_t order) {
    if (n == 0) throw std::invalid_argument("substitute_qn: n must be positive");
    QSeries<Rational> out(order);
    for (std::size_t i = 0; i < p.coeffs().size() && i * n <= order; ++i) out[i * n] = p.coeffs()[i];
    return out;
}

/// Every coefficient converted with CycNum::to_rational (throws NotRational).
inline QSeries<Rational> to_rational(const QSeries<CycNum>& s) {
    std::vector<Rational> v;
    v.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) v.push_back(c.to_rational());
    return QSeries<Rational>(std::move(v));
}

/// Rational series viewed over Q(zeta_L).
inline QSeries<CycNum> to_cyclotomic(const QSeries<Rational>& s, long level) {
    std::vector<CycNum> v;
    v.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) v.emplace_back(level, c);
    return QSeries<CycNum>(std::move(v));
}

inline QSeries<CycNum> embed(const QSeries<CycNum>& s, long level) {
    std::vector<CycNum> v;
    v.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) v.push_back(c.embed(level));
    return QSeries<CycNum>(std::move(v));
}

}  // namespace cyclomac

#endif  // CYCLOMAC_QSERIES_HPP
