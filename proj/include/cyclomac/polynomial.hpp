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

#ifndef CYCLOMAC_POLYNOMIAL_HPP
#define CYCLOMAC_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "rational.hpp"

namespace cyclomac {

/// Univariate polynomial with rational coefficients, indexed by degree.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector.
class Polynomial {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    static Polynomial monomial(std::size_t degree, const Rational& c = 1) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    const Rational& leading() const { return coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (cyclomac::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero();
        std::vector<Rational> rem = a.coeffs_;
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::size_t db = b.coeffs_.size() - 1;
        std::vector<Rational> quot(rem.size() - db);
        Rational lead_inv = inverse(b.leading());
        for (std::size_t i = rem.size(); i-- > db;) {
            if (cyclomac::is_zero(rem[i])) continue;
            Rational f = rem[i] * lead_inv;
            quot[i - db] = f;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Evaluation by Horner's rule. Works for any scalar type that mixes with
    /// Rational (Rational itself, or a cyclotomic number).
    template <class S>
    S operator()(const S& x) const {
        S acc = zero_like(x);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x;
            acc = acc + coeffs_[i] * one_like(x);
        }
        return acc;
    }

    Polynomial derivative(unsigned order = 1) const {
        std::vector<Rational> v = coeffs_;
        for (unsigned o = 0; o < order && !v.empty(); ++o) {
            for (std::size_t i = 1; i < v.size(); ++i) v[i - 1] = v[i] * static_cast<long>(i);
            v.pop_back();
        }
        return Polynomial(std::move(v));
    }

    /// Coefficients of p(c + y) in y, i.e. the Taylor data p^{(m)}(c)/m!.
    Polynomial taylor_shift(const Rational& c) const {
        std::vector<Rational> v = coeffs_;
        // Repeated synthetic division by (x - c).
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            for (std::size_t j = v.size() - 1; j > i; --j) v[j - 1] += c * v[j];
        return Polynomial(std::move(v));
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = Polynomial::constant(1);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// x^d p(1/x), the coefficient reversal relative to a declared degree d.
    /// Requires d >= degree().
    Polynomial reversed(std::size_t d) const {
        std::vector<Rational> v(d + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[d - i] = coeffs_[i];
        return Polynomial(std::move(v));
    }

    /// p(x^n).
    Polynomial substitute_power(std::size_t n) const {
        if (is_zero()) return {};
        std::vector<Rational> v((coeffs_.size() - 1) * n + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * n] = coeffs_[i];
        return Polynomial(std::move(v));
    }

    /// Canonical text form in ascending degree, e.g. "-x + 1/2*x^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (cyclomac::is_zero(c)) continue;
            Rational mag = abs(c);
            if (out.empty())
                out += sgn(c) < 0 ? "-" : "";
            else
                out += sgn(c) < 0 ? " - " : " + ";
            if (i == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) out += mag.get_str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && cyclomac::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Polynomial, Polynomial, Polynomial> ext_gcd(Polynomial a, Polynomial b) {
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    Rational li = inverse(a.leading());
    return {a * li, s0 * li, t0 * li};
}

/// The N-th cyclotomic polynomial, by exact division of x^N - 1 by Phi_d for
/// every proper divisor d. Results are memoized; safe to call concurrently.
inline const Polynomial& cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<const Polynomial>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    Polynomial p = Polynomial::monomial(static_cast<std::size_t>(n)) - Polynomial::constant(1);
    for (long d : divisors(n)) {
        if (d == n) break;
        auto [q, r] = divmod(p, cyclotomic_poly(d));
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::make_unique<const Polynomial>(std::move(p)));
    return *it->second;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_POLYNOMIAL_HPP
