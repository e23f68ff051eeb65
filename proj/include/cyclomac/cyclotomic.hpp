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

// Exact arithmetic in the cyclotomic fields Q(zeta_L).
//
// An element is stored in the power basis {1, zeta, ..., zeta^(phi(L)-1)} and
// kept reduced modulo Phi_L, so two elements of the same level are equal iff
// their coefficient vectors are equal. Binary operations require operands of
// the same level; use common_level() to lift a pair first.

#ifndef CYCLOMAC_CYCLOTOMIC_HPP
#define CYCLOMAC_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace cyclomac {

class LevelMismatch : public Error {
   public:
    LevelMismatch(long a, long b)
        : Error("cyclotomic level mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NotRational;

namespace detail {

// Per-level data shared by every element of Q(zeta_L).
struct FieldTable {
    long level = 1;
    std::size_t degree = 1;
    // Phi_L as small integers, ascending, monic; only nonzero entries kept.
    std::vector<std::pair<std::size_t, long>> modulus;
    // Reduced power-basis vectors of zeta^e for 0 <= e < level.
    std::vector<std::vector<Rational>> powers;

    void reduce(std::vector<Rational>& v) const {
        for (std::size_t i = v.size(); i-- > degree;) {
            if (is_zero(v[i])) continue;
            Rational c = v[i];
            for (auto [j, m] : modulus)
                if (j < degree) v[i - degree + j] -= c * m;
            v[i] = 0;
        }
        v.resize(degree);
    }
};

inline std::shared_ptr<const FieldTable> field_table(long level) {
    if (level < 1) throw std::invalid_argument("cyclotomic level must be positive");
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const FieldTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(level); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<FieldTable>();
    table->level = level;
    const Polynomial& phi = cyclotomic_poly(level);
    table->degree = static_cast<std::size_t>(phi.degree());
    for (std::size_t j = 0; j < phi.coeffs().size(); ++j) {
        if (is_zero(phi.coeffs()[j])) continue;
        table->modulus.emplace_back(j, phi.coeffs()[j].get_num().get_si());
    }
    std::vector<Rational> cur(table->degree);
    cur[0] = 1;
    table->powers.reserve(static_cast<std::size_t>(level));
    for (long e = 0; e < level; ++e) {
        table->powers.push_back(cur);
        // multiply by zeta
        std::vector<Rational> next(table->degree + 1);
        for (std::size_t i = 0; i < table->degree; ++i) next[i + 1] = cur[i];
        table->reduce(next);
        cur = std::move(next);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(level, std::move(table)).first->second;
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_L), zeta_L = exp(2 pi i / L).
class CycNum {
   public:
    /// Zero at level 1.
    CycNum() : CycNum(1) {}

    /// Zero at the given level.
    explicit CycNum(long level) : table_(detail::field_table(level)), coeffs_(table_->degree) {}

    /// The rational c viewed at the given level.
    CycNum(long level, const Rational& c) : CycNum(level) { coeffs_[0] = c; }

    /// Sum of c_e zeta_L^e over the map; exponents are reduced mod L.
    static CycNum from_exponents(long level, const std::map<long, Rational>& terms) {
        CycNum out(level);
        for (const auto& [e, c] : terms) out.add_root_multiple(e, c);
        return out;
    }

    /// zeta_L^e.
    static CycNum root_of_unity(long level, long e) {
        CycNum out(level);
        out.coeffs_ = out.table_->powers[static_cast<std::size_t>(mod(e, level))];
        return out;
    }

    long level() const { return table_->level; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!cyclomac::is_zero(c)) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!cyclomac::is_zero(coeffs_[i])) return false;
        return true;
    }

    /// The rational value; throws NotRational otherwise.
    Rational to_rational() const;

    /// this += c * zeta^e, in place.
    void add_root_multiple(long e, const Rational& c) {
        if (cyclomac::is_zero(c)) return;
        const auto& p = table_->powers[static_cast<std::size_t>(mod(e, level()))];
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!cyclomac::is_zero(p[i])) coeffs_[i] += c * p[i];
    }

    /// this += c * other, in place (same level).
    void add_scaled(const CycNum& other, const Rational& c) {
        check_level(other);
        if (cyclomac::is_zero(c)) return;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!cyclomac::is_zero(other.coeffs_[i])) coeffs_[i] += c * other.coeffs_[i];
    }

    CycNum& operator+=(const CycNum& rhs) {
        check_level(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CycNum& operator-=(const CycNum& rhs) {
        check_level(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    CycNum& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    CycNum& operator*=(const CycNum& rhs) { return *this = *this * rhs; }
    CycNum& operator/=(const CycNum& rhs) { return *this = *this * rhs.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator-(CycNum a) { return a *= Rational(-1); }
    friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
    friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        a.check_level(b);
        const std::size_t d = a.coeffs_.size();
        if (d == 1) return CycNum(a.level(), a.coeffs_[0] * b.coeffs_[0]);
        std::vector<Rational> v(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (cyclomac::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (cyclomac::is_zero(b.coeffs_[j])) continue;
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        a.table_->reduce(v);
        CycNum out(a.table_);
        out.coeffs_ = std::move(v);
        return out;
    }

    /// Multiplicative inverse, via the extended gcd of the representing
    /// polynomial with Phi_L.
    CycNum inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return CycNum(level(), cyclomac::inverse(coeffs_[0]));
        auto [g, s, t] = ext_gcd(Polynomial(coeffs_), cyclotomic_poly(level()));
        // g is a nonzero constant because Phi_L is irreducible; ext_gcd makes it 1.
        CycNum out(table_);
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) out.coeffs_[i] = s.coeffs()[i];
        return out;
    }

    /// The same number represented in Q(zeta_M); requires level() | M.
    CycNum embed(long new_level) const {
        if (new_level % level() != 0)
            throw Error("cannot embed level " + std::to_string(level()) + " into level " +
                        std::to_string(new_level));
        if (new_level == level()) return *this;
        long step = new_level / level();
        CycNum out(new_level);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add_root_multiple(static_cast<long>(i) * step, coeffs_[i]);
        return out;
    }

    /// Inverse of embed: the representation at a level dividing level(), or
    /// nullopt when the number does not lie in that subfield.
    std::optional<CycNum> project(long small_level) const;

    /// The automorphism zeta -> zeta^s; requires gcd(s, L) = 1.
    CycNum galois(long s) const {
        if (std::gcd(mod(s, level()), level()) != 1)
            throw Error("galois: exponent " + std::to_string(s) + " is not coprime to level " +
                        std::to_string(level()));
        CycNum out(table_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add_root_multiple(static_cast<long>(i) * s, coeffs_[i]);
        return out;
    }

    /// Complex conjugate.
    CycNum conj() const { return galois(-1); }

    /// Value equality; elements of different levels are compared at their lcm.
    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (a.level() == b.level()) return a.coeffs_ == b.coeffs_;
        long l = std::lcm(a.level(), b.level());
        return a.embed(l).coeffs_ == b.embed(l).coeffs_;
    }

    friend bool operator==(const CycNum& a, const Rational& r) { return a.is_rational() && a.coeffs_[0] == r; }

    /// Exact text form in the power basis, e.g. "1/9*zeta_3 + 1/18".
    std::string to_string() const {
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
            out += "zeta_" + std::to_string(level());
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

   private:
    explicit CycNum(std::shared_ptr<const detail::FieldTable> table)
        : table_(std::move(table)), coeffs_(table_->degree) {}

    void check_level(const CycNum& other) const {
        if (table_->level != other.table_->level) throw LevelMismatch(level(), other.level());
    }

    std::shared_ptr<const detail::FieldTable> table_;
    std::vector<Rational> coeffs_;
};

class NotRational : public Error {
   public:
    explicit NotRational(const CycNum& value)
        : Error("value is not rational: " + value.to_string()), value_(value) {}
    const CycNum& value() const { return value_; }

   private:
    CycNum value_;
};

inline Rational CycNum::to_rational() const {
    if (!is_rational()) throw NotRational(*this);
    return coeffs_[0];
}

inline std::optional<CycNum> CycNum::project(long small_level) const {
    if (level() % small_level != 0)
        throw Error("cannot project level " + std::to_string(level()) + " onto level " +
                    std::to_string(small_level));
    if (small_level == level()) return *this;
    // Solve embed(x) = *this by Gaussian elimination on the (injective) embedding map.
    const std::size_t rows = coeffs_.size();
    const std::size_t cols = static_cast<std::size_t>(euler_phi(small_level));
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        CycNum basis = CycNum::root_of_unity(small_level, static_cast<long>(j)).embed(level());
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && cyclomac::is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = cyclomac::inverse(m[r][c]);
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || cyclomac::is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!cyclomac::is_zero(m[i][cols])) return std::nullopt;
    CycNum out(small_level);
    for (std::size_t i = 0; i < r; ++i) out.coeffs_[pivot_col[i]] = m[i][cols];
    return out;
}

inline bool is_zero(const CycNum& c) { return c.is_zero(); }
inline CycNum zero_like(const CycNum& c) { return CycNum(c.level()); }
inline CycNum one_like(const CycNum& c) { return CycNum(c.level(), 1); }
inline CycNum inverse(const CycNum& c) { return c.inverse(); }
inline std::string to_string(const CycNum& c) { return c.to_string(); }

/// Both operands lifted to the lcm of their levels.
inline std::pair<CycNum, CycNum> common_level(const CycNum& a, const CycNum& b) {
    long l = std::lcm(a.level(), b.level());
    return {a.embed(l), b.embed(l)};
}

/// Integer power; negative exponents invert.
inline CycNum pow(const CycNum& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    CycNum result = one_like(base);
    CycNum b = base;
    while (e != 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_CYCLOTOMIC_HPP
