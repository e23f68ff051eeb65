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

// Dirichlet characters modulo N, built from a cyclic decomposition of the
// unit group (Z/N)^x, together with Gauss sums and the expansion of a root
// of unity zeta_N^m in Gauss sums.

#ifndef CYCLOMAC_DIRICHLET_HPP
#define CYCLOMAC_DIRICHLET_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"

namespace cyclomac {

/// One cyclic factor of (Z/N)^x: a generator (as a residue mod N) and its order.
struct UnitGenerator {
    long residue;
    long order;
};

namespace detail {

inline long primitive_root_mod_prime(long p) {
    if (p == 2) return 1;
    const auto fac = factorize(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root mod " + std::to_string(p));
}

// Lift r mod pe to N, congruent to 1 modulo N/pe.
inline long crt_lift(long r, long pe, long n) {
    long other = n / pe;
    for (long x = mod(r, pe); x < n; x += pe)
        if (mod(x, other) == 1 % other) return x;
    throw Error("crt_lift failed");
}

}  // namespace detail

/// Generators of (Z/N)^x: primitive roots for odd prime powers, -1 and 5 for
/// 2^k (k >= 3), -1 for 4; lifted to N by the Chinese remainder theorem.
/// Trivial factors (order 1) are omitted.
inline std::vector<UnitGenerator> unit_group_generators(long n) {
    std::vector<UnitGenerator> gens;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e >= 2) gens.push_back({detail::crt_lift(pe - 1, pe, n), 2});
            if (e >= 3) gens.push_back({detail::crt_lift(5, pe, n), pe / 4});
            continue;
        }
        long g = detail::primitive_root_mod_prime(p);
        if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
        gens.push_back({detail::crt_lift(g, pe, n), pe / p * (p - 1)});
    }
    return gens;
}

/// A Dirichlet character modulo N.
///
/// Values are roots of unity of order dividing e, the exponent of (Z/N)^x,
/// and are stored at cyclotomic level e: value(a) = zeta_e^log(a), or 0 when
/// gcd(a, N) > 1. The character is identified by its exponent tuple on the
/// unit-group generators; index() is that tuple read in mixed radix.
class DirichletCharacter {
   public:
    DirichletCharacter(long modulus, std::vector<long> generator_exponents, std::vector<int> logs, long level,
                       std::size_t index)
        : modulus_(modulus),
          level_(level),
          index_(index),
          exponents_(std::move(generator_exponents)),
          logs_(std::move(logs)) {
        values_.reserve(logs_.size());
        for (int l : logs_) values_.push_back(l < 0 ? CycNum(level_) : CycNum::root_of_unity(level_, l));
        conductor_ = compute_conductor();
    }

    long modulus() const { return modulus_; }
    /// Cyclotomic level of the stored values (exponent of the unit group).
    long level() const { return level_; }
    std::size_t index() const { return index_; }
    const std::vector<long>& generator_exponents() const { return exponents_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_; }
    bool is_principal() const { return conductor_ == 1; }

    /// chi(-1), either +1 or -1.
    int parity() const { return logs_[static_cast<std::size_t>(mod(-1, modulus_))] == 0 ? 1 : -1; }

    /// chi(a) at level().
    const CycNum& value(long a) const { return values_[static_cast<std::size_t>(mod(a, modulus_))]; }

    /// Exponent l with chi(a) = zeta_level^l, or -1 when chi(a) = 0.
    int log(long a) const { return logs_[static_cast<std::size_t>(mod(a, modulus_))]; }

    const std::vector<CycNum>& values() const { return values_; }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.logs_ == b.logs_;
    }

    /// Short label, e.g. "chi[12](0,1)".
    std::string label() const {
        std::string s = "chi[" + std::to_string(modulus_) + "](";
        for (std::size_t i = 0; i < exponents_.size(); ++i) s += (i ? "," : "") + std::to_string(exponents_[i]);
        return s + ")";
    }

   private:
    long compute_conductor() const {
        for (long f : divisors(modulus_)) {
            bool trivial_on_kernel = true;
            for (long a = 1; a < modulus_ + 1 && trivial_on_kernel; a += f)
                if (std::gcd(a, modulus_) == 1 && logs_[static_cast<std::size_t>(mod(a, modulus_))] != 0)
                    trivial_on_kernel = false;
            if (trivial_on_kernel) return f;
        }
        return modulus_;
    }

    long modulus_;
    long level_;
    std::size_t index_;
    long conductor_ = 1;
    std::vector<long> exponents_;
    std::vector<int> logs_;
    std::vector<CycNum> values_;
};

namespace detail {

inline std::vector<DirichletCharacter> build_characters(long n) {
    const auto gens = unit_group_generators(n);
    const long level = unit_group_exponent(n);
    // Discrete-log table: for each unit a, its exponent tuple on the generators.
    std::vector<std::vector<long>> dlog(static_cast<std::size_t>(n));
    std::vector<bool> is_unit(static_cast<std::size_t>(n), false);
    {
        std::vector<long> tuple(gens.size(), 0);
        while (true) {
            long a = 1 % n;
            for (std::size_t i = 0; i < gens.size(); ++i)
                a = static_cast<long>(static_cast<__int128>(a) * powmod(gens[i].residue, tuple[i], n) % n);
            dlog[static_cast<std::size_t>(a)] = tuple;
            is_unit[static_cast<std::size_t>(a)] = true;
            std::size_t i = 0;
            while (i < gens.size() && ++tuple[i] == gens[i].order) tuple[i++] = 0;
            if (i == gens.size()) break;
        }
    }
    std::vector<DirichletCharacter> out;
    std::vector<long> exps(gens.size(), 0);
    std::size_t index = 0;
    // Enumerate exponent tuples with the last generator varying slowest, so
    // that the index is the tuple read in mixed radix (first digit least significant).
    while (true) {
        std::vector<int> logs(static_cast<std::size_t>(n), -1);
        for (long a = 0; a < n; ++a) {
            if (!is_unit[static_cast<std::size_t>(a)]) continue;
            long l = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                l += exps[i] * dlog[static_cast<std::size_t>(a)][i] * (level / gens[i].order);
            logs[static_cast<std::size_t>(a)] = static_cast<int>(mod(l, level));
        }
        out.emplace_back(n, exps, std::move(logs), level, index++);
        std::size_t i = 0;
        while (i < gens.size() && ++exps[i] == gens[i].order) exps[i++] = 0;
        if (i == gens.size()) break;
    }
    return out;
}

}  // namespace detail

/// All phi(N) characters modulo N in index order; the principal character is
/// first. Memoized per modulus; the returned reference stays valid.
inline const std::vector<DirichletCharacter>& enumerate_characters(long n) {
    if (n < 1) throw std::invalid_argument("enumerate_characters: N must be positive");
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<const std::vector<DirichletCharacter>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto chars = std::make_unique<const std::vector<DirichletCharacter>>(detail::build_characters(n));
    std::lock_guard lock(mutex);
    return *cache.emplace(n, std::move(chars)).first->second;
}

inline const DirichletCharacter& principal_character(long n) { return enumerate_characters(n).front(); }

/// Looks a character up among enumerate_characters(modulus) by value table.
inline const DirichletCharacter& find_character(long modulus, const std::vector<int>& logs_at_exponent_level) {
    for (const auto& chi : enumerate_characters(modulus)) {
        bool same = true;
        for (long a = 0; a < modulus && same; ++a)
            same = chi.log(a) == logs_at_exponent_level[static_cast<std::size_t>(a)];
        if (same) return chi;
    }
    throw Error("no character mod " + std::to_string(modulus) + " has the requested value table");
}

/// The complex-conjugate character.
inline const DirichletCharacter& conjugate(const DirichletCharacter& chi) {
    const auto& all = enumerate_characters(chi.modulus());
    const auto gens = unit_group_generators(chi.modulus());
    std::size_t index = 0, radix = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        index += static_cast<std::size_t>(mod(-chi.generator_exponents()[i], gens[i].order)) * radix;
        radix *= static_cast<std::size_t>(gens[i].order);
    }
    return all[index];
}

/// The character modulo M (a multiple of the modulus of chi) that agrees with
/// chi on residues coprime to M.
inline const DirichletCharacter& induced_character(const DirichletCharacter& chi, long m) {
    if (m % chi.modulus() != 0)
        throw Error("induced_character: modulus " + std::to_string(chi.modulus()) + " does not divide " +
                    std::to_string(m));
    const long level = unit_group_exponent(m);
    const long scale = level / chi.level();
    std::vector<int> logs(static_cast<std::size_t>(m), -1);
    for (long a = 0; a < m; ++a)
        if (std::gcd(a, m) == 1) logs[static_cast<std::size_t>(a)] = static_cast<int>(chi.log(a) * scale);
    return find_character(m, logs);
}

/// The primitive character inducing chi (its modulus is the conductor).
inline const DirichletCharacter& primitive_character(const DirichletCharacter& chi) {
    const long f = chi.conductor();
    for (const auto& cand : enumerate_characters(f)) {
        if (!cand.is_primitive()) continue;
        bool same = true;
        for (long a = 1; a < chi.modulus() && same; ++a)
            if (std::gcd(a, chi.modulus()) == 1) same = cand.value(a) == chi.value(a);
        if (same) return cand;
    }
    throw Error("no primitive character induces " + chi.label());
}

/// Gauss sum G(chi) = sum_{a=1}^{N} chi(a) zeta_N^a, at level lcm(N, level(chi)).
inline CycNum gauss_sum(const DirichletCharacter& chi) {
    const long n = chi.modulus();
    const long level = std::lcm(n, chi.level());
    std::map<long, Rational> terms;
    for (long a = 1; a <= n; ++a) {
        int l = chi.log(a);
        if (l < 0) continue;
        terms[mod(l * (level / chi.level()) + a * (level / n), level)] += 1;
    }
    return CycNum::from_exponents(level, terms);
}

/// One summand G(chi) conj(chi(m/g)) / phi(N/g) of the Gauss-sum expansion of zeta_N^m.
struct RootExpansionTerm {
    std::size_t character_index;  // among enumerate_characters(N/g)
    CycNum value;
};

/// zeta_N^m = (1/phi(N/g)) sum_{chi mod N/g} G(chi) conj(chi(m/g)), g = gcd(N, m).
/// Returns one summand per character mod N/g; their sum is exactly zeta_N^m.
inline std::vector<RootExpansionTerm> zeta_power_expand(long n, long m) {
    const long g = std::gcd(n, m);
    const long reduced = n / g;
    const Rational scale = make_rational(1, euler_phi(reduced));
    std::vector<RootExpansionTerm> out;
    for (const auto& chi : enumerate_characters(reduced)) {
        CycNum gs = gauss_sum(chi);
        CycNum conj_value = chi.value(m / g).conj().embed(gs.level());
        out.push_back({chi.index(), gs * conj_value * scale});
    }
    return out;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_DIRICHLET_HPP
