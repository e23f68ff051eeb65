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

// Elementary arithmetic functions on machine integers. Trial division is
// plenty for the moduli this library works with.

#ifndef CYCLOMAC_ARITH_HPP
#define CYCLOMAC_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cyclomac {

/// Prime factorization as (p, exponent) pairs in increasing p.
inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Positive divisors of n in increasing order.
inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(long n) {
    int result = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

inline long euler_phi(long n) {
    long result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

/// Exponent of the unit group (Z/n)^x (Carmichael's function).
inline long unit_group_exponent(long n) {
    long result = 1;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long local = pe / p * (p - 1);
        if (p == 2 && e >= 3) local /= 2;
        result = std::lcm(result, local);
    }
    return result;
}

/// Least nonnegative residue of a modulo n.
inline long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long powmod(long base, long e, long n) {
    long result = 1 % n;
    long b = mod(base, n);
    while (e > 0) {
        if (e & 1) result = static_cast<long>(static_cast<__int128>(result) * b % n);
        b = static_cast<long>(static_cast<__int128>(b) * b % n);
        e >>= 1;
    }
    return result;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Binomial coefficient; zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(long base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), e);
    return r;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_ARITH_HPP
