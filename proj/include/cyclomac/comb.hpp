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

#ifndef CYCLOMAC_COMB_HPP
#define CYCLOMAC_COMB_HPP

#include <map>
#include <mutex>
#include <vector>

#include "arith.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace cyclomac {

/// Unsigned Stirling number of the first kind: the coefficient of x^k in the
/// rising factorial x(x+1)...(x+n-1). Rows are memoized behind a mutex.
inline Integer stirling_first_unsigned(unsigned n, unsigned k) {
    if (k > n) return 0;
    static std::mutex mutex;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    std::lock_guard lock(mutex);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        const std::size_t m = rows.size();  // building row m from row m-1
        std::vector<Integer> row(m + 1);
        for (std::size_t j = 1; j <= m; ++j) {
            Integer v = prev.size() > j - 1 ? prev[j - 1] : Integer(0);
            if (j < prev.size()) v += Integer(static_cast<unsigned long>(m - 1)) * prev[j];
            row[j] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

/// Eulerian polynomial P_k, characterized by
///   P_k(x) / (1 - x)^(k+1) = sum_{n >= 1} n^k x^(n-1).
/// Built by P_k = (1 + (k-1)x) P_{k-1} + x(1 - x) P'_{k-1}, P_0 = 1.
inline Polynomial eulerian_poly(unsigned k) {
    Polynomial p = Polynomial::constant(1);
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial x_one_minus_x = x - x * x;
    for (unsigned i = 1; i <= k; ++i) {
        Polynomial lead = Polynomial::constant(1) + x * Rational(static_cast<long>(i) - 1);
        p = lead * p + x_one_minus_x * p.derivative();
    }
    return p;
}

/// A partition of a positive integer, stored as part multiplicities.
struct Partition {
    std::map<unsigned, unsigned> multiplicities;  // part size s -> m_{lambda,s}

    unsigned total() const {
        unsigned n = 0;
        for (auto [s, m] : multiplicities) n += s * m;
        return n;
    }

    unsigned multiplicity(unsigned s) const {
        auto it = multiplicities.find(s);
        return it == multiplicities.end() ? 0 : it->second;
    }

    /// Parts in weakly decreasing order.
    std::vector<unsigned> parts() const {
        std::vector<unsigned> out;
        for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it)
            out.insert(out.end(), it->second, it->first);
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        for (unsigned s : parts) ++p.multiplicities[s];
        out.push_back(std::move(p));
        return;
    }
    for (unsigned s = std::min(remaining, max_part); s >= 1; --s) {
        parts.push_back(s);
        partitions_rec(remaining - s, s, parts, out);
        parts.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, in lexicographically decreasing order of their
/// weakly decreasing part sequences: [n], [n-1, 1], ..., [1, ..., 1].
inline std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> parts;
    detail::partitions_rec(n, n, parts, out);
    return out;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_COMB_HPP
