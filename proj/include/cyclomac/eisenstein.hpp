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

// Eisenstein building blocks as truncated q-series:
//   F_l(chi; g tau) = sum_{m, n >= 1} chi(m) m^(l-1) q^(g m n),
// and the constants -B_{l,chi} / (2l) that turn F into G.

#ifndef CYCLOMAC_EISENSTEIN_HPP
#define CYCLOMAC_EISENSTEIN_HPP

#include <string>
#include <vector>

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "qseries.hpp"

namespace cyclomac {

class ParityViolation : public Error {
   public:
    using Error::Error;
};

namespace detail {

// buckets[j][s] = sum of m^(l-1) over pairs (m, n) with g m n = j and chi(m) = zeta_e^s.
inline std::vector<std::vector<Integer>> f_series_buckets(unsigned weight, const DirichletCharacter& chi,
                                                          std::size_t dilation, std::size_t order) {
    const auto e = static_cast<std::size_t>(chi.level());
    std::vector<std::vector<Integer>> buckets(order + 1, std::vector<Integer>(e));
    for (std::size_t m = 1; m * dilation <= order; ++m) {
        int l = chi.log(static_cast<long>(m));
        if (l < 0) continue;
        Integer w = ipow(static_cast<long>(m), weight - 1);
        for (std::size_t j = m * dilation; j <= order; j += m * dilation) buckets[j][static_cast<std::size_t>(l)] += w;
    }
    return buckets;
}

}  // namespace detail

/// F_l(chi; g tau) truncated at q^M, coefficients at level chi.level().
/// Any character is accepted (primitive or not); the trivial character mod 1
/// gives F_l(g tau).
inline QSeries<CycNum> f_series(unsigned weight, const DirichletCharacter& chi, std::size_t dilation,
                                std::size_t order) {
    if (weight < 1 || dilation < 1) throw std::invalid_argument("f_series: weight and dilation must be >= 1");
    const auto buckets = detail::f_series_buckets(weight, chi, dilation, order);
    QSeries<CycNum> out(order, CycNum(chi.level()));
    for (std::size_t j = 0; j <= order; ++j)
        for (std::size_t s = 0; s < buckets[j].size(); ++s)
            if (buckets[j][s] != 0) out[j].add_root_multiple(static_cast<long>(s), Rational(buckets[j][s]));
    return out;
}

/// F_l(g tau) for the trivial character, as a rational series.
inline QSeries<Rational> f_series(unsigned weight, std::size_t dilation, std::size_t order) {
    return to_rational(f_series(weight, principal_character(1), dilation, order));
}

/// The constant term -B_{l,chi}/(2l) of G_l(chi; tau) = constant + F_l(chi; tau).
/// Requires chi(-1) = (-1)^l; for the trivial character this means l even.
inline CycNum g_constant(unsigned weight, const DirichletCharacter& chi) {
    if (weight < 1) throw std::invalid_argument("g_constant: weight must be >= 1");
    const int expected = weight % 2 == 0 ? 1 : -1;
    if (chi.parity() != expected)
        throw ParityViolation("g_constant: " + chi.label() + " has parity " + std::to_string(chi.parity()) +
                              " but weight " + std::to_string(weight) + " needs " + std::to_string(expected));
    return gen_bernoulli(weight, chi) * make_rational(-1, 2 * static_cast<long>(weight));
}

/// One summand coefficient * F_weight(character; dilation * tau).
struct EisensteinTerm {
    unsigned weight;
    DirichletCharacter character;
    std::size_t dilation;
    CycNum coefficient;
};

}  // namespace cyclomac

#endif  // CYCLOMAC_EISENSTEIN_HPP
