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

#ifndef CYCLOMAC_BERNOULLI_HPP
#define CYCLOMAC_BERNOULLI_HPP

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "qseries.hpp"

namespace cyclomac {

/// Generalized Bernoulli number B_{k,chi}, read off from
///   sum_{a=1}^{N} chi(a) t e^{at} / (e^{Nt} - 1) = sum_k B_{k,chi} t^k / k!
/// by truncated exponential-series arithmetic over Q(zeta_e), e = chi.level().
/// The trivial character mod 1 gives the classical B_k with B_1 = +1/2.
inline CycNum gen_bernoulli(unsigned k, const DirichletCharacter& chi) {
    const long n = chi.modulus();
    const long level = chi.level();
    const CycNum zero(level);
    // numerator: sum_a chi(a) e^{at}
    QSeries<CycNum> numer(k, zero);
    for (unsigned i = 0; i <= k; ++i) {
        const Rational inv_fact = make_rational(1, 1) / Rational(factorial(i));
        for (long a = 1; a <= n; ++a) {
            int l = chi.log(a);
            if (l < 0) continue;
            numer[i].add_root_multiple(l, Rational(ipow(a, i)) * inv_fact);
        }
    }
    // (e^{Nt} - 1) / t = sum_i N^{i+1} t^i / (i+1)!
    QSeries<Rational> denom(k);
    for (unsigned i = 0; i <= k; ++i) denom[i] = Rational(ipow(n, i + 1)) / Rational(factorial(i + 1));
    QSeries<CycNum> quotient = numer * to_cyclotomic(series_inv(denom), level);
    return quotient[k] * Rational(factorial(k));
}

}  // namespace cyclomac

#endif  // CYCLOMAC_BERNOULLI_HPP
