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

// Partial fractions of Q(x)/Phi_N(x)^k and the Eisenstein closed forms of
//   U_{k;N}(Q; q) = sum_{n >= 1} Q(q^n) / Phi_N(q^n)^k.
//
// Around each pole rho = zeta_N^{-j} we write
//   Q(x)/Phi_N(x)^k = sum_{r=1}^{k} a(r) (rho^{-1} x) / (1 - rho^{-1} x)^r + (regular),
// turn the a(r) into weights c(l) with Stirling numbers of the first kind,
// and expand sum_m m^(l-1) (zeta^{jm} +- zeta^{-jm}) q^{mn} in Gauss sums.

#ifndef CYCLOMAC_PFD_HPP
#define CYCLOMAC_PFD_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "comb.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "polynomial.hpp"
#include "qseries.hpp"

namespace cyclomac {

/// Parameters (N, k, Q) of U_{t,k;N}(Q; q) before any hypothesis is checked.
struct MacMahonInput {
    long n = 1;
    unsigned k = 1;
    Polynomial q;
};

enum class ValidationFailure { DegreeTooLarge, NonzeroConstantTerm, SymmetryViolation };

inline const char* to_string(ValidationFailure f) {
    switch (f) {
        case ValidationFailure::DegreeTooLarge:
            return "DegreeTooLarge";
        case ValidationFailure::NonzeroConstantTerm:
            return "NonzeroConstantTerm";
        case ValidationFailure::SymmetryViolation:
            return "SymmetryViolation";
    }
    return "?";
}

class ValidationError : public Error {
   public:
    ValidationError(ValidationFailure kind, const std::string& clause)
        : Error(std::string(cyclomac::to_string(kind)) + ": " + clause), kind_(kind), clause_(clause) {}
    ValidationFailure kind() const { return kind_; }
    const std::string& clause() const { return clause_; }

   private:
    ValidationFailure kind_;
    std::string clause_;
};

class InternalMismatch : public Error {
   public:
    using Error::Error;
};

/// An input satisfying the closed-form hypotheses: deg Q < phi(N) k, Q(0) = 0,
/// and Q(x) = (-x)^k Q(1/x) for N = 1, Q(x) = x^(phi(N) k) Q(1/x) for N >= 2.
/// Only validate() creates one.
class AdmissibleInput {
   public:
    long n() const { return raw_.n; }
    unsigned k() const { return raw_.k; }
    const Polynomial& q() const { return raw_.q; }
    const MacMahonInput& raw() const { return raw_; }

   private:
    explicit AdmissibleInput(MacMahonInput raw) : raw_(std::move(raw)) {}
    friend AdmissibleInput validate(MacMahonInput input);
    MacMahonInput raw_;
};

inline AdmissibleInput validate(MacMahonInput input) {
    if (input.n < 1 || input.k < 1) throw std::invalid_argument("N and k must be positive");
    const long top = euler_phi(input.n) * static_cast<long>(input.k);
    const Polynomial& q = input.q;
    if (q.degree() >= top)
        throw ValidationError(ValidationFailure::DegreeTooLarge,
                              "deg Q = " + std::to_string(q.degree()) + " must be less than phi(N)k = " +
                                  std::to_string(top));
    if (!is_zero(q[0]))
        throw ValidationError(ValidationFailure::NonzeroConstantTerm, "Q(0) = " + to_string(q[0]) + " must be 0");
    if (!q.is_zero()) {
        if (input.n == 1) {
            // (-x)^k Q(1/x) = (-1)^k x^k Q(1/x)
            Polynomial mirrored = q.reversed(input.k) * Rational(input.k % 2 == 0 ? 1 : -1);
            if (!(mirrored == q))
                throw ValidationError(ValidationFailure::SymmetryViolation,
                                      "Q(x) = (-x)^k Q(1/x) fails: (-x)^k Q(1/x) = " + mirrored.to_string());
        } else {
            Polynomial mirrored = q.reversed(static_cast<std::size_t>(top));
            if (!(mirrored == q))
                throw ValidationError(ValidationFailure::SymmetryViolation,
                                      "Q(x) = x^(phi(N)k) Q(1/x) fails: x^" + std::to_string(top) +
                                          " Q(1/x) = " + mirrored.to_string());
        }
    }
    return AdmissibleInput(std::move(input));
}

/// Partial-fraction data at one conjugate pair of poles. For N >= 3 the pole
/// zeta_N^{-j} carries a/c and its conjugate zeta_N^{j} carries a_conj/c_conj.
/// For N = 1, 2 there is a single pole (1 or -1), j = 0, and the conjugate
/// vectors are empty. Vectors are indexed by r-1 (resp. l-1).
struct PoleData {
    long j = 0;
    std::vector<CycNum> taylor;  // b_m = (-rho)^m A^{(m)}(rho)/m!, m = 0..k-1
    std::vector<CycNum> a, a_conj;
    std::vector<CycNum> c, c_conj;
};

struct PfdCoefficients {
    AdmissibleInput input;
    long level;  // cyclotomic level of every coefficient: N
    std::vector<PoleData> poles;
};

namespace detail {

// Taylor coefficients in u of A(x) = (1 - rho^{-1} x)^k Q(x)/Phi_N(x)^k at
// x = rho (1 - u), rho = zeta_N^{-s}, to order k-1.
inline std::vector<CycNum> pole_taylor_data(long n, unsigned k, const Polynomial& q, long s) {
    const CycNum zero(n);
    auto compose = [&](const Polynomial& p, std::size_t order) {
        // p(rho (1 - u)) = sum_i p_i rho^i sum_m C(i, m) (-u)^m
        QSeries<CycNum> out(order, zero);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (is_zero(p.coeffs()[i])) continue;
            CycNum rho_i = CycNum::root_of_unity(n, -s * static_cast<long>(i)) * p.coeffs()[i];
            for (std::size_t m = 0; m <= std::min(i, order); ++m) {
                Rational w(binomial(i, m));
                if (m % 2 == 1) w = -w;
                out[m].add_scaled(rho_i, w);
            }
        }
        return out;
    };
    QSeries<CycNum> phi = compose(cyclotomic_poly(n), k);
    if (!phi[0].is_zero()) throw InternalMismatch("pole is not a root of Phi_N");
    std::vector<CycNum> d(phi.coeffs().begin() + 1, phi.coeffs().end());  // Phi/u, order k-1
    QSeries<CycNum> denom(std::move(d));
    QSeries<CycNum> num = compose(q, k - 1);
    QSeries<CycNum> f = num * series_pow(series_inv(denom), k);
    return std::vector<CycNum>(f.coeffs().begin(), f.coeffs().end());
}

inline std::vector<CycNum> a_from_taylor(const std::vector<CycNum>& b, unsigned k) {
    std::vector<CycNum> a;
    for (unsigned r = 1; r <= k; ++r) {
        CycNum sum = zero_like(b[0]);
        for (unsigned m = 0; m <= k - r; ++m) sum += b[m];
        a.push_back(std::move(sum));
    }
    return a;
}

}  // namespace detail

/// c(l) = sum_{r=l}^{k} a(r)/(r-1)! [r-1, l-1], l = 1..k.
inline std::vector<CycNum> stirling_weights(const std::vector<CycNum>& a) {
    const auto k = static_cast<unsigned>(a.size());
    std::vector<CycNum> c;
    for (unsigned l = 1; l <= k; ++l) {
        CycNum sum = zero_like(a[0]);
        for (unsigned r = l; r <= k; ++r)
            sum.add_scaled(a[r - 1], Rational(stirling_first_unsigned(r - 1, l - 1)) / Rational(factorial(r - 1)));
        c.push_back(std::move(sum));
    }
    return c;
}

/// Partial-fraction coefficients a(r) at every pole. N = 1, 2 use the
/// derivatives of Q at 1 and -1; N >= 3 expands A_j in u = 1 - zeta_N^j x.
inline PfdCoefficients pfd_coefficients(const AdmissibleInput& input) {
    const long n = input.n();
    const unsigned k = input.k();
    PfdCoefficients out{input, n, {}};
    if (n <= 2) {
        // Q^{(m)}(+-1)/m! are the coefficients of Q(+-1 + y).
        Polynomial shifted = input.q().taylor_shift(n == 1 ? 1 : -1);
        PoleData pole;
        for (unsigned m = 0; m < k; ++m) {
            Rational t = shifted[m];
            if (n == 1 && (m + k) % 2 == 1) t = -t;
            pole.taylor.emplace_back(n, t);
        }
        pole.a = detail::a_from_taylor(pole.taylor, k);
        out.poles.push_back(std::move(pole));
        return out;
    }
    for (long j = 1; j <= (n - 1) / 2; ++j) {
        if (std::gcd(j, n) != 1) continue;
        PoleData pole;
        pole.j = j;
        pole.taylor = detail::pole_taylor_data(n, k, input.q(), j);
        pole.a = detail::a_from_taylor(pole.taylor, k);
        pole.a_conj = detail::a_from_taylor(detail::pole_taylor_data(n, k, input.q(), -j), k);
        out.poles.push_back(std::move(pole));
    }
    return out;
}

/// Second route to c(l), from the Taylor data directly:
///   c(l) = 1/(k-1)! sum_{r=l}^{k} (-rho)^{k-r} A^{(k-r)}(rho) C(k-1, r-1) [r, l].
/// For N = 1, 2 the derivatives are taken of Q itself.
inline std::vector<CycNum> c_from_taylor(const AdmissibleInput& input, const PoleData& pole, long level) {
    const unsigned k = input.k();
    const Rational inv_fact = Rational(1) / Rational(factorial(k - 1));
    std::vector<CycNum> c;
    for (unsigned l = 1; l <= k; ++l) {
        CycNum sum(level);
        for (unsigned r = l; r <= k; ++r) {
            const unsigned m = k - r;
            CycNum deriv(level);  // (-rho)^m A^{(m)}(rho)
            if (input.n() == 1) {
                Rational d = input.q().derivative(m)(Rational(1));
                deriv = CycNum(level, (r % 2 == 0) ? d : Rational(-d));
            } else if (input.n() == 2) {
                deriv = CycNum(level, input.q().derivative(m)(Rational(-1)));
            } else {
                deriv = pole.taylor[m] * Rational(factorial(m));
            }
            sum.add_scaled(deriv, Rational(binomial(k - 1, r - 1) * stirling_first_unsigned(r, l)) * inv_fact);
        }
        c.push_back(std::move(sum));
    }
    return c;
}

/// Fills the c-fields from the a-fields by the Stirling sum and checks them
/// against c_from_taylor; a disagreement throws InternalMismatch.
inline PfdCoefficients c_coefficients(PfdCoefficients p) {
    for (auto& pole : p.poles) {
        pole.c = stirling_weights(pole.a);
        if (!pole.a_conj.empty()) pole.c_conj = stirling_weights(pole.a_conj);
        auto check = c_from_taylor(p.input, pole, p.level);
        for (std::size_t l = 0; l < check.size(); ++l)
            if (!(check[l] == pole.c[l]))
                throw InternalMismatch("c(" + std::to_string(l + 1) + ") at j = " + std::to_string(pole.j) +
                                       ": Stirling sum " + pole.c[l].to_string() + " vs Taylor formula " +
                                       check[l].to_string());
    }
    return p;
}

/// Power series in x of the partial-fraction sum, to the given order; it must
/// equal Q(x)/Phi_N(x)^k.
inline QSeries<CycNum> partial_fraction_series(const PfdCoefficients& p, std::size_t order) {
    const long n = p.input.n();
    const unsigned k = p.input.k();
    QSeries<CycNum> out(order, CycNum(p.level));
    // zeta x/(1 - zeta x)^r contributes zeta^m C(m + r - 2, r - 1) x^m for m >= 1.
    auto add = [&](const std::vector<CycNum>& a, long root_exponent, const Rational& sign) {
        for (unsigned r = 1; r <= k; ++r)
            for (std::size_t m = 1; m <= order; ++m) {
                CycNum term = a[r - 1] * CycNum::root_of_unity(p.level, root_exponent * static_cast<long>(m));
                out[m].add_scaled(term, sign * Rational(binomial(m + r - 2, r - 1)));
            }
    };
    if (n == 1) {
        add(p.poles[0].a, 0, 1);
    } else if (n == 2) {
        add(p.poles[0].a, 1, 1);  // a(r) (-x)/(1 + x)^r
    } else {
        for (const auto& pole : p.poles) {
            add(pole.a, pole.j, 1);
            add(pole.a_conj, -pole.j, 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms

/// A linear combination of F_l(chi; g tau), optionally plus a constant.
/// In F-form the constant is zero and the terms sum to U_{k;N}(Q; q).
/// In G-form each F is read as G (= F - g_constant) and `constant` restores
/// the difference, so that sum coefficient * G + constant = U_{k;N}(Q; q).
struct ClosedForm {
    long level = 1;
    std::vector<EisensteinTerm> terms;
    CycNum constant;
    bool g_form = false;
};

namespace detail {

using TermKey = std::tuple<std::size_t, long, std::size_t, unsigned>;  // dilation, modulus, index, weight

inline void accumulate(std::map<TermKey, EisensteinTerm>& acc, unsigned weight, const DirichletCharacter& chi,
                       std::size_t dilation, const CycNum& coefficient) {
    TermKey key{dilation, chi.modulus(), chi.index(), weight};
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, EisensteinTerm{weight, chi, dilation, coefficient});
    else
        it->second.coefficient += coefficient;
}

inline std::vector<EisensteinTerm> collect(std::map<TermKey, EisensteinTerm>& acc) {
    std::vector<EisensteinTerm> out;
    for (auto& [key, term] : acc)
        if (!term.coefficient.is_zero()) out.push_back(std::move(term));
    return out;
}

}  // namespace detail

/// Cyclotomic level that holds every closed-form coefficient for modulus N.
inline long closed_form_level(long n) { return std::lcm(n, unit_group_exponent(n)); }

/// F-form closed expression for U_{k;N}(Q; q), from populated c-coefficients.
inline ClosedForm closed_form(const PfdCoefficients& p) {
    const long n = p.input.n();
    const unsigned k = p.input.k();
    ClosedForm cf;
    cf.level = closed_form_level(n);
    cf.constant = CycNum(cf.level);
    std::map<detail::TermKey, EisensteinTerm> acc;
    const auto& trivial = principal_character(1);
    if (n <= 2) {
        const auto& c = p.poles.at(0).c;
        if (c.empty()) throw std::logic_error("closed_form needs c-coefficients");
        for (unsigned l = 2; l <= k; l += 2) {
            CycNum cl = c[l - 1].embed(cf.level);
            if (n == 1) {
                detail::accumulate(acc, l, trivial, 1, cl);
            } else {
                // c(l) (2^l F_l(2 tau) - F_l(tau))
                detail::accumulate(acc, l, trivial, 2, cl * Rational(ipow(2, l)));
                detail::accumulate(acc, l, trivial, 1, -cl);
            }
        }
        cf.terms = detail::collect(acc);
        return cf;
    }
    for (const auto& pole : p.poles) {
        if (pole.c.empty()) throw std::logic_error("closed_form needs c-coefficients");
        for (unsigned l = 1; l <= k; ++l) {
            const CycNum cl = pole.c[l - 1].embed(cf.level);
            if (cl.is_zero()) continue;
            const int parity = l % 2 == 0 ? 1 : -1;
            for (long g : divisors(n)) {
                const long reduced = n / g;
                const Rational scale = Rational(2 * ipow(g, l - 1)) / Rational(euler_phi(reduced));
                for (const auto& chi : enumerate_characters(reduced)) {
                    if (chi.parity() != parity) continue;
                    // G(chi) conj(chi(j)) F_l(conj(chi); g tau)
                    CycNum coeff = gauss_sum(chi).embed(cf.level) * chi.value(pole.j).conj().embed(cf.level);
                    coeff = coeff * cl * scale;
                    detail::accumulate(acc, l, conjugate(chi), static_cast<std::size_t>(g), coeff);
                }
            }
        }
    }
    cf.terms = detail::collect(acc);
    return cf;
}

inline ClosedForm closed_form(const AdmissibleInput& input) { return closed_form(c_coefficients(pfd_coefficients(input))); }

/// The same expression in G-form: constant = -sum coefficient * g_constant.
inline ClosedForm to_g_form(const ClosedForm& f) {
    if (f.g_form) return f;
    ClosedForm g = f;
    g.g_form = true;
    g.constant = CycNum(f.level);
    for (const auto& t : f.terms) g.constant -= t.coefficient * g_constant(t.weight, t.character).embed(f.level);
    return g;
}

/// Rewrites every F_l(chi; g tau) with imprimitive chi through the primitive
/// character chi* inducing it:
///   F_l(chi; tau) = sum_{d | mod chi} mu(d) chi*(d) d^(l-1) F_l(chi*; d tau).
inline ClosedForm to_primitive_basis(const ClosedForm& f) {
    std::map<detail::TermKey, EisensteinTerm> acc;
    for (const auto& t : f.terms) {
        const auto& prim = primitive_character(t.character);
        for (long d : divisors(t.character.modulus())) {
            const int mu = mobius(d);
            if (mu == 0 || prim.log(d) < 0) continue;
            CycNum w = prim.value(d).embed(f.level) * t.coefficient;
            w *= Rational(mu * ipow(d, t.weight - 1));
            detail::accumulate(acc, t.weight, prim, t.dilation * static_cast<std::size_t>(d), w);
        }
    }
    ClosedForm out = f;
    out.terms = detail::collect(acc);
    return out;
}

/// sum coefficient * F_l(chi; g tau) truncated at q^M, at level f.level.
/// This is U_{k;N}(Q; q) for either form (the G-form constant is not added).
inline QSeries<CycNum> evaluate_f_terms(const ClosedForm& f, std::size_t order) {
    QSeries<CycNum> out(order, CycNum(f.level));
    for (const auto& t : f.terms) {
        const auto buckets = detail::f_series_buckets(t.weight, t.character, t.dilation, order);
        const long e = t.character.level();
        std::vector<CycNum> rotated;
        rotated.reserve(static_cast<std::size_t>(e));
        for (long s = 0; s < e; ++s)
            rotated.push_back(t.coefficient * CycNum::root_of_unity(f.level, s * (f.level / e)));
        for (std::size_t j = 1; j <= order; ++j)
            for (std::size_t s = 0; s < buckets[j].size(); ++s)
                if (buckets[j][s] != 0) out[j].add_scaled(rotated[s], Rational(buckets[j][s]));
    }
    return out;
}

/// U_{k;N}(Q; q) from the closed form.
inline QSeries<CycNum> evaluate(const ClosedForm& f, std::size_t order) { return evaluate_f_terms(f, order); }

/// sum coefficient * G_l(chi; g tau): the F-terms shifted by their constants.
/// For a G-form expression, this plus `constant` equals U_{k;N}(Q; q).
inline QSeries<CycNum> evaluate_g_terms(const ClosedForm& f, std::size_t order) {
    QSeries<CycNum> out = evaluate_f_terms(f, order);
    for (const auto& t : f.terms) out[0] += t.coefficient * g_constant(t.weight, t.character).embed(f.level);
    return out;
}

/// Admissible numerators used for sweeps. N >= 2: x^r + x^(phi k - r) for
/// 1 <= r < phi k / 2, plus x^(phi k / 2) when phi k is even. N = 1:
/// x^i + (-1)^k x^(k-i) for 1 <= i < k/2, plus x^(k/2) for even k.
/// These span the admissible space.
inline std::vector<Polynomial> admissible_corpus(long n, unsigned k) {
    std::vector<Polynomial> out;
    const long top = euler_phi(n) * static_cast<long>(k);
    const Rational sign = (n == 1 && k % 2 == 1) ? Rational(-1) : Rational(1);
    for (long r = 1; 2 * r < top; ++r)
        out.push_back(Polynomial::monomial(static_cast<std::size_t>(r)) +
                      Polynomial::monomial(static_cast<std::size_t>(top - r), sign));
    if (top % 2 == 0) out.push_back(Polynomial::monomial(static_cast<std::size_t>(top / 2)));
    return out;
}

/// Every (N, k, Q) with N <= max_n, k <= max_k, phi(N) k <= max_weight and Q
/// drawn from admissible_corpus(N, k), ordered by N, then k.
inline std::vector<MacMahonInput> sweep_inputs(long max_n, unsigned max_k, long max_weight) {
    std::vector<MacMahonInput> out;
    for (long n = 1; n <= max_n; ++n)
        for (unsigned k = 1; k <= max_k; ++k) {
            if (euler_phi(n) * static_cast<long>(k) > max_weight) continue;
            for (auto& q : admissible_corpus(n, k)) out.push_back(MacMahonInput{n, k, std::move(q)});
        }
    return out;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_PFD_HPP
