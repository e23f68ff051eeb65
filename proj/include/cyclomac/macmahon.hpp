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

// Generalized MacMahon series
//   U_{t,k;N}(Q; q)  = sum_{1 <= n_1 <  ... <  n_t} prod_j Q(q^{n_j}) / Phi_N(q^{n_j})^k
//   U*_{t,k;N}(Q; q) = sum_{1 <= n_1 <= ... <= n_t} prod_j Q(q^{n_j}) / Phi_N(q^{n_j})^k
// by direct expansion, their isobaric decomposition in the U_{sk;N}(Q^s; q),
// and coefficient-wise certificates comparing two representations.

#ifndef CYCLOMAC_MACMAHON_HPP
#define CYCLOMAC_MACMAHON_HPP

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "comb.hpp"
#include "cyclotomic.hpp"
#include "pfd.hpp"
#include "polynomial.hpp"
#include "qseries.hpp"

namespace cyclomac {

struct MacMahonSpec {
    unsigned t = 1;
    MacMahonInput input;
    bool strict = true;  // n_1 < ... < n_t; weak (<=) otherwise
};

inline std::string describe(const MacMahonInput& in) {
    return "N=" + std::to_string(in.n) + " k=" + std::to_string(in.k) + " Q=" + in.q.to_string();
}

inline std::string describe(const MacMahonSpec& s) {
    return std::string(s.strict ? "U" : "U*") + " t=" + std::to_string(s.t) + " " + describe(s.input);
}

/// Q(x)/Phi_N(x)^k as a power series in x. Throws unless Q(0) = 0, which
/// (with Phi_N(0) = +-1) gives every weight Q(q^n)/Phi_N(q^n)^k q-valuation
/// at least n, so summing n <= M is exact through q^M.
inline QSeries<Rational> summand_series(const MacMahonInput& in, std::size_t order) {
    if (in.n < 1 || in.k < 1) throw std::invalid_argument("N and k must be positive");
    if (!is_zero(in.q[0])) throw Error("Q(0) must vanish for the series to converge q-adically");
    const Polynomial& phi = cyclotomic_poly(in.n);
    if (abs(phi[0]) != 1) throw Error("Phi_N(0) is not a unit");
    auto phi_k = series_pow(QSeries<Rational>::from_polynomial(phi, order), in.k);
    return QSeries<Rational>::from_polynomial(in.q, order) * series_inv(phi_k);
}

/// U_{t,k;N}(Q; q) or its weak variant through q^M, by evolving
/// F(X) <- F(X) (1 + w_n X) (strict) or F(X) <- F(X) / (1 - w_n X) (weak)
/// for n = 1..M, keeping X-degrees up to t.
inline QSeries<Rational> brute_force(const MacMahonSpec& spec, std::size_t order) {
    if (spec.t < 1) throw std::invalid_argument("t must be positive");
    const QSeries<Rational> w = summand_series(spec.input, order);
    std::vector<QSeries<Rational>> f(spec.t + 1, QSeries<Rational>(order));
    f[0][0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        const QSeries<Rational> wn = substitute_qn(w, n, order);
        if (spec.strict) {
            for (std::size_t d = spec.t; d >= 1; --d) f[d] += wn * f[d - 1];
        } else {
            for (std::size_t d = 1; d <= spec.t; ++d) f[d] += wn * f[d - 1];
        }
    }
    return f[spec.t];
}

/// U_{k;N}(Q; q) (the t = 1 series).
inline QSeries<Rational> brute_force(const MacMahonInput& in, std::size_t order) {
    return brute_force(MacMahonSpec{1, in, true}, order);
}

/// Q^s.
inline Polynomial power_polynomial(const Polynomial& q, unsigned s) {
    if (s < 1) throw std::invalid_argument("power_polynomial: s must be positive");
    return q.pow(s);
}

/// prod_s (sign_s U_s / s)^{m_s} / m_s! for one partition; sign_s = (-1)^(s-1)
/// in the strict case and +1 in the weak case. `weight` carries the full
/// rational factor.
struct IsobaricMonomial {
    Partition partition;
    Rational weight;
};

inline std::vector<IsobaricMonomial> isobaric_decomposition(unsigned t, bool strict) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    std::vector<IsobaricMonomial> out;
    for (auto& lambda : partitions(t)) {
        Rational w(1);
        for (auto [s, m] : lambda.multiplicities) {
            Rational base = make_rational(strict && s % 2 == 0 ? -1 : 1, static_cast<long>(s));
            w *= pow(base, static_cast<long>(m)) / Rational(factorial(m));
        }
        out.push_back({std::move(lambda), w});
    }
    return out;
}

/// Assembles the isobaric polynomial with U_s supplied by `u_of`, which must
/// return U_{sk;N}(Q^s; q) through the requested order.
inline QSeries<Rational> evaluate_isobaric(unsigned t, bool strict, std::size_t order,
                                           const std::function<QSeries<Rational>(unsigned)>& u_of) {
    std::vector<QSeries<Rational>> u;
    for (unsigned s = 1; s <= t; ++s) u.push_back(u_of(s));
    QSeries<Rational> total(order);
    for (const auto& mono : isobaric_decomposition(t, strict)) {
        QSeries<Rational> term = QSeries<Rational>::constant(order, mono.weight);
        for (auto [s, m] : mono.partition.multiplicities) term *= series_pow(u[s - 1], m);
        total += term;
    }
    return total;
}

/// Isobaric evaluation with U_s := brute_force(t = 1, sk, N, Q^s).
inline QSeries<Rational> evaluate_isobaric(const MacMahonInput& in, unsigned t, bool strict, std::size_t order) {
    return evaluate_isobaric(t, strict, order, [&](unsigned s) {
        return brute_force(MacMahonInput{in.n, in.k * s, power_polynomial(in.q, s)}, order);
    });
}

/// Isobaric evaluation with every U_s taken from its Eisenstein closed form.
inline QSeries<Rational> evaluate_isobaric_closed_form(const AdmissibleInput& in, unsigned t, bool strict,
                                                       std::size_t order) {
    return evaluate_isobaric(t, strict, order, [&](unsigned s) {
        auto sub = validate(MacMahonInput{in.n(), in.k() * s, power_polynomial(in.q(), s)});
        return to_rational(evaluate(closed_form(sub), order));
    });
}

// ---------------------------------------------------------------------------
// Certificates

struct Mismatch {
    std::size_t exponent;
    std::string lhs;
    std::string rhs;
};

/// Outcome of comparing two representations coefficient by coefficient.
struct Certificate {
    std::string spec;
    std::size_t order = 0;
    std::string lhs_label;
    std::string rhs_label;
    bool match = true;
    std::optional<Mismatch> first_mismatch;
};

/// Checks lhs[i] == rhs[i] for i >= 1 and lhs[0] == rhs[0] + constant_offset.
template <class C>
Certificate certify(const QSeries<C>& lhs, const QSeries<C>& rhs, std::string spec, std::string lhs_label,
                    std::string rhs_label, const C& constant_offset) {
    if (lhs.order() != rhs.order())
        throw Error("certify: order mismatch " + std::to_string(lhs.order()) + " vs " + std::to_string(rhs.order()));
    Certificate cert{std::move(spec), lhs.order(), std::move(lhs_label), std::move(rhs_label), true, std::nullopt};
    for (std::size_t i = 0; i <= lhs.order(); ++i) {
        C expected = i == 0 ? C(rhs[0] + constant_offset) : rhs[i];
        if (lhs[i] == expected) continue;
        cert.match = false;
        cert.first_mismatch = Mismatch{i, to_string(lhs[i]), to_string(expected)};
        break;
    }
    return cert;
}

template <class C>
Certificate certify(const QSeries<C>& lhs, const QSeries<C>& rhs, std::string spec, std::string lhs_label,
                    std::string rhs_label) {
    return certify(lhs, rhs, std::move(spec), std::move(lhs_label), std::move(rhs_label), zero_like(rhs[0]));
}

}  // namespace cyclomac

#endif  // CYCLOMAC_MACMAHON_HPP
