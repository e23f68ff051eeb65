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

#include <catch_amalgamated.hpp>
#include <random>

#include <cyclomac/json_io.hpp>
#include <cyclomac/macmahon.hpp>
#include <cyclomac/polyparse.hpp>

using namespace cyclomac;

namespace {

using RSeries = QSeries<Rational>;

MacMahonInput raw(long n, unsigned k, const char* q) { return {n, k, parse_polynomial(q)}; }

// Direct sum over 1 <= n_1 < ... < n_t <= M (or <= for weak).
void nested(const std::vector<RSeries>& w, unsigned depth, std::size_t start, const RSeries& acc, bool strict,
            RSeries& total) {
    if (depth == 0) {
        total += acc;
        return;
    }
    for (std::size_t n = start; n < w.size(); ++n) {
        if (acc.valuation() + n > acc.order()) break;
        nested(w, depth - 1, strict ? n + 1 : n, acc * w[n], strict, total);
    }
}

RSeries nested_oracle(const MacMahonSpec& spec, std::size_t order) {
    RSeries base = summand_series(spec.input, order);
    std::vector<RSeries> w(order + 1, RSeries(order));
    for (std::size_t n = 1; n <= order; ++n) w[n] = substitute_qn(base, n, order);
    RSeries total(order);
    nested(w, spec.t, 1, RSeries::constant(order, 1), spec.strict, total);
    return total;
}

// [X^t] exp(sum_m sign^(m-1) U_m X^m / m) via n E_n = sum_m sign^(m-1) U_m E_{n-m}.
RSeries exponential_formula(const MacMahonInput& in, unsigned t, bool strict, std::size_t order) {
    std::vector<RSeries> u, e{RSeries::constant(order, 1)};
    for (unsigned m = 1; m <= t; ++m) {
        u.push_back(brute_force(MacMahonInput{in.n, in.k * m, in.q.pow(m)}, order));
        if (strict && m % 2 == 0) u.back() *= Rational(-1);
    }
    for (unsigned n = 1; n <= t; ++n) {
        RSeries s(order);
        for (unsigned m = 1; m <= n; ++m) s += u[m - 1] * e[n - m];
        s *= make_rational(1, n);
        e.push_back(s);
    }
    return e[t];
}

}  // namespace

TEST_CASE("brute force expansion") {
    auto s = brute_force(raw(1, 2, "x"), 5);
    CHECK(s.coeffs() == std::vector<Rational>{0, 1, 3, 4, 7, 6});
    for (bool strict : {true, false}) CHECK(brute_force({1, raw(4, 2, "x^2"), strict}, 30) == brute_force(raw(4, 2, "x^2"), 30));
    CHECK_THROWS_AS(brute_force(raw(3, 1, "1 + x"), 5), Error);
    CHECK_THROWS_AS(brute_force({0, raw(1, 2, "x"), true}, 5), std::invalid_argument);
}

TEST_CASE("brute force matches nested enumeration") {
    const MacMahonInput inputs[] = {raw(1, 2, "x"), raw(3, 2, "x^2"), raw(5, 1, "x + x^3"), raw(2, 3, "x - 2x^2"),
                                    raw(6, 1, "1/2*x")};
    for (const auto& in : inputs)
        for (unsigned t = 1; t <= 3; ++t)
            for (bool strict : {true, false}) {
                MacMahonSpec spec{t, in, strict};
                CAPTURE(describe(spec));
                CHECK(brute_force(spec, 20) == nested_oracle(spec, 20));
            }
}

TEST_CASE("powers of Q") {
    CHECK(power_polynomial(parse_polynomial("x"), 3) == Polynomial::monomial(3));
    CHECK(power_polynomial(parse_polynomial("x + x^3"), 2) == parse_polynomial("x^2 + 2x^4 + x^6"));
    Polynomial q = parse_polynomial("x - 3x^2 + 1/2*x^5");
    for (unsigned s = 1; s <= 5; ++s) CHECK(power_polynomial(q, s).degree() == 5 * static_cast<long>(s));
}

TEST_CASE("isobaric decomposition") {
    auto one = isobaric_decomposition(1, true);
    REQUIRE(one.size() == 1);
    CHECK(one[0].weight == 1);
    CHECK(one[0].partition.multiplicity(1) == 1);

    auto strict = isobaric_decomposition(2, true);
    REQUIRE(strict.size() == 2);
    CHECK(strict[0].partition.multiplicity(2) == 1);
    CHECK(strict[0].weight == make_rational(-1, 2));
    CHECK(strict[1].partition.multiplicity(1) == 2);
    CHECK(strict[1].weight == make_rational(1, 2));
    auto weak = isobaric_decomposition(2, false);
    CHECK(weak[0].weight == make_rational(1, 2));
    CHECK(weak[1].weight == make_rational(1, 2));

    for (unsigned t = 1; t <= 8; ++t)
        for (bool s : {true, false}) {
            Rational total = 0;
            for (const auto& mono : isobaric_decomposition(t, s)) {
                CHECK(mono.partition.total() == t);
                total += mono.weight;
            }
            // with every U_s = 1: coefficient of X^t in (1+X) resp. 1/(1-X)
            CHECK(total == (s && t > 1 ? 0 : 1));
        }
}

TEST_CASE("isobaric evaluation") {
    CHECK(evaluate_isobaric(raw(1, 2, "x"), 2, true, 30) == brute_force({2, raw(1, 2, "x"), true}, 30));
    CHECK(evaluate_isobaric(raw(4, 1, "x"), 3, true, 30) == brute_force({3, raw(4, 1, "x"), true}, 30));
    CHECK(evaluate_isobaric(raw(3, 2, "x^2"), 1, false, 30) == brute_force(raw(3, 2, "x^2"), 30));
    // no symmetry needed
    CHECK(evaluate_isobaric(raw(3, 1, "x - x^2"), 3, false, 25) == brute_force({3, raw(3, 1, "x - x^2"), false}, 25));
}

TEST_CASE("exponential formula over the sweep") {
    for (const auto& in : sweep_inputs(12, 4, 12)) {
        for (bool strict : {true, false}) {
            CAPTURE(describe(in), strict);
            CHECK(exponential_formula(in, 5, strict, 40) == brute_force({5, in, strict}, 40));
        }
    }
}

TEST_CASE("strict and weak depth-two series differ by U_{2k}(Q^2)") {
    for (const auto& in : sweep_inputs(8, 3, 8)) {
        RSeries diff = brute_force({2, in, false}, 40) - brute_force({2, in, true}, 40);
        CHECK(diff == brute_force(MacMahonInput{in.n, 2 * in.k, in.q.pow(2)}, 40));
    }
}

TEST_CASE("isobaric polynomials in the closed forms") {
    for (const auto& in : {raw(1, 2, "x"), raw(3, 2, "x^2"), raw(4, 1, "x"), raw(6, 2, "x^2"), raw(5, 1, "x^2")})
        for (unsigned t = 2; t <= 4; ++t)
            for (bool strict : {true, false})
                CHECK(evaluate_isobaric_closed_form(validate(in), t, strict, 30) == brute_force({t, in, strict}, 30));
}

TEST_CASE("certificates") {
    RSeries a = brute_force(raw(1, 2, "x"), 10);
    auto same = certify(a, a, "sigma", "lhs", "rhs");
    CHECK(same.match);
    CHECK_FALSE(same.first_mismatch.has_value());

    RSeries b = a;
    b[3] += 1;
    b[7] += 1;
    auto diff = certify(a, b, "sigma", "lhs", "rhs");
    CHECK_FALSE(diff.match);
    REQUIRE(diff.first_mismatch.has_value());
    CHECK(diff.first_mismatch->exponent == 3);
    CHECK(diff.first_mismatch->lhs == "4");
    CHECK(diff.first_mismatch->rhs == "5");

    RSeries shifted = a;
    shifted[0] -= make_rational(1, 24);
    CHECK(certify(a, shifted, "sigma", "lhs", "rhs", make_rational(1, 24)).match);
    CHECK_THROWS_AS(certify(a, a.truncated(5), "x", "l", "r"), Error);

    // U_{2;4}(x^2; q) = F_2(2 tau) - 4 F_2(4 tau)
    RSeries lhs = brute_force(raw(4, 2, "x^2"), 60);
    RSeries rhs = f_series(2, 2, 60);
    RSeries f4 = f_series(2, 4, 60);
    f4 *= Rational(-4);
    rhs += f4;
    auto cert = certify(lhs, rhs, "U_{2;4}(x^2)", "brute_force", "F_2(2tau) - 4F_2(4tau)");
    CHECK(cert.match);
    Json j = to_json(cert);
    CHECK(j["match"] == true);
    CHECK(j["first_mismatch"].is_null());
    CHECK(to_json(diff)["first_mismatch"]["exponent"] == 3);
}
