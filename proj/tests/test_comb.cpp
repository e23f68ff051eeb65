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

#include <cyclomac/arith.hpp>
#include <cyclomac/bernoulli.hpp>
#include <cyclomac/comb.hpp>
#include <cyclomac/polynomial.hpp>
#include <cyclomac/qseries.hpp>

using namespace cyclomac;

namespace {

const Polynomial x = Polynomial::monomial(1);

// x (x+1) ... (x+n-1)
Polynomial rising_factorial(unsigned n) {
    Polynomial p = Polynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) p *= x + Polynomial::constant(i);
    return p;
}

QSeries<Rational> geometric_power(unsigned r, std::size_t order) {
    // 1/(1-x)^r
    return series_inv(series_pow(QSeries<Rational>::from_polynomial(Polynomial{1, -1}, order), r));
}

// Euler's pentagonal recurrence.
std::vector<long> partition_numbers(unsigned n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (long m = 1; m <= static_cast<long>(n); ++m) {
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            long sign = j % 2 == 1 ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

// Classical Bernoulli numbers with B_1 = -1/2 from sum_{j<=n} C(n+1, j) B_j = 0.
std::vector<Rational> bernoulli_numbers(unsigned n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -s / Rational(m + 1);
    }
    return b;
}

// B_k(x) = sum_j C(k, j) B_j x^(k-j) evaluated at a rational point.
Rational bernoulli_poly(unsigned k, const Rational& at, const std::vector<Rational>& b) {
    Rational s = 0;
    for (unsigned j = 0; j <= k; ++j) s += Rational(binomial(k, j)) * b[j] * pow(at, static_cast<long>(k - j));
    return s;
}

}  // namespace

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling_first_unsigned(0, 0) == 1);
    CHECK(stirling_first_unsigned(3, 2) == 3);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    CHECK(stirling_first_unsigned(2, 5) == 0);
    for (unsigned n = 0; n <= 12; ++n) {
        Polynomial rf = rising_factorial(n);
        Integer total = 0;
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(Rational(stirling_first_unsigned(n, k)) == rf[k]);
            total += stirling_first_unsigned(n, k);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian_poly(0) == Polynomial{1});
    CHECK(eulerian_poly(2) == Polynomial({1, 1}));
    CHECK(eulerian_poly(3) == Polynomial({1, 4, 1}));
    for (unsigned k = 1; k <= 10; ++k) {
        Polynomial p = eulerian_poly(k);
        CHECK(p.degree() == static_cast<long>(k) - 1);
        CHECK(p.reversed(k - 1) == p);
    }
    for (unsigned k = 0; k <= 8; ++k) {
        const std::size_t order = 40;
        auto lhs = QSeries<Rational>::from_polynomial(eulerian_poly(k), order) * geometric_power(k + 1, order);
        for (std::size_t i = 0; i <= order; ++i) CHECK(lhs[i] == Rational(ipow(static_cast<long>(i) + 1, k)));
    }
}

TEST_CASE("1/(1-x)^r in Eulerian polynomials") {
    const std::size_t order = 50;
    for (unsigned r = 1; r <= 8; ++r) {
        QSeries<Rational> rhs(order);
        for (unsigned l = 1; l <= r; ++l) {
            auto term = QSeries<Rational>::from_polynomial(eulerian_poly(l - 1), order) * geometric_power(l, order);
            term *= Rational(stirling_first_unsigned(r - 1, l - 1)) / Rational(factorial(r - 1));
            rhs += term;
        }
        CHECK(rhs == geometric_power(r, order));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == Polynomial({-1, 1}));
    CHECK(cyclotomic_poly(4) == Polynomial({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == Polynomial({1, -1, 1}));
    auto [quotient, rem] = divmod(Polynomial({-1, 0, 0, 0, 1}), Polynomial({-1, 1}) * Polynomial({1, 1}));
    CHECK(rem.is_zero());
    CHECK(quotient == cyclotomic_poly(4));
    for (long n = 1; n <= 30; ++n) {
        Polynomial prod = Polynomial::constant(1);
        for (long d : divisors(n)) prod *= cyclotomic_poly(d);
        CHECK(prod == Polynomial::monomial(static_cast<std::size_t>(n)) - Polynomial::constant(1));
        CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
    }
}

TEST_CASE("partitions") {
    auto one = partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].multiplicity(1) == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    CHECK(partitions(3)[0].parts() == std::vector<unsigned>{3});
    CHECK(partitions(3)[1].parts() == std::vector<unsigned>{2, 1});
    CHECK(partitions(3)[2].parts() == std::vector<unsigned>{1, 1, 1});
    auto counts = partition_numbers(20);
    for (unsigned n = 1; n <= 20; ++n) {
        auto ps = partitions(n);
        CHECK(static_cast<long>(ps.size()) == counts[n]);
        for (const auto& p : ps) CHECK(p.total() == n);
    }
}

TEST_CASE("arithmetic functions") {
    CHECK(mobius(6) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("generalized Bernoulli numbers") {
    const auto& trivial = enumerate_characters(1)[0];
    CHECK(gen_bernoulli(2, trivial) == make_rational(1, 6));
    CHECK(gen_bernoulli(4, trivial) == make_rational(-1, 30));
    CHECK(gen_bernoulli(1, trivial) == make_rational(1, 2));
    const auto& chi3 = enumerate_characters(3)[1];
    CHECK(gen_bernoulli(1, chi3) == make_rational(-1, 3));
    CHECK(gen_bernoulli(0, chi3).is_zero());

    const auto b = bernoulli_numbers(8);
    for (long n = 1; n <= 12; ++n) {
        for (const auto& chi : enumerate_characters(n)) {
            if (!chi.is_principal()) {
                // B_{1,chi} = (1/N) sum_a chi(a) a
                CycNum s(chi.level());
                for (long a = 1; a <= n; ++a) s += chi.value(a) * Rational(a);
                CHECK(gen_bernoulli(1, chi) == s * make_rational(1, n));
                CHECK(gen_bernoulli(0, chi).is_zero());
            }
            for (unsigned k = 1; k <= 6; ++k) {
                // B_{k,chi} = N^(k-1) sum_a chi(a) B_k(a/N)
                CycNum s(chi.level());
                for (long a = 1; a <= n; ++a) s += chi.value(a) * bernoulli_poly(k, make_rational(a, n), b);
                CHECK(gen_bernoulli(k, chi) == s * Rational(ipow(n, k - 1)));
            }
        }
    }
}
