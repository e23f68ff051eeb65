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
#include <numeric>

#include <cyclomac/dirichlet.hpp>

using namespace cyclomac;

namespace {

CycNum total_of(const std::vector<RootExpansionTerm>& terms) {
    CycNum s(terms.front().value.level());
    for (const auto& t : terms) s += t.value;
    return s;
}

bool equal_at_common_level(const CycNum& a, const CycNum& b) {
    auto [x, y] = common_level(a, b);
    return x == y;
}

}  // namespace

TEST_CASE("character enumeration") {
    const auto& one = enumerate_characters(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value(0) == Rational(1));

    const auto& three = enumerate_characters(3);
    REQUIRE(three.size() == 2);
    CHECK(three[0].is_principal());
    CHECK(three[1].value(2) == Rational(-1));
    CHECK(three[1].parity() == -1);

    const auto& eight = enumerate_characters(8);
    REQUIRE(eight.size() == 4);
    for (const auto& chi : eight)
        for (long a = 0; a < 8; ++a) CHECK(chi.value(a).is_rational());
}

TEST_CASE("character tables are multiplicative and distinct") {
    for (long n = 1; n <= 40; ++n) {
        const auto& chars = enumerate_characters(n);
        REQUIRE(static_cast<long>(chars.size()) == euler_phi(n));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto& chi = chars[i];
            CHECK(chi.index() == i);
            CHECK(chi.value(1) == Rational(1));
            CHECK(unit_group_exponent(n) % chi.level() == 0);
            for (long a = 0; a < n; ++a) {
                CHECK((chi.log(a) < 0) == (std::gcd(a, n) != 1));
                if (chi.log(a) >= 0) CHECK(pow(chi.value(a), chi.level()) == Rational(1));
                for (long b = 0; b < n; ++b) CHECK(chi.value(a * b) == chi.value(a) * chi.value(b));
            }
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(chars[j] == chi);
        }
    }
}

TEST_CASE("orthogonality") {
    for (long n = 1; n <= 24; ++n) {
        const auto& chars = enumerate_characters(n);
        for (long a = 0; a < n; ++a) {
            CycNum s(chars.front().level());
            for (const auto& chi : chars) s += chi.value(a);
            CHECK(s == Rational(mod(a, n) == mod(1, n) ? euler_phi(n) : 0));
        }
    }
}

TEST_CASE("Gauss sums") {
    CHECK(gauss_sum(enumerate_characters(1)[0]) == Rational(1));
    // principal character: Ramanujan sum c_N(1) = mu(N)
    for (long n = 1; n <= 30; ++n) CHECK(gauss_sum(principal_character(n)) == Rational(mobius(n)));
    CHECK(gauss_sum(principal_character(4)).is_zero());
    CycNum g3 = gauss_sum(enumerate_characters(3)[1]);
    CHECK(g3 == CycNum::root_of_unity(3, 1) - CycNum::root_of_unity(3, 2));
    for (long n = 1; n <= 15; ++n)
        for (const auto& chi : enumerate_characters(n)) {
            if (!chi.is_primitive()) continue;
            auto [g, gbar] = common_level(gauss_sum(chi), gauss_sum(conjugate(chi)));
            CHECK(g * gbar == Rational(chi.parity() * n));
        }
}

TEST_CASE("roots of unity through Gauss sums") {
    auto t33 = zeta_power_expand(3, 3);
    CHECK(t33.size() == 1);
    CHECK(total_of(t33) == Rational(1));
    CHECK(total_of(zeta_power_expand(4, 2)) == Rational(-1));
    CHECK(equal_at_common_level(total_of(zeta_power_expand(5, 2)), CycNum::from_exponents(5, {{2, 1}})));
    for (long n = 1; n <= 12; ++n)
        for (long m = 1; m <= 2 * n; ++m)
            CHECK(equal_at_common_level(total_of(zeta_power_expand(n, m)), CycNum::root_of_unity(n, m)));
}

TEST_CASE("induced characters and conductors") {
    const auto& chi = enumerate_characters(3)[1];
    const auto& lifted = induced_character(chi, 6);
    CHECK(lifted.modulus() == 6);
    CHECK(lifted.value(5) == Rational(-1));
    CHECK(lifted.value(1) == Rational(1));
    for (long a : {2, 3, 4}) CHECK(lifted.value(a).is_zero());
    CHECK(lifted.conductor() == 3);
    CHECK_FALSE(lifted.is_primitive());
    CHECK(primitive_character(lifted) == chi);
    CHECK(induced_character(chi, 3) == chi);
    CHECK(induced_character(principal_character(1), 10) == principal_character(10));
    CHECK(principal_character(6).conductor() == 1);
    CHECK(chi.conductor() == 3);
    CHECK(chi.is_primitive());
    CHECK_THROWS_AS(induced_character(chi, 8), Error);
}

TEST_CASE("primitive characters exist exactly off 2 mod 4") {
    for (long m = 1; m <= 24; ++m) {
        bool any = false;
        for (const auto& chi : enumerate_characters(m)) any = any || chi.is_primitive();
        CHECK(any == (m % 4 != 2));
    }
}

TEST_CASE("conjugate character") {
    for (long n = 1; n <= 24; ++n)
        for (const auto& chi : enumerate_characters(n)) {
            const auto& bar = conjugate(chi);
            for (long a = 0; a < n; ++a) CHECK(bar.value(a) == chi.value(a).conj());
            CHECK(conjugate(bar) == chi);
        }
}
