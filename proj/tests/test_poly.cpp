/*
   Copyright 2026 the lcdmds authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace lcdmds;
using testsup::Rng;

namespace {

Polynomial rebuild_from_factors(const Polynomial& input) {
    Polynomial acc = Polynomial::constant(input.leading());
    for (const auto& [g, mult] : factor(input)) {
        acc = acc * g.pow(static_cast<std::uint64_t>(mult));
    }
    return acc;
}

} // namespace

TEST_CASE("derivative matches the stated examples") {
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    // d/dx(x^4 - x) = 4x^3 - 1 = x^3 - 1 in characteristic 3
    Polynomial f = Polynomial::x(F9).pow(4) - Polynomial::x(F9);
    CHECK(derivative(f) == Polynomial(F9, {2, 0, 0, 1}));

    // d/dx(x^n - x) = -1 when p | n
    const FieldCtx& F81 = FieldCtx::make(3, 4);
    Polynomial g = Polynomial::x(F81).pow(21) - Polynomial::x(F81);
    CHECK(derivative(g) == Polynomial::constant(-F81.one()));

    CHECK(derivative(Polynomial::constant(F9.element(5))).is_zero());
    CHECK(derivative(Polynomial(F9)).is_zero());
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    const FieldCtx& F = FieldCtx::make(5, 2);
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = testsup::random_poly_up_to(F, 6, rng);
        Polynomial g = testsup::random_poly_up_to(F, 6, rng);
        FieldElement c = testsup::random_element(F, rng);
        CHECK(derivative(f + g) == derivative(f) + derivative(g));
        CHECK(derivative(f * c) == derivative(f) * c);
        CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
    }
}

TEST_CASE("factor handles the stated examples") {
    const FieldCtx& F3 = FieldCtx::make(3, 1);
    // x^2 - 1 = (x - 1)(x + 1)
    auto factors = factor(Polynomial(F3, {2, 0, 1}));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == Polynomial(F3, {1, 1}));  // x + 1 = x - 2
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == Polynomial(F3, {2, 1}));  // x + 2 = x - 1
    CHECK(factors[1].second == 1);

    // x^q - x splits into all q monic linear factors.
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    Polynomial split = Polynomial::x(F9).pow(9) - Polynomial::x(F9);
    auto linear = factor(split);
    REQUIRE(linear.size() == 9);
    for (const auto& [g, mult] : linear) {
        CHECK(g.degree() == 1);
        CHECK(mult == 1);
    }
    CHECK(rebuild_from_factors(split) == split);

    // x * (x - 1)^2 over GF(5)
    const FieldCtx& F5 = FieldCtx::make(5, 1);
    Polynomial f = Polynomial::x(F5) * Polynomial::x_minus(F5.one()).pow(2);
    auto mixed = factor(f);
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].first == Polynomial::x(F5));
    CHECK(mixed[0].second == 1);
    CHECK(mixed[1].first == Polynomial::x_minus(F5.one()));
    CHECK(mixed[1].second == 2);

    CHECK_THROWS_AS(factor(Polynomial(F5)), std::invalid_argument);
}

TEST_CASE("factor re-multiplies to the input on random polynomials") {
    Rng rng(202);
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {5, 2}, {3, 3}}) {
        const FieldCtx& F = FieldCtx::make(p, r);
        for (int i = 0; i < 167; ++i) {
            Polynomial f = testsup::random_poly_up_to(F, 12, rng, /*allow_zero=*/false);
            if (f.degree() == 0) continue;
            CHECK(rebuild_from_factors(f) == f);
        }
    }
}

TEST_CASE("factorization output is canonical and deterministic") {
    const FieldCtx& F = FieldCtx::make(3, 2);
    Rng rng(303);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = testsup::random_poly(F, 9, rng);
        auto a = factor(f);
        auto b = factor(f);
        CHECK(a == b);
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            CHECK(Polynomial::cmp(a[j].first, a[j + 1].first) < 0);
        }
        for (const auto& [g, mult] : a) {
            CHECK(g.is_monic());
            CHECK(is_irreducible(g));
            CHECK(mult >= 1);
        }
    }
}

TEST_CASE("roots_in_field matches brute-force evaluation") {
    const FieldCtx& F81 = FieldCtx::make(3, 4);
    Polynomial g = Polynomial::x(F81).pow(21) - Polynomial::x(F81);
    auto roots = roots_in_field(g);
    CHECK(roots.size() == 21);
    for (const auto& [root, mult] : roots) {
        CHECK(mult == 1);
        CHECK(g.eval(root).is_zero());
    }

    const FieldCtx& F3 = FieldCtx::make(3, 1);
    CHECK(roots_in_field(Polynomial(F3, {1, 0, 1})).empty());  // x^2 + 1 over GF(3)

    const FieldCtx& F5 = FieldCtx::make(5, 1);
    auto triple = roots_in_field(Polynomial::x_minus(F5.one()).pow(3));
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].first == F5.one());
    CHECK(triple[0].second == 3);

    // Brute-force agreement on random polynomials over GF(9).
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    Rng rng(404);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = testsup::random_poly_up_to(F9, 7, rng, /*allow_zero=*/false);
        std::set<std::uint32_t> brute;
        for (std::uint32_t enc = 0; enc < 9; ++enc) {
            if (f.eval(F9.element(enc)).is_zero()) brute.insert(enc);
        }
        std::set<std::uint32_t> found;
        for (const auto& [root, mult] : roots_in_field(f)) {
            found.insert(root.enc());
            // multiplicity: (x - root)^mult divides f, one more power does not
            CHECK((f % Polynomial::x_minus(root).pow(mult)).is_zero());
            CHECK_FALSE((f % Polynomial::x_minus(root).pow(mult + 1)).is_zero());
        }
        CHECK(brute == found);
    }
}

TEST_CASE("interpolation on the stated examples and random round-trips") {
    const FieldCtx& F7 = FieldCtx::make(7, 1);
    std::vector<std::pair<FieldElement, FieldElement>> flat{{F7.element(0), F7.one()},
                                                            {F7.element(1), F7.one()}};
    CHECK(interpolate(flat) == Polynomial::constant(F7.one()));

    std::vector<std::pair<FieldElement, FieldElement>> square{{F7.element(0), F7.element(0)},
                                                              {F7.element(1), F7.element(1)},
                                                              {F7.element(2), F7.element(4)}};
    CHECK(interpolate(square) == Polynomial(F7, {0, 0, 1}));

    const FieldCtx& F25 = FieldCtx::make(5, 2);
    Rng rng(505);
    for (int i = 0; i < 40; ++i) {
        auto xs = testsup::random_distinct(F25, 5, rng);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (const FieldElement& x : xs) pts.emplace_back(x, testsup::random_element(F25, rng));
        Polynomial p = interpolate(pts);
        CHECK((p.is_zero() || p.degree() < 5));
        for (const auto& [x, y] : pts) CHECK(p.eval(x) == y);
    }

    std::vector<std::pair<FieldElement, FieldElement>> repeated{{F7.element(1), F7.one()},
                                                                {F7.element(1), F7.element(2)}};
    CHECK_THROWS_AS(interpolate(repeated), std::invalid_argument);
}

TEST_CASE("irreducible_of_degree scans in encoding order") {
    const FieldCtx& F3 = FieldCtx::make(3, 1);
    CHECK(irreducible_of_degree(F3, 2, {}) == Polynomial(F3, {1, 0, 1}));  // x^2 + 1
    CHECK(irreducible_of_degree(F3, 1, {Polynomial::x(F3)}) == Polynomial(F3, {1, 1}));

    // There are exactly (9 - 3)/2 = 3 monic irreducible quadratics over GF(3).
    std::vector<Polynomial> seen;
    for (int i = 0; i < 3; ++i) {
        Polynomial next = irreducible_of_degree(F3, 2, seen);
        for (const Polynomial& old : seen) CHECK(old != next);
        seen.push_back(next);
    }
    CHECK_THROWS_AS(irreducible_of_degree(F3, 2, seen), InfeasibleError);

    // Exhaustive cross-check of the count.
    int count = 0;
    for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
        for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
            Polynomial cand(F3, {c0, c1, 1});
            bool has_root = false;
            for (std::uint32_t x = 0; x < 3; ++x) {
                if (cand.eval(F3.element(x)).is_zero()) has_root = true;
            }
            if (!has_root) ++count;
        }
    }
    CHECK(count == 3);
}

TEST_CASE("squarefreeness is equivalent to gcd(f, f') = 1") {
    const FieldCtx& F = FieldCtx::make(3, 2);
    Rng rng(606);
    int squarefree_seen = 0, repeated_seen = 0;
    for (int i = 0; i < 200; ++i) {
        Polynomial f = testsup::random_poly_up_to(F, 8, rng, /*allow_zero=*/false);
        if (f.degree() < 1) continue;
        if (i % 3 == 0) f = f * f;  // make repeated factors common in the sample
        bool all_simple = true;
        for (const auto& [g, mult] : factor(f)) {
            if (mult > 1) all_simple = false;
        }
        Polynomial d = gcd(f, derivative(f));
        bool gcd_trivial = !d.is_zero() && d.degree() == 0;
        CHECK(all_simple == gcd_trivial);
        (all_simple ? squarefree_seen : repeated_seen)++;
    }
    CHECK(squarefree_seen > 0);
    CHECK(repeated_seen > 0);
}

TEST_CASE("p-th power factorizations are handled") {
    const FieldCtx& F = FieldCtx::make(3, 2);
    // A cube has zero derivative in characteristic 3, which exercises the
    // p-th-root branch of the squarefree split.
    Polynomial base = irreducible_of_degree(F, 2, {});
    Polynomial f = base.pow(3);
    CHECK(derivative(f).is_zero());
    auto factors = factor(f);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == base);
    CHECK(factors[0].second == 3);
}

TEST_CASE("factorization works in characteristic two") {
    const FieldCtx& F8 = FieldCtx::make(2, 3);
    Rng rng(808);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = testsup::random_poly_up_to(F8, 9, rng, /*allow_zero=*/false);
        if (f.degree() < 1) continue;
        CHECK(rebuild_from_factors(f) == f);
    }
}

TEST_CASE("divmod, degree and zero-polynomial contracts") {
    const FieldCtx& F = FieldCtx::make(3, 2);
    Polynomial zero(F);
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.degree(), std::invalid_argument);
    CHECK_THROWS_AS(zero.leading(), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::x(F).divmod(zero), std::invalid_argument);

    Rng rng(707);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = testsup::random_poly_up_to(F, 9, rng);
        Polynomial b = testsup::random_poly_up_to(F, 5, rng, /*allow_zero=*/false);
        auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
        CHECK((rem.is_zero() || rem.degree() < b.degree()));
    }
}
