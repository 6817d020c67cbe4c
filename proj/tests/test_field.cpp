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

#include <set>

#include "lcdmds/field.hpp"
#include "lcdmds/poly.hpp"

using namespace lcdmds;

namespace {

// Independent oracle on plain integers: brute-force irreducibility of a monic
// polynomial over GF(p), p prime, degree 2 or 3 (no root <=> irreducible).
bool brute_irreducible_low_degree(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    auto eval = [&](std::uint32_t x) {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = (acc * x + coeffs[i]) % p;
            if (i == 0) break;
        }
        return acc;
    };
    for (std::uint32_t x = 0; x < p; ++x) {
        if (eval(x) == 0) return false;
    }
    return true;
}

// Smallest-encoding monic irreducible of degree 2 or 3 over GF(p), scanning
// non-leading coefficient encodings ascending.
std::vector<std::uint32_t> brute_canonical_modulus(std::uint32_t p, std::uint32_t r) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < r; ++i) total *= p;
    for (std::uint64_t enc = 0; enc < total; ++enc) {
        std::vector<std::uint32_t> coeffs;
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < r; ++i) {
            coeffs.push_back(static_cast<std::uint32_t>(v % p));
            v /= p;
        }
        coeffs.push_back(1);
        if (brute_irreducible_low_degree(p, coeffs)) return coeffs;
    }
    return {};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(std::uint32_t bound,
                                                                        bool odd_only) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; p <= bound; ++p) {
        bool prime = p >= 2;
        for (std::uint32_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        if (!prime || (odd_only && p == 2)) continue;
        std::uint64_t q = p;
        std::uint32_t r = 1;
        while (q <= bound) {
            out.emplace_back(p, r);
            q *= p;
            ++r;
        }
    }
    return out;
}

} // namespace

TEST_CASE("canonical moduli match the exhaustive scan oracle") {
    CHECK(FieldCtx::make(3, 1).modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(FieldCtx::make(3, 2).modulus() == brute_canonical_modulus(3, 2));
    CHECK(FieldCtx::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(FieldCtx::make(2, 3).modulus() == brute_canonical_modulus(2, 3));
    CHECK(FieldCtx::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(FieldCtx::make(5, 2).modulus() == brute_canonical_modulus(5, 2));
    CHECK(FieldCtx::make(7, 2).modulus() == brute_canonical_modulus(7, 2));
}

TEST_CASE("make is deterministic and interned") {
    const FieldCtx& a = FieldCtx::make(3, 4);
    const FieldCtx& b = FieldCtx::make(3, 4);
    CHECK(&a == &b);
    CHECK(a.modulus() == b.modulus());
    // The canonical modulus is reproducible through the public scan as well.
    Polynomial rescan = irreducible_of_degree(FieldCtx::make(3, 1), 4, {});
    for (std::uint32_t i = 0; i <= 4; ++i) CHECK(rescan.coeff_enc(i) == a.modulus()[i]);
}

TEST_CASE("make rejects bad inputs") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 21), std::invalid_argument);  // beyond the size bound
}

TEST_CASE("with_modulus validates and is usable") {
    // x^2 + x + 2 is an irreducible quadratic over GF(3).
    const FieldCtx& F = FieldCtx::with_modulus(3, 2, {2, 1, 1});
    CHECK(F.q() == 9);
    CHECK(&F != &FieldCtx::make(3, 2));
    FieldElement x = F.element(3);
    CHECK((x * x + x + F.element(2)).is_zero());
    CHECK_THROWS_AS(FieldCtx::with_modulus(3, 2, {2, 0, 1}), std::invalid_argument);  // x^2+2 = (x-1)(x+1)
    CHECK_THROWS_AS(FieldCtx::with_modulus(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(FieldCtx::with_modulus(3, 2, {1, 1}), std::invalid_argument);     // wrong length
}

TEST_CASE("field axioms hold exhaustively over GF(9)") {
    const FieldCtx& F = FieldCtx::make(3, 2);
    for (std::uint32_t a = 0; a < 9; ++a) {
        FieldElement ea = F.element(a);
        CHECK(ea + F.zero() == ea);
        CHECK(ea * F.one() == ea);
        CHECK((ea - ea).is_zero());
        if (a != 0) {
            CHECK(ea * ea.inverse() == F.one());
        }
        // a^q = a, by repeated multiplication (independent of pow)
        FieldElement acc = F.one();
        for (int i = 0; i < 9; ++i) acc = acc * ea;
        CHECK(acc == ea);
        CHECK(ea.pow(9) == ea);
    }
    CHECK_THROWS_AS(F.one() / F.zero(), std::invalid_argument);
}

TEST_CASE("cross-field operations are rejected") {
    FieldElement a = FieldCtx::make(3, 2).one();
    FieldElement b = FieldCtx::make(5, 2).one();
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("encode/decode round-trips for every q <= 121") {
    for (auto [p, r] : prime_powers_up_to(121, false)) {
        const FieldCtx& F = FieldCtx::make(p, r);
        for (std::uint32_t enc = 0; enc < F.q(); ++enc) {
            auto coeffs = F.decode(enc);
            CHECK(coeffs.size() == F.r());
            CHECK(F.encode(coeffs) == enc);
        }
    }
}

TEST_CASE("squares: counts, examples, multiplicativity") {
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    CHECK(F9.zero().is_square());
    CHECK(F9.one().is_square());

    // Exhaustive square table over GF(9): a generator is never a square.
    std::set<std::uint32_t> squares9;
    for (std::uint32_t b = 0; b < 9; ++b) squares9.insert(F9.mul(b, b));
    CHECK(squares9.count(F9.generator().enc()) == 0);
    CHECK_FALSE(F9.generator().is_square());
    for (std::uint32_t a = 0; a < 9; ++a) {
        CHECK(F9.is_square(a) == (squares9.count(a) > 0));
    }

    // Exactly (q-1)/2 nonzero squares for every odd q <= 121.
    for (auto [p, r] : prime_powers_up_to(121, true)) {
        const FieldCtx& F = FieldCtx::make(p, r);
        std::uint32_t count = 0;
        for (std::uint32_t a = 1; a < F.q(); ++a) {
            if (F.is_square(a)) ++count;
        }
        CHECK(count == (F.q() - 1) / 2);
    }

    // Quadratic character is multiplicative: is_square(a) XOR is_square(g*a)
    // for a fixed non-square g and every a != 0.
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {5, 2}, {3, 3}}) {
        const FieldCtx& F = FieldCtx::make(p, r);
        std::uint32_t g = F.non_square().enc();
        for (std::uint32_t a = 1; a < F.q(); ++a) {
            CHECK(F.is_square(a) != F.is_square(F.mul(g, a)));
        }
    }
}

TEST_CASE("square roots take the smaller-encoded branch") {
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    CHECK(F9.sqrt(0) == 0);
    CHECK(F9.sqrt(1) == 1);
    // Under x^2 + 1 the roots of s^2 = 2 = -1 are x and 2x (encodings 3, 6).
    CHECK(F9.mul(3, 3) == 2);
    CHECK(F9.sqrt(2) == 3);
    CHECK_THROWS_AS(F9.sqrt(F9.non_square().enc()), std::invalid_argument);

    // Exhaustive round-trip over GF(25) and GF(27): sqrt(a)^2 = a and the
    // returned branch is the smaller of the two.
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{5, 2}, {3, 3}}) {
        const FieldCtx& F = FieldCtx::make(p, r);
        for (std::uint32_t a = 0; a < F.q(); ++a) {
            if (!F.is_square(a)) continue;
            std::uint32_t s = F.sqrt(a);
            CHECK(F.mul(s, s) == a);
            CHECK(s <= F.neg(s));
        }
    }
}

TEST_CASE("primitive elements are the smallest-encoded generators") {
    CHECK(FieldCtx::make(3, 1).generator().enc() == 2);
    CHECK(FieldCtx::make(5, 1).generator().enc() == 2);

    // Exhaustive order oracle over GF(9): the generator must be the first
    // element of multiplicative order q - 1.
    const FieldCtx& F9 = FieldCtx::make(3, 2);
    auto order_of = [&](std::uint32_t a) {
        std::uint32_t acc = a, order = 1;
        while (acc != 1) {
            acc = F9.mul(acc, a);
            ++order;
        }
        return order;
    };
    std::uint32_t expected = 0;
    for (std::uint32_t a = 2; a < 9; ++a) {
        if (order_of(a) == 8) {
            expected = a;
            break;
        }
    }
    CHECK(F9.generator().enc() == expected);
    CHECK(expected == 4);  // x + 1 under the canonical modulus x^2 + 1
}

TEST_CASE("from_int embeds integers through the prime subfield") {
    const FieldCtx& F = FieldCtx::make(5, 2);
    CHECK(F.from_int(7).enc() == 2);
    CHECK(F.from_int(-1).enc() == 4);
    CHECK(F.from_int(0).is_zero());
}
