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

// Deterministic random generators shared by the unit and acceptance suites.

#ifndef LCDMDS_TESTS_SUPPORT_HPP
#define LCDMDS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>

#include "lcdmds/lcdengine.hpp"

namespace testsup {

using namespace lcdmds;

using Rng = std::mt19937_64;

inline std::uint32_t random_enc(const FieldCtx& F, Rng& rng, std::uint32_t lo = 0) {
    return std::uniform_int_distribution<std::uint32_t>(lo, F.q() - 1)(rng);
}

inline FieldElement random_element(const FieldCtx& F, Rng& rng) {
    return F.element(random_enc(F, rng));
}

inline FieldElement random_nonzero(const FieldCtx& F, Rng& rng) {
    return F.element(random_enc(F, rng, 1));
}

inline Polynomial random_poly(const FieldCtx& F, int degree, Rng& rng) {
    if (degree < 0) return Polynomial(F);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = random_enc(F, rng);
    c[static_cast<std::size_t>(degree)] = random_enc(F, rng, 1);
    return Polynomial(F, std::move(c));
}

inline Polynomial random_poly_up_to(const FieldCtx& F, int max_degree, Rng& rng,
                                    bool allow_zero = true) {
    int lo = allow_zero ? -1 : 0;
    int degree = std::uniform_int_distribution<int>(lo, max_degree)(rng);
    return random_poly(F, degree, rng);
}

inline std::vector<FieldElement> random_distinct(const FieldCtx& F, std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> all(F.q());
    for (std::uint32_t i = 0; i < F.q(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(F.element(all[i]));
    return out;
}

inline EvaluationSet random_eval_set(const FieldCtx& F, std::size_t n, Rng& rng) {
    return EvaluationSet(F, random_distinct(F, n, rng));
}

/// Random monic irreducible of the given degree (uniform by rejection).
inline Polynomial random_irreducible(const FieldCtx& F, int degree, Rng& rng) {
    for (;;) {
        Polynomial cand = random_poly(F, degree, rng).monic();
        if (is_irreducible(cand)) return cand;
    }
}

/// Random finite place of degree <= max_degree whose rational points avoid
/// the given encodings. Falls back to a degree-two place when the rational
/// points are (nearly) exhausted; callers filter on degree anyway.
inline Place random_finite_place(const FieldCtx& F, int max_degree, Rng& rng,
                                 const std::set<std::uint32_t>& avoid_rational) {
    for (int attempts = 0; attempts < 200; ++attempts) {
        int degree = std::uniform_int_distribution<int>(1, max_degree)(rng);
        if (degree == 1) {
            std::uint32_t enc = random_enc(F, rng);
            if (avoid_rational.count(enc)) continue;
            return Place::rational(F.element(enc));
        }
        return Place::finite(random_irreducible(F, degree, rng));
    }
    return Place::finite(random_irreducible(F, 2, rng));
}

/// Random divisor of the exact target degree. Finite support avoids the
/// given rational encodings; the balance lands on the infinite place.
inline Divisor random_divisor(const FieldCtx& F, int target_degree, Rng& rng,
                              const std::set<std::uint32_t>& avoid_rational,
                              int places = 2, int max_place_degree = 2) {
    Divisor out(F);
    int count = std::uniform_int_distribution<int>(0, places)(rng);
    for (int i = 0; i < count; ++i) {
        Place place = random_finite_place(F, max_place_degree, rng, avoid_rational);
        int coeff = std::uniform_int_distribution<int>(-2, 2)(rng);
        out.add_place(place, coeff);
    }
    out.add_place(Place::at_infinity(F), target_degree - out.degree());
    return out;
}

/// Random effective divisor aiming for the exact target degree with finite
/// support avoiding the given rational points and places. Draws are bounded;
/// when the field runs out of admissible places the result falls short, so
/// callers must check degree() == target before using it.
inline Divisor random_effective_divisor(const FieldCtx& F, int target_degree, Rng& rng,
                                        const std::set<std::uint32_t>& avoid_rational,
                                        const Divisor& avoid_support) {
    Divisor out(F);
    int remaining = target_degree;
    int attempts = 500;
    while (remaining > 0 && attempts-- > 0) {
        Place place = random_finite_place(F, std::min(2, remaining), rng, avoid_rational);
        if (avoid_support.coeff(place) != 0 || out.coeff(place) != 0) continue;
        int mult = std::uniform_int_distribution<int>(1, std::max(1, remaining / place.degree()))(rng);
        if (mult * place.degree() > remaining) continue;
        out.add_place(place, mult);
        remaining -= mult * place.degree();
    }
    return out;
}

} // namespace testsup

#endif
