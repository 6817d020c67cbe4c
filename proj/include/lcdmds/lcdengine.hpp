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

#ifndef LCDMDS_LCDENGINE_HPP
#define LCDMDS_LCDENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcdmds/agcode.hpp"

namespace lcdmds {

/// Catalog of explicit constructions exposed by the CLI.
enum class ConstructionKind { c36i, c36ii, c37, c38, c39, c310, c311 };

std::string to_string(ConstructionKind kind);
ConstructionKind construction_kind_from_string(const std::string& name);

struct VerifyOptions {
    std::uint64_t mds_budget = 2'000'000;
    int mds_spot_checks = 200;
    std::uint64_t seed = 0xc0de5eedULL;
};

/// Certificate of a complementary-dual construction: the evaluation data,
/// the divisor triple (H, A, B), the square-valued function y, its square
/// roots at the evaluation points, and the interpolated balancing polynomial
/// w with w(P_i)^(-2) = y(P_i). The built code is C_L(D, H - A + (w)) and
/// its dual is C_L(D, H - B + (w)).
struct ConstructionWitness {
    EvaluationSet eval;
    Divisor h;
    Divisor a;
    Divisor b;
    RationalFunction y;
    std::vector<FieldElement> sqrt_values;
    Polynomial w;
    Divisor code_divisor;
};

struct VerificationReport {
    int hull = -1;
    bool lcd = false;
    MdsReport mds;
    bool dual_match = false;
    bool all_pass() const { return lcd && mds.mds && dual_match; }
};

struct ConstructionResult {
    LinearCode code;
    std::string kind;
    std::map<std::string, std::int64_t> params;
    ConstructionWitness witness;
    VerificationReport verified;
    std::vector<std::string> notes;
};

/// Core engine. Given effective divisors A, B and a divisor H with pairwise
/// disjoint supports (also disjoint from the evaluation points),
/// deg(H) = n-1 and deg(A) + deg(B) = n, builds the [n, n - deg(A)]
/// complementary-dual MDS code C_L(D, H - A + (w)) and verifies it.
///
/// The divisor 2H - A - B - (z) - (n-2)Pinf determines y only up to a scalar;
/// since scaling by c multiplies every value's quadratic character by chi(c),
/// the canonical y0 either already has constant character at the evaluation
/// points (fix with scalar 1 or the canonical non-square) or no scalar works
/// and the divisor choice is rejected.
ConstructionResult build_lcd_mds(const EvaluationSet& e, const Divisor& h, const Divisor& a,
                                 const Divisor& b, const VerifyOptions& opts = {});

enum class SquareSplitVariant { General, RationalPlace };

/// Square-function route: given Z = 2X + Y1 + Y2 (all effective, Y1 and Y2
/// with disjoint supports), picks H as a place of degree n-1 and K as a place
/// of degree m (the General variant, m = 0 or 2 <= m <= (n - deg Y)/2) or as
/// a rational place outside D and supp(Y2) (the RationalPlace variant, which
/// is exactly the m = 1 case), then sets A = 2K + Y1 and
/// B = Y2 + (n - 2m - deg Y) Pinf and delegates to build_lcd_mds. Auxiliary
/// places are the smallest ones subject to the stated avoidance sets, which
/// makes every output reproducible.
ConstructionResult build_from_square_split(const EvaluationSet& e, const Divisor& x,
                                           const Divisor& y1, const Divisor& y2, int m,
                                           SquareSplitVariant variant,
                                           const VerifyOptions& opts = {});

/// Parameters for the explicit catalog; each kind reads the fields it needs
/// and resolves k or m into a concrete instance (including the dual-closure
/// route where the catalog uses it).
struct ExplicitParams {
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> t;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> d;
};

ConstructionResult explicit_construction(const FieldCtx& ctx, ConstructionKind kind,
                                         const ExplicitParams& params,
                                         const VerifyOptions& opts = {});

struct FeasibleEntry {
    int n = 0;
    int k = 0;
    ConstructionKind kind = ConstructionKind::c36i;
    ExplicitParams params;
    std::vector<std::string> notes;
};

/// All (n, k) reachable over the given field by the explicit catalog,
/// deduplicated (first kind in catalog order wins) and sorted by (n, k).
/// Every entry is constructible by explicit_construction.
std::vector<FeasibleEntry> enumerate_feasible(const FieldCtx& ctx);

/// Independent re-check of a construction: hull dimension via the Gram rank,
/// the MDS property (exhaustive within budget, certified otherwise), and the
/// dual-divisor match dual(C) = C_L(D, H - B + (w)). Failures are reported,
/// never thrown.
VerificationReport verify_certificate(const LinearCode& code, const ConstructionWitness& witness,
                                      const VerifyOptions& opts = {});

} // namespace lcdmds

#endif
