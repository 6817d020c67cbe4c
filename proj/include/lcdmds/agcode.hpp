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

#ifndef LCDMDS_AGCODE_HPP
#define LCDMDS_AGCODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdmds/funcfield.hpp"
#include "lcdmds/linalg.hpp"

namespace lcdmds {

/// Ordered pairwise-distinct evaluation points alpha_1..alpha_n together
/// with the data every construction needs: the divisor D of the rational
/// evaluation places, the node polynomial g = prod(x - alpha_i), its
/// derivative z, and the zero divisor Z of z. Since every alpha_i is a
/// simple root of g, z never vanishes on the evaluation set, so Z and D
/// always have disjoint supports (re-checked at construction).
class EvaluationSet {
public:
    EvaluationSet(const FieldCtx& ctx, std::vector<FieldElement> alphas);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t n() const { return alphas_.size(); }
    const std::vector<FieldElement>& alphas() const { return alphas_; }
    const Polynomial& g() const { return g_; }
    const Polynomial& z() const { return z_; }
    const Divisor& d() const { return d_; }
    /// Zero divisor of z, i.e. the positive part of (z).
    const Divisor& zero_divisor_of_z() const { return z_divisor_; }
    Place place(std::size_t i) const { return Place::rational(alphas_[i]); }

private:
    const FieldCtx* ctx_;
    std::vector<FieldElement> alphas_;
    Polynomial g_;
    Polynomial z_;
    Divisor d_;
    Divisor z_divisor_;
};

/// Linear [n, k] code stored as a full-rank generator matrix together with
/// its reduced row echelon form. Codes are compared as row spaces: equality
/// is canonical-form equality.
class LinearCode {
public:
    LinearCode(const FieldCtx& ctx, std::size_t n, Matrix generator);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const Matrix& generator() const { return generator_; }
    const Matrix& canonical() const { return rref_; }

    bool operator==(const LinearCode& o) const {
        return ctx_ == o.ctx_ && n_ == o.n_ && rref_ == o.rref_;
    }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

private:
    const FieldCtx* ctx_;
    std::size_t n_;
    std::size_t k_;
    Matrix generator_;
    Matrix rref_;
};

/// Functional code C_L(D, G): evaluations of a Riemann-Roch basis of L(G) at
/// the points of E. Requires supp(G) disjoint from supp(D) and deg(G) <= n-1;
/// a negative-degree G yields the zero code.
LinearCode build_cl(const EvaluationSet& e, const Divisor& g);

/// Divisor (z) - G + (n-2) * Pinf whose functional code is the dual of
/// C_L(D, G).
Divisor dual_divisor(const EvaluationSet& e, const Divisor& g);

/// Column multipliers v with C_L(D, G) = { (v_i f(alpha_i))_i : deg f <= k-1 },
/// where k - 1 = deg(G) >= 0. Derived from the canonical function with
/// divisor (k-1) * Pinf - G.
std::vector<FieldElement> grs_multipliers(const EvaluationSet& e, const Divisor& g);

/// Generator matrix of the generalized Reed-Solomon code with the given
/// points, multipliers and dimension: rows (v_j * alpha_j^i).
Matrix rs_generator(const FieldCtx& ctx, const std::vector<FieldElement>& alphas,
                    const std::vector<FieldElement>& multipliers, std::size_t k);

/// dim(C meet C-dual) computed as k - rank(M M^T). LCD means hull zero.
int hull_dimension(const LinearCode& c);
/// Same quantity through the explicit row-space/nullspace intersection;
/// used to cross-check the Gram-rank path.
int hull_dimension_via_intersection(const LinearCode& c);

LinearCode dual_code(const LinearCode& c);
LinearCode intersect_codes(const LinearCode& a, const LinearCode& b);
LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
bool codes_equal(const LinearCode& a, const LinearCode& b);

/// GRS certificate: evaluation points plus column multipliers reproducing
/// the code. Backs the certified MDS mode.
struct GrsWitness {
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> multipliers;
};

enum class MdsMode { Exhaustive, Certified };

struct MdsReport {
    bool mds = false;
    std::string mode;                       // "exhaustive", "certified" or "trivial"
    std::uint64_t subsets_checked = 0;
    std::optional<std::vector<std::size_t>> failing_columns;
    bool dual_side = false;                 // failing columns refer to the parity check
};

/// MDS decision. Exhaustive mode checks the smaller of the two sides: every
/// min(k, n-k)-subset of generator (or parity-check) columns must be
/// invertible; it refuses with BudgetError when the number of subsets
/// exceeds `budget`. Certified mode replays a GRS witness against the code
/// (exact canonical-form equality) and adds `spot_checks` randomized subset
/// probes drawn from `seed`.
MdsReport is_mds(const LinearCode& c, MdsMode mode, std::uint64_t budget = 2'000'000,
                 const std::optional<GrsWitness>& witness = std::nullopt,
                 std::uint64_t seed = 0xc0de5eedULL, int spot_checks = 200);

} // namespace lcdmds

#endif
