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

#include "lcdmds/agcode.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lcdmds {

EvaluationSet::EvaluationSet(const FieldCtx& ctx, std::vector<FieldElement> alphas)
    : ctx_(&ctx), alphas_(std::move(alphas)), g_(ctx), z_(ctx), d_(ctx), z_divisor_(ctx) {
    require_arg(!alphas_.empty() && alphas_.size() <= ctx.q(),
                "evaluation set needs 1 <= n <= q points");
    std::set<std::uint32_t> seen;
    Polynomial g = Polynomial::constant(ctx.one());
    for (const FieldElement& a : alphas_) {
        require_arg(&a.ctx() == &ctx, "evaluation point from a different field");
        require_arg(seen.insert(a.enc()).second, "evaluation points must be pairwise distinct");
        g = g * Polynomial::x_minus(a);
        d_.add_place(Place::rational(a), 1);
    }
    g_ = g;
    z_ = derivative(g_);
    internal_check(!z_.is_zero(), "derivative of a separable node polynomial cannot vanish");
    if (!z_.is_constant()) {
        z_divisor_ = principal_divisor(z_).positive_part();
    }
    for (const FieldElement& a : alphas_) {
        internal_check(!z_.eval(a).is_zero(), "z vanishes on an evaluation point");
    }
    internal_check(supports_disjoint(z_divisor_, d_), "supp(Z) meets supp(D)");
}

LinearCode::LinearCode(const FieldCtx& ctx, std::size_t n, Matrix generator)
    : ctx_(&ctx), n_(n), k_(generator.rows()), generator_(std::move(generator)),
      rref_(generator_.rref()) {
    require_arg(generator_.cols() == n, "generator width does not match the length");
    require_arg(rref_.rows() == k_, "generator matrix does not have full row rank");
}

LinearCode build_cl(const EvaluationSet& e, const Divisor& g) {
    const FieldCtx& F = e.ctx();
    require_arg(&g.ctx() == &F, "divisor over a different field");
    for (const FieldElement& a : e.alphas()) {
        require_arg(g.coeff(Place::rational(a)) == 0,
                    "supp(G) must be disjoint from the evaluation points");
    }
    const int n = static_cast<int>(e.n());
    const int deg = g.degree();
    require_arg(deg <= n - 1, "deg(G) must be at most n-1 for injective evaluation");
    if (deg < 0) {
        return LinearCode(F, e.n(), Matrix(F, 0, e.n()));
    }
    std::vector<RationalFunction> basis = riemann_roch_basis(g);
    Matrix m(F, basis.size(), e.n());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < e.n(); ++j) {
            m.set(i, j, evaluate(basis[i], e.place(j)).enc());
        }
    }
    LinearCode code(F, e.n(), std::move(m));
    internal_check(code.k() == static_cast<std::size_t>(deg) + 1,
                   "evaluation map lost rank unexpectedly");
    return code;
}

Divisor dual_divisor(const EvaluationSet& e, const Divisor& g) {
    require_arg(&g.ctx() == &e.ctx(), "divisor over a different field");
    Divisor out = principal_divisor(RationalFunction::from_poly(e.z())) - g;
    out.add_place(Place::at_infinity(e.ctx()), static_cast<int>(e.n()) - 2);
    return out;
}

std::vector<FieldElement> grs_multipliers(const EvaluationSet& e, const Divisor& g) {
    require_arg(g.degree() >= 0, "multipliers need deg(G) >= 0");
    const int k_minus_1 = g.degree();
    Divisor delta = Divisor::single(Place::at_infinity(e.ctx()), k_minus_1) - g;
    RationalFunction y = function_with_divisor(delta);
    std::vector<FieldElement> v;
    v.reserve(e.n());
    for (std::size_t i = 0; i < e.n(); ++i) {
        FieldElement value = evaluate(y, e.place(i));
        internal_check(!value.is_zero(), "GRS multiplier vanished on an evaluation point");
        v.push_back(value);
    }
    return v;
}

Matrix rs_generator(const FieldCtx& ctx, const std::vector<FieldElement>& alphas,
                    const std::vector<FieldElement>& multipliers, std::size_t k) {
    require_arg(alphas.size() == multipliers.size(), "points/multipliers size mismatch");
    Matrix m(ctx, k, alphas.size());
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        require_arg(!multipliers[j].is_zero(), "GRS multipliers must be nonzero");
        std::uint32_t acc = multipliers[j].enc();
        for (std::size_t i = 0; i < k; ++i) {
            m.set(i, j, acc);
            acc = ctx.mul(acc, alphas[j].enc());
        }
    }
    return m;
}

int hull_dimension(const LinearCode& c) {
    if (c.k() == 0) return 0;
    Matrix gram = c.generator() * c.generator().transpose();
    return static_cast<int>(c.k() - gram.rank());
}

LinearCode dual_code(const LinearCode& c) {
    return LinearCode(c.ctx(), c.n(), c.generator().nullspace());
}

LinearCode intersect_codes(const LinearCode& a, const LinearCode& b) {
    require_arg(&a.ctx() == &b.ctx() && a.n() == b.n(), "codes over different ambient spaces");
    // Left kernel of the stacked generators: (u | v) with u G_a + v G_b = 0;
    // each kernel row yields the intersection vector u G_a.
    Matrix stacked = a.generator().stacked(b.generator());
    Matrix kernel = stacked.transpose().nullspace();
    Matrix vectors(a.ctx(), kernel.rows(), a.n());
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < a.k(); ++i) {
                acc = a.ctx().add(acc, a.ctx().mul(kernel.at(r, i), a.generator().at(i, j)));
            }
            vectors.set(r, j, acc);
        }
    }
    return LinearCode(a.ctx(), a.n(), vectors.rref());
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    require_arg(&a.ctx() == &b.ctx() && a.n() == b.n(), "codes over different ambient spaces");
    return LinearCode(a.ctx(), a.n(), a.generator().stacked(b.generator()).rref());
}

bool codes_equal(const LinearCode& a, const LinearCode& b) { return a == b; }

int hull_dimension_via_intersection(const LinearCode& c) {
    if (c.k() == 0) return 0;
    return static_cast<int>(intersect_codes(c, dual_code(c)).k());
}

namespace {

// C(n, s) with saturation just above the cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t s, std::uint64_t cap) {
    if (s > n) return 0;
    s = std::min(s, n - s);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        const std::uint64_t factor = n - s + i;
        if (result > UINT64_MAX / factor) return cap + 1;
        result = result * factor / i;  // always integral here
        if (result > cap) return cap + 1;
    }
    return result;
}

bool submatrix_invertible(const FieldCtx& F, const Matrix& m,
                          const std::vector<std::size_t>& cols, std::vector<std::uint32_t>& work) {
    const std::size_t s = cols.size();
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) work[i * s + j] = m.at(i, cols[j]);
    }
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        while (pivot < s && work[pivot * s + col] == 0) ++pivot;
        if (pivot == s) return false;
        if (pivot != col) {
            for (std::size_t j = col; j < s; ++j) std::swap(work[pivot * s + j], work[col * s + j]);
        }
        const std::uint32_t inv = F.inv(work[col * s + col]);
        for (std::size_t i = col + 1; i < s; ++i) {
            const std::uint32_t f = F.mul(work[i * s + col], inv);
            if (f == 0) continue;
            for (std::size_t j = col; j < s; ++j) {
                work[i * s + j] = F.sub(work[i * s + j], F.mul(f, work[col * s + j]));
            }
        }
    }
    return true;
}

} // namespace

MdsReport is_mds(const LinearCode& c, MdsMode mode, std::uint64_t budget,
                 const std::optional<GrsWitness>& witness, std::uint64_t seed, int spot_checks) {
    const FieldCtx& F = c.ctx();
    const std::size_t n = c.n(), k = c.k();
    MdsReport report;
    if (k == 0 || k == n) {
        // d = n+1 resp. d = 1; the Singleton bound is met vacuously.
        report.mds = true;
        report.mode = "trivial";
        return report;
    }

    if (mode == MdsMode::Certified) {
        require_arg(witness.has_value(), "certified MDS mode needs a GRS witness");
        report.mode = "certified";
        Matrix replay = rs_generator(F, witness->alphas, witness->multipliers, k);
        if (replay.cols() != n || replay.rref() != c.canonical()) {
            report.mds = false;
            return report;
        }
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> pick(n);
        for (std::size_t j = 0; j < n; ++j) pick[j] = j;
        std::vector<std::uint32_t> work(k * k);
        for (int t = 0; t < spot_checks; ++t) {
            std::shuffle(pick.begin(), pick.end(), rng);
            std::vector<std::size_t> cols(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k));
            std::sort(cols.begin(), cols.end());
            ++report.subsets_checked;
            if (!submatrix_invertible(F, replay, cols, work)) {
                report.mds = false;
                report.failing_columns = cols;
                return report;
            }
        }
        report.mds = true;
        return report;
    }

    // Exhaustive: check the cheaper of the two equivalent sides.
    report.mode = "exhaustive";
    const bool use_dual = (n - k) < k;
    const Matrix side = use_dual ? dual_code(c).generator() : c.generator();
    const std::size_t s = use_dual ? n - k : k;
    report.dual_side = use_dual;

    const std::uint64_t count = binomial_capped(n, s, budget);
    if (count > budget) {
        throw BudgetError("exhaustive MDS check needs " + std::to_string(count) +
                          " column subsets, budget is " + std::to_string(budget) +
                          "; use certified mode");
    }

    std::vector<std::size_t> cols(s);
    for (std::size_t i = 0; i < s; ++i) cols[i] = i;
    std::vector<std::uint32_t> work(s * s);
    for (;;) {
        ++report.subsets_checked;
        if (!submatrix_invertible(F, side, cols, work)) {
            report.mds = false;
            report.failing_columns = cols;
            return report;
        }
        // next combination in lexicographic order
        std::size_t i = s;
        while (i-- > 0) {
            if (cols[i] != i + n - s) {
                ++cols[i];
                for (std::size_t j = i + 1; j < s; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) {
                report.mds = true;
                return report;
            }
        }
    }
}

} // namespace lcdmds
