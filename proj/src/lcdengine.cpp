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

#include "lcdmds/lcdengine.hpp"

#include <algorithm>
#include <set>

namespace lcdmds {

std::string to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::c36i: return "c36i";
        case ConstructionKind::c36ii: return "c36ii";
        case ConstructionKind::c37: return "c37";
        case ConstructionKind::c38: return "c38";
        case ConstructionKind::c39: return "c39";
        case ConstructionKind::c310: return "c310";
        case ConstructionKind::c311: return "c311";
    }
    throw std::invalid_argument("unknown construction kind");
}

ConstructionKind construction_kind_from_string(const std::string& name) {
    if (name == "c36i") return ConstructionKind::c36i;
    if (name == "c36ii") return ConstructionKind::c36ii;
    if (name == "c37") return ConstructionKind::c37;
    if (name == "c38") return ConstructionKind::c38;
    if (name == "c39") return ConstructionKind::c39;
    if (name == "c310") return ConstructionKind::c310;
    if (name == "c311") return ConstructionKind::c311;
    throw std::invalid_argument("unknown construction kind: " + name);
}

namespace {

void engine_check(bool condition, const std::string& what) {
    if (!condition) {
        throw InternalCheckError("construction self-check failed: " + what);
    }
}

void feasible(bool condition, const std::string& what) {
    if (!condition) throw InfeasibleError(what);
}

Divisor pinf(const FieldCtx& F, int coeff) {
    return Divisor::single(Place::at_infinity(F), coeff);
}

/// Zero divisor of a nonzero polynomial (finite places with multiplicities).
Divisor finite_zero_divisor(const Polynomial& p) {
    Divisor out(p.ctx());
    if (p.is_constant()) return out;
    for (const auto& [g, mult] : factor(p)) out.add_place(Place::finite(g), mult);
    return out;
}

/// Distinct roots of g in the coefficient field, sorted by encoding;
/// verifies that g splits completely with simple roots.
std::vector<FieldElement> simple_roots(const Polynomial& g) {
    std::vector<FieldElement> out;
    for (const auto& [root, mult] : roots_in_field(g)) {
        engine_check(mult == 1, "expected only simple roots");
        out.push_back(root);
    }
    engine_check(static_cast<int>(out.size()) == g.degree(),
                 "expected the polynomial to split completely");
    return out;
}

std::set<std::uint32_t> encoding_set(const std::vector<FieldElement>& elems) {
    std::set<std::uint32_t> out;
    for (const FieldElement& e : elems) out.insert(e.enc());
    return out;
}

/// First `count` elements (by encoding) outside the given set.
std::vector<FieldElement> smallest_outside(const FieldCtx& F, const std::set<std::uint32_t>& used,
                                           std::size_t count) {
    std::vector<FieldElement> out;
    for (std::uint32_t enc = 0; enc < F.q() && out.size() < count; ++enc) {
        if (used.find(enc) == used.end()) out.push_back(F.element(enc));
    }
    feasible(out.size() == count, "not enough field elements outside the forbidden set");
    return out;
}

int require_some_k_or_m(const ExplicitParams& p) {
    feasible(p.k.has_value() || p.m.has_value(), "specify the dimension k or the parameter m");
    return 0;
}

void check_k_consistent(const ExplicitParams& p, int k) {
    if (p.k.has_value()) {
        feasible(*p.k == k, "k = " + std::to_string(*p.k) +
                                " is inconsistent with m for this construction (expected k = " +
                                std::to_string(k) + ")");
    }
}

} // namespace

VerificationReport verify_certificate(const LinearCode& code, const ConstructionWitness& witness,
                                      const VerifyOptions& opts) {
    VerificationReport rep;
    rep.hull = hull_dimension(code);
    rep.lcd = (rep.hull == 0);

    try {
        rep.mds = is_mds(code, MdsMode::Exhaustive, opts.mds_budget);
    } catch (const BudgetError&) {
        try {
            GrsWitness grs{witness.eval.alphas(),
                           grs_multipliers(witness.eval, witness.code_divisor)};
            rep.mds = is_mds(code, MdsMode::Certified, opts.mds_budget, grs, opts.seed,
                             opts.mds_spot_checks);
        } catch (const std::exception&) {
            rep.mds.mds = false;
            rep.mds.mode = "certified";
        }
    }

    try {
        Divisor dual_side =
            witness.h - witness.b + principal_divisor(RationalFunction::from_poly(witness.w));
        LinearCode expected_dual = build_cl(witness.eval, dual_side);
        rep.dual_match = (dual_code(code) == expected_dual);
    } catch (const std::exception&) {
        rep.dual_match = false;  // a witness that cannot even be replayed does not match
    }
    return rep;
}

ConstructionResult build_lcd_mds(const EvaluationSet& e, const Divisor& h, const Divisor& a,
                                 const Divisor& b, const VerifyOptions& opts) {
    const FieldCtx& F = e.ctx();
    const int n = static_cast<int>(e.n());
    require_arg(&h.ctx() == &F && &a.ctx() == &F && &b.ctx() == &F,
                "divisors over a different field");
    require_arg(a.is_effective(), "A must be effective");
    require_arg(b.is_effective(), "B must be effective");
    require_arg(supports_disjoint(a, b), "supp(A) meets supp(B)");
    require_arg(supports_disjoint(a, h), "supp(A) meets supp(H)");
    require_arg(supports_disjoint(b, h), "supp(B) meets supp(H)");
    require_arg(supports_disjoint(a, e.d()), "supp(A) meets supp(D)");
    require_arg(supports_disjoint(b, e.d()), "supp(B) meets supp(D)");
    require_arg(supports_disjoint(h, e.d()), "supp(H) meets supp(D)");
    require_arg(h.degree() == n - 1, "deg(H) must be n-1");
    require_arg(a.degree() + b.degree() == n,
                "deg(A) + deg(B) must equal n (forced by the degree-zero principal divisor)");

    Divisor delta = h * 2 - a - b - principal_divisor(RationalFunction::from_poly(e.z())) -
                    pinf(F, n - 2);
    engine_check(delta.degree() == 0, "2H - A - B - (z) - (n-2)Pinf must have degree zero");

    RationalFunction y = function_with_divisor(delta);
    std::vector<FieldElement> values;
    values.reserve(e.n());
    int squares = 0;
    for (std::size_t i = 0; i < e.n(); ++i) {
        FieldElement v = evaluate(y, e.place(i));
        engine_check(!v.is_zero(), "support leak: y vanishes at an evaluation point");
        if (v.is_square()) ++squares;
        values.push_back(v);
    }
    if (squares != n) {
        // chi(c * y(P_i)) = chi(c) * chi(y(P_i)): a scalar can only flip the
        // whole pattern, so a mixed pattern is beyond repair.
        feasible(squares == 0,
                 "the square pattern of y at the evaluation points is "
                 "mixed, so no scalar multiple of y is square-valued on all of them");
        FieldElement flip = F.non_square();
        y = y * flip;
        for (FieldElement& v : values) v = v * flip;
    }

    std::vector<FieldElement> sqrt_values;
    std::vector<std::pair<FieldElement, FieldElement>> nodes;
    sqrt_values.reserve(e.n());
    nodes.reserve(e.n());
    for (std::size_t i = 0; i < e.n(); ++i) {
        FieldElement s = values[i].sqrt();
        sqrt_values.push_back(s);
        nodes.emplace_back(e.alphas()[i], s.inverse());
    }
    Polynomial w = interpolate(nodes);
    for (std::size_t i = 0; i < e.n(); ++i) {
        FieldElement wv = w.eval(e.alphas()[i]);
        engine_check(wv * wv * values[i] == F.one(), "w(P_i)^(-2) = y(P_i) failed");
    }

    Divisor code_divisor = h - a + principal_divisor(RationalFunction::from_poly(w));
    for (const FieldElement& alpha : e.alphas()) {
        engine_check(code_divisor.coeff(Place::rational(alpha)) == 0,
                     "code divisor touches an evaluation point");
    }

    LinearCode code = build_cl(e, code_divisor);
    engine_check(static_cast<int>(code.k()) == n - a.degree(),
                 "dimension must be n - deg(A)");

    ConstructionWitness witness{e, h, a, b, y, sqrt_values, w, code_divisor};
    VerificationReport report = verify_certificate(code, witness, opts);
    if (!report.all_pass()) {
        throw InternalCheckError(
            "constructed code failed verification (hull=" + std::to_string(report.hull) +
            ", mds=" + (report.mds.mds ? "yes" : "no") +
            ", dual_match=" + (report.dual_match ? "yes" : "no") + ")");
    }

    ConstructionResult result{code,
                              "divisor-triple",
                              {{"q", F.q()},
                               {"n", n},
                               {"k", static_cast<std::int64_t>(code.k())}},
                              witness,
                              report,
                              {}};
    return result;
}

ConstructionResult build_from_square_split(const EvaluationSet& e, const Divisor& x,
                                           const Divisor& y1, const Divisor& y2, int m,
                                           SquareSplitVariant variant, const VerifyOptions& opts) {
    const FieldCtx& F = e.ctx();
    const int n = static_cast<int>(e.n());
    require_arg(n >= 3, "this route needs n >= 3");
    require_arg(x.is_effective() && y1.is_effective() && y2.is_effective(),
                "X, Y1, Y2 must be effective");
    require_arg(supports_disjoint(y1, y2), "Y1 and Y2 must have disjoint supports");
    require_arg(e.zero_divisor_of_z() == x * 2 + y1 + y2,
                "invalid decomposition: Z != 2X + Y1 + Y2");
    const int ydeg = y1.degree() + y2.degree();

    Divisor k_div(F);
    int kdeg = 0;
    if (variant == SquareSplitVariant::General) {
        feasible(m != 1, "m = 1 is excluded here; the rational-place variant covers it");
        feasible(m >= 0, "m must be nonnegative");
        if (m >= 2) {
            feasible(2 * m <= n - ydeg,
                     "m out of range: need 2 <= m <= (n - deg Y)/2 = " +
                         std::to_string((n - ydeg) / 2));
            std::vector<Polynomial> forbidden;
            for (const auto& [place, c] : y2.terms()) {
                if (!place.is_infinity() && place.degree() == m) {
                    forbidden.push_back(place.irreducible());
                }
            }
            Polynomial r = irreducible_of_degree(F, static_cast<std::uint32_t>(m), forbidden);
            k_div = Divisor::single(Place::finite(r), 1);
            kdeg = m;
        }
    } else {
        require_arg(m == 1, "the rational-place variant is exactly the m = 1 case");
        feasible(ydeg <= n - 2, "need deg(Y) <= n - 2 for the rational-place variant");
        std::set<std::uint32_t> used = encoding_set(e.alphas());
        for (const auto& [place, c] : y2.terms()) {
            if (!place.is_infinity() && place.degree() == 1) used.insert(place.alpha().enc());
        }
        feasible(used.size() < F.q(),
                 "no rational place available outside D and supp(Y2)");
        FieldElement point = smallest_outside(F, used, 1).front();
        k_div = Divisor::single(Place::rational(point), 1);
        kdeg = 1;
    }

    Divisor a = k_div * 2 + y1;
    Divisor b = y2 + pinf(F, n - 2 * kdeg - ydeg);

    std::vector<Polynomial> h_forbidden;
    for (const Divisor* part : {&y1, &y2}) {
        for (const auto& [place, c] : part->terms()) {
            if (!place.is_infinity() && place.degree() == n - 1) {
                h_forbidden.push_back(place.irreducible());
            }
        }
    }
    Polynomial q_poly = irreducible_of_degree(F, static_cast<std::uint32_t>(n - 1), h_forbidden);
    Divisor h = Divisor::single(Place::finite(q_poly), 1);

    ConstructionResult result = build_lcd_mds(e, h, a, b, opts);
    result.kind = (variant == SquareSplitVariant::General) ? "square-split" : "square-split-rational";
    result.params["m"] = kdeg;
    if (a.degree() == 0) {
        result.notes.push_back(
            "A = 0: the code is the full ambient space and complementarity is immediate");
    }
    if (result.code.k() == 0) {
        result.notes.push_back("zero code (degenerate boundary case)");
    }
    return result;
}

namespace {

struct ResolvedInstance {
    int m = 0;
    bool dual = false;
    int family = 0;  // construction-specific switch
};

ConstructionResult run_square_split(const EvaluationSet& e, const Divisor& x, const Divisor& y1,
                             const Divisor& y2, int m, const VerifyOptions& opts) {
    return build_from_square_split(
        e, x, y1, y2, m, m == 1 ? SquareSplitVariant::RationalPlace : SquareSplitVariant::General,
        opts);
}

/// Dual-closure route: the dual of C_L(D, H - A + (w)) is C_L(D, H - B + (w)),
/// which is the same engine instance with the roles of A and B swapped.
ConstructionResult apply_dual(const ConstructionResult& primal, const VerifyOptions& opts) {
    ConstructionResult out =
        build_lcd_mds(primal.witness.eval, primal.witness.h, primal.witness.b, primal.witness.a,
                    opts);
    out.notes.push_back("dual-closure route: roles of A and B swapped relative to the [n, " +
                        std::to_string(primal.code.k()) + "] companion");
    return out;
}

void annotate_common(ConstructionResult& result, ConstructionKind kind, const FieldCtx& F) {
    result.kind = to_string(kind);
    result.params["p"] = F.p();
    result.params["r"] = F.r();
    result.params["q"] = F.q();
    result.params["n"] = static_cast<std::int64_t>(result.code.n());
    result.params["k"] = static_cast<std::int64_t>(result.code.k());
    if (result.code.k() == result.code.n()) {
        result.notes.push_back("full ambient space (trivially complementary-dual, distance 1)");
    }
}

// ---- c36i: evaluation on an F_p-subspace -------------------------------

EvaluationSet subspace_evaluation_set(const FieldCtx& F, int t) {
    // Canonical subspace: the span of the first t power-basis elements, i.e.
    // all elements with encoding below p^t.
    std::uint32_t size = 1;
    for (int i = 0; i < t; ++i) size *= F.p();
    std::vector<FieldElement> alphas;
    alphas.reserve(size);
    for (std::uint32_t enc = 0; enc < size; ++enc) alphas.push_back(F.element(enc));
    return EvaluationSet(F, std::move(alphas));
}

ConstructionResult build_c36i(const FieldCtx& F, const ExplicitParams& p,
                              const VerifyOptions& opts) {
    feasible(p.t.has_value(), "c36i needs the subspace dimension t");
    const int t = static_cast<int>(*p.t);
    feasible(t >= 1 && t < static_cast<int>(F.r()),
             "c36i needs 1 <= t < r (got t = " + std::to_string(t) + ", r = " +
                 std::to_string(F.r()) + ")");
    int n = 1;
    for (int i = 0; i < t; ++i) n *= static_cast<int>(F.p());

    require_some_k_or_m(p);
    ResolvedInstance inst;
    if (p.m.has_value()) {
        inst.m = static_cast<int>(*p.m);
        feasible(inst.m >= 0 && 2 * inst.m <= n, "c36i needs 0 <= m <= n/2");
        check_k_consistent(p, n - 2 * inst.m);
    } else {
        const int k = static_cast<int>(*p.k);
        feasible(k >= 0 && k <= n, "c36i needs 0 <= k <= n = p^t");
        if ((n - k) % 2 == 0) {
            inst.m = (n - k) / 2;
        } else {
            inst.dual = true;  // n odd: even k comes from the dual of [n, n-k]
            inst.m = k / 2;
        }
    }

    EvaluationSet e = subspace_evaluation_set(F, t);
    engine_check(e.z().is_constant() && !e.z().is_zero(),
                 "the derivative of a subspace polynomial must be a nonzero constant");
    engine_check(e.zero_divisor_of_z().is_zero(), "Z = 0 for a subspace evaluation set");

    Divisor zero(F);
    ConstructionResult primal = run_square_split(e, zero, zero, zero, inst.m, opts);
    ConstructionResult result = inst.dual ? apply_dual(primal, opts) : std::move(primal);
    annotate_common(result, ConstructionKind::c36i, F);
    result.params["t"] = t;
    result.params["m"] = inst.m;
    result.params["dual"] = inst.dual ? 1 : 0;
    return result;
}

// ---- c36ii: evaluation on the roots of x^n - x -------------------------

ConstructionResult build_c36ii(const FieldCtx& F, const ExplicitParams& p,
                               const VerifyOptions& opts) {
    feasible(p.n.has_value(), "c36ii needs the length n");
    const int n = static_cast<int>(*p.n);
    const int q = static_cast<int>(F.q());
    feasible(n >= 3 && n <= q, "c36ii needs 3 <= n <= q");
    feasible(n % static_cast<int>(F.p()) == 0,
             "c36ii needs p | n (p = " + std::to_string(F.p()) + ", n = " + std::to_string(n) + ")");
    feasible((q - 1) % (n - 1) == 0,
             "c36ii needs (n-1) | (q-1) (n-1 = " + std::to_string(n - 1) + ", q-1 = " +
                 std::to_string(q - 1) + ")");

    require_some_k_or_m(p);
    ResolvedInstance inst;
    auto validate_m = [&](int m) {
        feasible(m >= 0 && 2 * m <= n, "c36ii needs 0 <= m <= n/2");
        feasible(m != 1 || n < q,
                 "m = 1 needs a rational place outside the evaluation set, impossible at n = q");
    };
    if (p.m.has_value()) {
        inst.m = static_cast<int>(*p.m);
        validate_m(inst.m);
        check_k_consistent(p, n - 2 * inst.m);
    } else {
        const int k = static_cast<int>(*p.k);
        feasible(k >= 0 && k <= n, "c36ii needs 0 <= k <= n");
        if ((n - k) % 2 == 0) {
            inst.m = (n - k) / 2;
        } else {
            feasible(n % 2 == 1,
                     "for even n only dimensions of the same parity as n are reachable here");
            inst.dual = true;
            inst.m = k / 2;
        }
        validate_m(inst.m);
    }

    Polynomial g = Polynomial::x(F).pow(n) - Polynomial::x(F);
    EvaluationSet e(F, simple_roots(g));
    engine_check(e.g() == g, "evaluation set must consist of all roots of x^n - x");
    engine_check(e.z() == Polynomial::constant(-F.one()), "z = -1 for x^n - x with p | n");
    engine_check(e.zero_divisor_of_z().is_zero(), "Z = 0 here");

    Divisor zero(F);
    ConstructionResult primal = run_square_split(e, zero, zero, zero, inst.m, opts);
    ConstructionResult result = inst.dual ? apply_dual(primal, opts) : std::move(primal);
    annotate_common(result, ConstructionKind::c36ii, F);
    result.params["m"] = inst.m;
    result.params["dual"] = inst.dual ? 1 : 0;
    if (n == q) result.notes.push_back("n equals the field size; m = 1 is unreachable");
    return result;
}

// ---- c37: evaluation on p cosets of the order-ell subgroup -------------

ConstructionResult build_c37(const FieldCtx& F, const ExplicitParams& p,
                             const VerifyOptions& opts) {
    feasible(p.ell.has_value(), "c37 needs the subgroup order ell");
    const int ell = static_cast<int>(*p.ell);
    const int q = static_cast<int>(F.q());
    const int pp = static_cast<int>(F.p());
    feasible(ell >= 1 && (q - 1) % ell == 0, "c37 needs ell | (q-1)");
    const int d = (q - 1) / ell;
    feasible(pp < d, "c37 needs p < (q-1)/ell (got p = " + std::to_string(pp) +
                         ", (q-1)/ell = " + std::to_string(d) + ")");
    const int n = pp * ell;

    require_some_k_or_m(p);
    ResolvedInstance inst;
    const bool even_ell = (ell % 2 == 0);
    if (p.k.has_value()) {
        const int k = static_cast<int>(*p.k);
        if (even_ell) {
            if (k % 2 == 1) {
                inst.family = 1;  // odd-dimension companion family
                feasible((2 * ell - 1 - k) % 2 == 0 && k <= 2 * ell - 1 && k >= 1,
                         "c37 (even ell) reaches odd k = 2*ell-1-2m for 0 <= m <= ell-1");
                inst.m = (2 * ell - 1 - k) / 2;
            } else {
                inst.m = ell - k / 2;
            }
        } else {
            feasible(k % 2 == 0, "c37 with odd ell only reaches even k = 2*ell-2m");
            inst.m = ell - k / 2;
        }
        const int upper = even_ell ? ell - 1 : ell;
        feasible(inst.m >= 0 && inst.m <= upper,
                 "c37 m out of range: need 0 <= m <= " + std::to_string(upper));
        if (p.m.has_value()) feasible(*p.m == inst.m, "inconsistent k and m for c37");
    } else {
        inst.m = static_cast<int>(*p.m);
        const int upper = even_ell ? ell - 1 : ell;
        feasible(inst.m >= 0 && inst.m <= upper,
                 "c37 m out of range: need 0 <= m <= " + std::to_string(upper));
        inst.family = 0;  // default to the even-dimension family
    }

    // beta_i = gamma^i, i = 1..p; f = prod (x - beta_i^ell); g = f(x^ell).
    FieldElement gamma = F.generator();
    std::vector<FieldElement> labels;
    FieldElement acc = F.one();
    FieldElement label_sum = F.zero();
    Polynomial f = Polynomial::constant(F.one());
    for (int i = 1; i <= pp; ++i) {
        acc = acc * gamma;
        FieldElement label = acc.pow(static_cast<std::uint64_t>(ell));
        labels.push_back(label);
        label_sum = label_sum + label;
        f = f * Polynomial::x_minus(label);
    }
    engine_check(!label_sum.is_zero(), "sum of the coset labels must be nonzero");
    Polynomial f_prime = derivative(f);
    engine_check(!f_prime.eval(F.zero()).is_zero(), "df/dx must not vanish at 0");

    std::vector<std::uint32_t> g_coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        g_coeffs[i * static_cast<std::size_t>(ell)] = f.coeff_enc(i);
    }
    Polynomial g(F, std::move(g_coeffs));  // g(x) = f(x^ell)
    EvaluationSet e(F, simple_roots(g));

    engine_check(e.z().degree() == ell * (pp - 1) - 1, "deg(z) = ell*(p-1) - 1 failed");
    Place p0 = Place::rational(F.zero());
    engine_check(valuation(RationalFunction::from_poly(e.z()), p0) == ell - 1,
                 "ord_0(z) = ell - 1 failed");

    Divisor z_div = e.zero_divisor_of_z();
    Divisor e_div = z_div - Divisor::single(p0, ell - 1);
    engine_check(e_div.is_effective() && e_div.coeff(p0) == 0 &&
                     e_div.degree() == ell * (pp - 2),
                 "Z = (ell-1) P_0 + E with deg(E) = ell*(p-2) failed");

    Divisor x_part(F), y1(F), y2(F);
    if (even_ell) {
        x_part = Divisor::single(p0, (ell - 2) / 2);
        if (inst.family == 1) {
            y1 = e_div + Divisor::single(p0, 1);
        } else {
            y1 = e_div;
            y2 = Divisor::single(p0, 1);
        }
    } else {
        x_part = Divisor::single(p0, (ell - 1) / 2);
        y1 = e_div;
    }

    ConstructionResult result = run_square_split(e, x_part, y1, y2, inst.m, opts);
    annotate_common(result, ConstructionKind::c37, F);
    result.params["ell"] = ell;
    result.params["m"] = inst.m;
    result.params["family"] = inst.family;
    if (inst.family == 1) {
        result.notes.push_back("odd-dimension companion family (Y1 absorbs P_0)");
    }
    return result;
}

// ---- c38: x^n - x with n - 1 an odd divisor of q - 1, q a square -------

ConstructionResult build_c38(const FieldCtx& F, const ExplicitParams& p,
                             const VerifyOptions& opts) {
    const int q = static_cast<int>(F.q());
    feasible(F.r() % 2 == 0 && F.p() != 2 && q >= 5, "c38 needs q >= 5 to be an odd square");
    feasible(p.n.has_value(), "c38 needs the length n");
    const int n = static_cast<int>(*p.n);
    feasible(n >= 2 && n < q, "c38 needs 2 <= n < q");
    feasible((n - 1) % 2 == 1, "c38 needs n - 1 odd");
    feasible((q - 1) % (n - 1) == 0, "c38 needs n - 1 to be an odd divisor of q - 1 (n-1 = " +
                                         std::to_string(n - 1) + ", q-1 = " +
                                         std::to_string(q - 1) + ")");

    require_some_k_or_m(p);
    int m;
    if (p.m.has_value()) {
        m = static_cast<int>(*p.m);
        check_k_consistent(p, n - 2 * m);
    } else {
        const int k = static_cast<int>(*p.k);
        feasible((n - k) % 2 == 0, "c38 reaches only k = n - 2m");
        m = (n - k) / 2;
    }
    feasible(m >= 0 && 2 * m <= n, "c38 needs 0 <= m <= n/2");

    Polynomial g = Polynomial::x(F).pow(n) - Polynomial::x(F);
    EvaluationSet e(F, simple_roots(g));

    // z = n x^(n-1) - 1 takes only the values n-1 and -1 on the roots; both
    // are squares because q is a square.
    FieldElement n_minus_1 = F.from_int(n - 1);
    FieldElement minus_1 = -F.one();
    engine_check(n_minus_1.is_square() && minus_1.is_square(),
                 "n-1 and -1 must be squares in a square field");
    for (const FieldElement& alpha : e.alphas()) {
        FieldElement zv = e.z().eval(alpha);
        engine_check(zv == n_minus_1 || zv == minus_1, "z(alpha) must be n-1 or -1");
    }

    auto nonroots = smallest_outside(F, encoding_set(e.alphas()), 2);
    const FieldElement beta = nonroots[0], gamma = nonroots[1];
    Polynomial a_poly = Polynomial::x_minus(beta).pow(2 * m);
    Polynomial b_poly = Polynomial::x_minus(gamma).pow(n - 2 * m);

    ConstructionResult result = build_lcd_mds(e, pinf(F, n - 1), finite_zero_divisor(a_poly),
                                            finite_zero_divisor(b_poly), opts);
    annotate_common(result, ConstructionKind::c38, F);
    result.params["m"] = m;
    if (result.code.k() == 0) result.notes.push_back("zero code (degenerate boundary case)");
    return result;
}

// ---- c39: x^n - 1 with n | (q-1)/2 --------------------------------------

ConstructionResult build_c39(const FieldCtx& F, const ExplicitParams& p,
                             const VerifyOptions& opts) {
    const int q = static_cast<int>(F.q());
    feasible(F.p() != 2, "c39 needs odd q");
    feasible(p.n.has_value(), "c39 needs the length n");
    const int n = static_cast<int>(*p.n);
    feasible(n >= 2, "c39 needs n >= 2");
    feasible(((q - 1) / 2) % n == 0,
             "c39 needs n | (q-1)/2 (n = " + std::to_string(n) + ", (q-1)/2 = " +
                 std::to_string((q - 1) / 2) + ")");

    require_some_k_or_m(p);
    const bool even_n = (n % 2 == 0);
    int m;
    if (p.m.has_value()) {
        m = static_cast<int>(*p.m);
        check_k_consistent(p, even_n ? n - 2 * m : n - 2 * m - 1);
    } else {
        const int k = static_cast<int>(*p.k);
        const int diff = even_n ? n - k : n - 1 - k;
        feasible(diff >= 0 && diff % 2 == 0,
                 even_n ? "c39 with even n reaches only k = n - 2m"
                        : "c39 with odd n reaches only k = n - 2m - 1");
        m = diff / 2;
    }
    feasible(m >= 1 && 2 * m <= n, "c39 needs 1 <= m <= n/2");

    Polynomial g = Polynomial::x(F).pow(n) - Polynomial::constant(F.one());
    EvaluationSet e(F, simple_roots(g));
    engine_check(e.z() == Polynomial::x(F).pow(n - 1) * F.from_int(n), "z = n x^(n-1) failed");
    for (const FieldElement& alpha : e.alphas()) {
        engine_check(alpha.is_square(), "every root of x^n - 1 must be a square when n | (q-1)/2");
    }

    auto nonroots = smallest_outside(F, encoding_set(e.alphas()), 2);
    const FieldElement beta = nonroots[0], gamma = nonroots[1];
    Polynomial a_poly(F), b_poly(F);
    if (even_n) {
        a_poly = Polynomial::x_minus(beta).pow(2 * m) * F.from_int(n);
        b_poly = Polynomial::x_minus(gamma).pow(n - 2 * m);
    } else {
        a_poly = Polynomial::x(F) * Polynomial::x_minus(beta).pow(2 * m) * F.from_int(n);
        b_poly = Polynomial::x_minus(gamma).pow(n - 1 - 2 * m);
    }
    for (const FieldElement& alpha : e.alphas()) {
        FieldElement v = a_poly.eval(alpha) * b_poly.eval(alpha) * e.z().eval(alpha);
        engine_check(!v.is_zero() && v.is_square(), "(a b z)(alpha) must be a nonzero square");
    }

    ConstructionResult result = build_lcd_mds(e, pinf(F, n - 1), finite_zero_divisor(a_poly),
                                            finite_zero_divisor(b_poly), opts);
    annotate_common(result, ConstructionKind::c39, F);
    result.params["m"] = m;
    if (result.code.k() == 0) result.notes.push_back("zero code (degenerate boundary case)");
    return result;
}

// ---- c310: ((x+1)^{N_r} - 1)/x ------------------------------------------

ConstructionResult build_c310(const FieldCtx& F, const ExplicitParams& p,
                              const VerifyOptions& opts) {
    feasible(F.r() > 1 && F.p() != 2, "c310 needs odd p and r > 1");
    const int pp = static_cast<int>(F.p());
    const int n_r = (static_cast<int>(F.q()) - 1) / (pp - 1);
    int pr1 = 1;
    for (std::uint32_t i = 0; i + 1 < F.r(); ++i) pr1 *= pp;  // p^(r-1)
    const int n_r1 = (pr1 - 1) / (pp - 1);
    const int n = pp * n_r1;
    engine_check(n == n_r - 1, "N_r - 1 = p N_{r-1} failed");

    require_some_k_or_m(p);
    ResolvedInstance inst;
    const int m_max = (pr1 - 1) / 2;
    auto try_resolve = [&](int k, ResolvedInstance& out) {
        const int diff = n - k;
        if (diff < 0 || k < 0) return false;
        out.family = diff % 2;  // 0: Y1 = 0, 1: Y1 = P_0
        const int mm = (diff - out.family) / 2;
        if (mm < 0 || mm > m_max) return false;
        out.m = mm;
        return true;
    };
    if (p.m.has_value()) {
        inst.m = static_cast<int>(*p.m);
        feasible(inst.m >= 0 && inst.m <= m_max,
                 "c310 needs 0 <= m <= (p^(r-1) - 1)/2 = " + std::to_string(m_max));
        if (p.k.has_value()) {
            const int k = static_cast<int>(*p.k);
            feasible(k == n - 2 * inst.m || k == n - 2 * inst.m - 1,
                     "inconsistent k and m for c310");
            inst.family = (n - k) % 2;
        }
    } else {
        const int k = static_cast<int>(*p.k);
        feasible(k >= 0 && k <= n, "c310 needs 0 <= k <= n");
        if (!try_resolve(k, inst)) {
            ResolvedInstance primal;
            feasible(try_resolve(n - k, primal), "c310 cannot reach this k");
            inst = primal;
            inst.dual = true;
        }
    }

    // g = ((x+1)^{N_r} - 1)/x, z = -x^(p-2) * (((x+1)^{N_{r-1}} - 1)/x)^p.
    Polynomial xp1 = Polynomial::x(F) + Polynomial::constant(F.one());
    auto shifted_cyclotomic = [&](int exponent) {
        Polynomial numer = xp1.pow(exponent) - Polynomial::constant(F.one());
        auto [quot, rem] = numer.divmod(Polynomial::x(F));
        engine_check(rem.is_zero(), "(x+1)^N - 1 must be divisible by x");
        return quot;
    };
    Polynomial g = shifted_cyclotomic(n_r);
    Polynomial inner = shifted_cyclotomic(n_r1);
    EvaluationSet e(F, simple_roots(g));

    Polynomial z_closed = -(Polynomial::x(F).pow(pp - 2) * inner.pow(pp));
    engine_check(e.z() == z_closed, "closed form of z failed as a polynomial identity");
    engine_check(e.z().degree() == n - 2, "deg(z) = n - 2 failed");

    Place p0 = Place::rational(F.zero());
    Divisor q_div = finite_zero_divisor(inner);
    engine_check(q_div.coeff(p0) == 0 && q_div.is_effective(), "inner zeros must avoid P_0");
    engine_check(e.zero_divisor_of_z() == q_div * pp + Divisor::single(p0, pp - 2),
                 "Z = (p-2) P_0 + p * sum(Q_i) failed");

    Divisor y_full = q_div + Divisor::single(p0, 1);
    engine_check(y_full.degree() == n_r1, "deg(Y) = N_{r-1} failed");
    Divisor x_part = q_div * ((pp - 1) / 2) + Divisor::single(p0, (pp - 3) / 2);

    Divisor y1(F), y2(F);
    if (inst.family == 1) {
        y1 = Divisor::single(p0, 1);
        y2 = q_div;
    } else {
        y2 = y_full;
    }

    ConstructionResult primal = run_square_split(e, x_part, y1, y2, inst.m, opts);
    ConstructionResult result = inst.dual ? apply_dual(primal, opts) : std::move(primal);
    annotate_common(result, ConstructionKind::c310, F);
    result.params["m"] = inst.m;
    result.params["family"] = inst.family;
    result.params["dual"] = inst.dual ? 1 : 0;
    return result;
}

// ---- c311: f(g_V(x)) over d cosets of a subspace ------------------------

ConstructionResult build_c311(const FieldCtx& F, const ExplicitParams& p,
                              const VerifyOptions& opts) {
    feasible(p.t.has_value() && p.d.has_value(), "c311 needs t and d");
    const int t = static_cast<int>(*p.t);
    const int d = static_cast<int>(*p.d);
    feasible(t >= 1 && t < static_cast<int>(F.r()), "c311 needs 1 <= t < r");
    int pt = 1;
    for (int i = 0; i < t; ++i) pt *= static_cast<int>(F.p());
    int cosets = static_cast<int>(F.q()) / pt;
    feasible(d >= 1 && d <= cosets, "c311 needs 1 <= d <= p^(r-t)");
    feasible(d % static_cast<int>(F.p()) != 0, "c311 needs gcd(d, p) = 1");
    const int n = d * pt;

    require_some_k_or_m(p);
    int m;
    if (p.m.has_value()) {
        m = static_cast<int>(*p.m);
        check_k_consistent(p, n - 2 * m);
    } else {
        const int k = static_cast<int>(*p.k);
        feasible((n - k) % 2 == 0, "c311 reaches only k = n - 2m");
        m = (n - k) / 2;
    }
    feasible(m >= 2 && 2 * m <= pt,
             "c311 needs 2 <= m <= p^t/2 = " + std::to_string(pt / 2));

    // Canonical subspace V (encodings below p^t) and the d smallest coset
    // representatives, distinguished by their g_V-values.
    Polynomial g_v = Polynomial::constant(F.one());
    FieldElement c_v = F.one();
    for (int enc = 0; enc < pt; ++enc) {
        FieldElement v = F.element(static_cast<std::uint32_t>(enc));
        g_v = g_v * Polynomial::x_minus(v);
        if (enc != 0) c_v = c_v * v;
    }
    std::vector<FieldElement> reps;
    std::set<std::uint32_t> seen_values;
    for (std::uint32_t enc = 0; enc < F.q() && static_cast<int>(reps.size()) < d; ++enc) {
        FieldElement candidate = F.element(enc);
        if (seen_values.insert(g_v.eval(candidate).enc()).second) {
            reps.push_back(candidate);
        }
    }
    engine_check(static_cast<int>(reps.size()) == d, "could not find d distinct cosets");

    Polynomial f = Polynomial::constant(F.one());
    for (const FieldElement& rep : reps) f = f * Polynomial::x_minus(g_v.eval(rep));

    std::vector<FieldElement> alphas;
    alphas.reserve(static_cast<std::size_t>(n));
    for (const FieldElement& rep : reps) {
        for (int enc = 0; enc < pt; ++enc) {
            alphas.push_back(rep + F.element(static_cast<std::uint32_t>(enc)));
        }
    }
    std::sort(alphas.begin(), alphas.end());
    EvaluationSet e(F, std::move(alphas));

    // Chain rule: z = df/dx (g_V(x)) * g_V' and g_V' is the constant c_V.
    Polynomial f_prime = derivative(f);
    Polynomial z_expected(F);
    {
        Polynomial acc = Polynomial::constant(F.one());
        Polynomial sum(F);
        for (std::size_t i = 0; i < f_prime.size(); ++i) {
            sum = sum + acc * f_prime.coeff(i);
            acc = acc * g_v;
        }
        z_expected = sum * c_v;
    }
    engine_check(e.z() == z_expected, "z = f'(g_V(x)) * c_V failed as a polynomial identity");
    engine_check(e.z().degree() == (d - 1) * pt, "deg(z) = (d-1) p^t failed");

    Divisor zero(F);
    ConstructionResult result = run_square_split(e, zero, zero, e.zero_divisor_of_z(), m, opts);
    annotate_common(result, ConstructionKind::c311, F);
    result.params["t"] = t;
    result.params["d"] = d;
    result.params["m"] = m;
    return result;
}

} // namespace

ConstructionResult explicit_construction(const FieldCtx& ctx, ConstructionKind kind,
                                         const ExplicitParams& params, const VerifyOptions& opts) {
    feasible(ctx.has_odd_characteristic(), "the explicit catalog covers odd characteristic only");
    switch (kind) {
        case ConstructionKind::c36i: return build_c36i(ctx, params, opts);
        case ConstructionKind::c36ii: return build_c36ii(ctx, params, opts);
        case ConstructionKind::c37: return build_c37(ctx, params, opts);
        case ConstructionKind::c38: return build_c38(ctx, params, opts);
        case ConstructionKind::c39: return build_c39(ctx, params, opts);
        case ConstructionKind::c310: return build_c310(ctx, params, opts);
        case ConstructionKind::c311: return build_c311(ctx, params, opts);
    }
    throw std::invalid_argument("unknown construction kind");
}

std::vector<FeasibleEntry> enumerate_feasible(const FieldCtx& ctx) {
    require_arg(ctx.has_odd_characteristic(), "feasibility catalog needs odd characteristic");
    const int p = static_cast<int>(ctx.p());
    const int r = static_cast<int>(ctx.r());
    const int q = static_cast<int>(ctx.q());

    std::map<std::pair<int, int>, FeasibleEntry> table;
    auto add = [&table](int n, int k, ConstructionKind kind, ExplicitParams params,
                        std::vector<std::string> notes = {}) {
        if (k == 0) notes.push_back("zero code (degenerate boundary case)");
        if (k == n) notes.push_back("full ambient space");
        FeasibleEntry entry{n, k, kind, std::move(params), std::move(notes)};
        table.emplace(std::make_pair(n, k), std::move(entry));
    };

    // c36i: n = p^t for 1 <= t < r, every dimension via dual closure.
    {
        int n = 1;
        for (int t = 1; t < r; ++t) {
            n *= p;
            for (int k = 0; k <= n; ++k) {
                ExplicitParams e;
                e.t = t;
                e.k = k;
                add(n, k, ConstructionKind::c36i, e);
            }
        }
    }

    // c36ii: p | n and (n-1) | (q-1). For odd n < q every dimension is
    // reachable; for even n only the even ones; at n = q the two dimensions
    // next to the boundary drop out.
    for (int n = p; n <= q; n += p) {
        if ((q - 1) % (n - 1) != 0) continue;
        std::vector<std::string> base_notes;
        if (n == q) base_notes.push_back("n equals the field size");
        for (int k = 0; k <= n; ++k) {
            const int diff = n - k;
            bool ok;
            if (diff % 2 == 0) {
                const int m = diff / 2;
                ok = (m != 1 || n < q);
            } else if (n % 2 == 1) {
                const int m = k / 2;  // dual route
                ok = (k % 2 == 0) && (m != 1 || n < q);
            } else {
                ok = false;
            }
            if (!ok) continue;
            ExplicitParams e;
            e.n = n;
            e.k = k;
            add(n, k, ConstructionKind::c36ii, e, base_notes);
        }
    }

    // c37: n = p*ell for ell | (q-1) with p < (q-1)/ell.
    for (int ell = 1; ell <= q - 1; ++ell) {
        if ((q - 1) % ell != 0 || p >= (q - 1) / ell) continue;
        const int n = p * ell;
        const int upper = (ell % 2 == 0) ? ell - 1 : ell;
        for (int m = 0; m <= upper; ++m) {
            ExplicitParams e;
            e.ell = ell;
            e.k = 2 * ell - 2 * m;
            add(n, 2 * ell - 2 * m, ConstructionKind::c37, e);
            if (ell % 2 == 0) {
                ExplicitParams e2;
                e2.ell = ell;
                e2.k = 2 * ell - 1 - 2 * m;
                add(n, 2 * ell - 1 - 2 * m, ConstructionKind::c37, e2,
                    {"odd-dimension companion family"});
            }
        }
    }

    // c38: q an odd square, n - 1 an odd divisor of q - 1, n < q.
    if (r % 2 == 0) {
        for (int n = 2; n < q; ++n) {
            if ((n - 1) % 2 == 0 || (q - 1) % (n - 1) != 0) continue;
            for (int m = 0; 2 * m <= n; ++m) {
                ExplicitParams e;
                e.n = n;
                e.k = n - 2 * m;
                add(n, n - 2 * m, ConstructionKind::c38, e);
            }
        }
    }

    // c39: n | (q-1)/2.
    for (int n = 2; n <= (q - 1) / 2; ++n) {
        if (((q - 1) / 2) % n != 0) continue;
        for (int m = 1; 2 * m <= n; ++m) {
            const int k = (n % 2 == 0) ? n - 2 * m : n - 2 * m - 1;
            ExplicitParams e;
            e.n = n;
            e.k = k;
            add(n, k, ConstructionKind::c39, e);
        }
    }

    // c310: n = p * N_{r-1}, every dimension via dual closure.
    if (r > 1) {
        int pr1 = 1;
        for (int i = 0; i + 1 < r; ++i) pr1 *= p;
        const int n = p * (pr1 - 1) / (p - 1);
        for (int k = 0; k <= n; ++k) {
            ExplicitParams e;
            e.k = k;
            add(n, k, ConstructionKind::c310, e);
        }
    }

    // c311: n = d * p^t with gcd(d, p) = 1 and 2 <= m <= p^t/2.
    {
        int pt = 1;
        for (int t = 1; t < r; ++t) {
            pt *= p;
            if (pt / 2 < 2) continue;
            const int cosets = q / pt;
            for (int d = 1; d <= cosets; ++d) {
                if (d % p == 0) continue;
                const int n = d * pt;
                for (int m = 2; 2 * m <= pt; ++m) {
                    ExplicitParams e;
                    e.t = t;
                    e.d = d;
                    e.k = n - 2 * m;
                    add(n, n - 2 * m, ConstructionKind::c311, e);
                }
            }
        }
    }

    std::vector<FeasibleEntry> out;
    out.reserve(table.size());
    for (auto& [key, entry] : table) out.push_back(std::move(entry));
    return out;
}

} // namespace lcdmds
