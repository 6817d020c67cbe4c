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

#include "lcdmds/funcfield.hpp"

#include <algorithm>
#include <set>

namespace lcdmds {

Place::Place(const FieldCtx& ctx, bool infinity, Polynomial poly, int degree)
    : ctx_(&ctx), infinity_(infinity), poly_(std::move(poly)), degree_(degree) {}

Place Place::finite(const Polynomial& monic_irreducible) {
    require_arg(!monic_irreducible.is_zero() && monic_irreducible.degree() >= 1,
                "a finite place needs a polynomial of degree at least 1");
    require_arg(monic_irreducible.is_monic(), "a finite place needs a monic polynomial");
    require_arg(is_irreducible(monic_irreducible), "a finite place needs an irreducible polynomial");
    return Place(monic_irreducible.ctx(), false, monic_irreducible, monic_irreducible.degree());
}

Place Place::at_infinity(const FieldCtx& ctx) {
    return Place(ctx, true, Polynomial(ctx), 1);
}

Place Place::rational(const FieldElement& alpha) {
    return Place(alpha.ctx(), false, Polynomial::x_minus(alpha), 1);
}

const Polynomial& Place::irreducible() const {
    require_arg(!infinity_, "the infinite place has no defining polynomial");
    return poly_;
}

FieldElement Place::alpha() const {
    require_arg(!infinity_ && degree_ == 1, "alpha() needs a finite degree-one place");
    return -poly_.coeff(0);
}

bool Place::operator==(const Place& o) const {
    return ctx_ == o.ctx_ && infinity_ == o.infinity_ && (infinity_ || poly_ == o.poly_);
}

bool Place::operator<(const Place& o) const {
    require_arg(ctx_ == o.ctx_, "places over different fields");
    if (infinity_ != o.infinity_) return !infinity_;  // finite places first
    if (infinity_) return false;
    return Polynomial::cmp(poly_, o.poly_) < 0;
}

std::string Place::to_string() const {
    return infinity_ ? "Pinf" : "(" + poly_.to_string() + ")";
}

Divisor Divisor::single(const Place& place, int coeff) {
    Divisor d(place.ctx());
    d.add_place(place, coeff);
    return d;
}

int Divisor::coeff(const Place& place) const {
    auto it = terms_.find(place);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::add_place(const Place& place, int coeff) {
    require_arg(&place.ctx() == ctx_, "place over a different field");
    if (coeff == 0) return;
    auto it = terms_.find(place);
    if (it == terms_.end()) {
        terms_.emplace(place, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int Divisor::degree() const {
    int deg = 0;
    for (const auto& [place, c] : terms_) deg += c * place.degree();
    return deg;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    out.reserve(terms_.size());
    for (const auto& [place, c] : terms_) out.push_back(place);
    return out;
}

Divisor Divisor::positive_part() const {
    Divisor out(*ctx_);
    for (const auto& [place, c] : terms_) {
        if (c > 0) out.add_place(place, c);
    }
    return out;
}

Divisor Divisor::negative_part() const {
    Divisor out(*ctx_);
    for (const auto& [place, c] : terms_) {
        if (c < 0) out.add_place(place, -c);
    }
    return out;
}

Divisor Divisor::operator+(const Divisor& o) const {
    require_arg(ctx_ == o.ctx_, "divisors over different fields");
    Divisor out = *this;
    for (const auto& [place, c] : o.terms_) out.add_place(place, c);
    return out;
}

Divisor Divisor::operator-() const {
    Divisor out(*ctx_);
    for (const auto& [place, c] : terms_) out.add_place(place, -c);
    return out;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator*(int scalar) const {
    Divisor out(*ctx_);
    if (scalar != 0) {
        for (const auto& [place, c] : terms_) out.add_place(place, c * scalar);
    }
    return out;
}

bool Divisor::operator==(const Divisor& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

bool Divisor::operator>=(const Divisor& o) const {
    return (*this - o).is_effective();
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [place, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += place.to_string();
    }
    return out;
}

bool supports_disjoint(const Divisor& a, const Divisor& b) {
    for (const auto& [place, c] : a.terms()) {
        if (b.coeff(place) != 0) return false;
    }
    return true;
}

std::pair<Divisor, Divisor> divisor_lattice(const Divisor& a, const Divisor& b) {
    require_arg(&a.ctx() == &b.ctx(), "divisors over different fields");
    Divisor meet(a.ctx()), join(a.ctx());
    std::set<Place> places;
    for (const auto& [place, c] : a.terms()) places.insert(place);
    for (const auto& [place, c] : b.terms()) places.insert(place);
    for (const Place& place : places) {
        int ca = a.coeff(place), cb = b.coeff(place);
        meet.add_place(place, std::min(ca, cb));
        join.add_place(place, std::max(ca, cb));
    }
    return {meet, join};
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_arg(&num_.ctx() == &den_.ctx(), "numerator and denominator over different fields");
    require_arg(!den_.is_zero(), "zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ctx().one());
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElement lead = den_.leading();
    if (!lead.is_one()) {
        FieldElement inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::from_poly(const Polynomial& p) {
    return RationalFunction(p, Polynomial::constant(p.ctx().one()));
}

RationalFunction RationalFunction::one(const FieldCtx& ctx) {
    return from_poly(Polynomial::constant(ctx.one()));
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    require_arg(!o.is_zero(), "division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const FieldElement& s) const {
    return RationalFunction(num_ * s, den_);
}

RationalFunction RationalFunction::inverse() const {
    require_arg(!is_zero(), "inverse of the zero function");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Divisor principal_divisor(const Polynomial& p) {
    require_arg(!p.is_zero(), "principal divisor of zero");
    Divisor out(p.ctx());
    for (const auto& [g, mult] : factor(p)) {
        out.add_place(Place::finite(g), mult);
    }
    out.add_place(Place::at_infinity(p.ctx()), -p.degree());
    return out;
}

Divisor principal_divisor(const RationalFunction& u) {
    require_arg(!u.is_zero(), "principal divisor of the zero function");
    Divisor out = principal_divisor(u.num()) - principal_divisor(u.den());
    internal_check(out.degree() == 0, "principal divisor must have degree zero");
    return out;
}

int valuation(const RationalFunction& u, const Place& place) {
    require_arg(!u.is_zero(), "valuation of the zero function");
    if (place.is_infinity()) {
        return u.den().degree() - u.num().degree();
    }
    auto order = [&place](const Polynomial& f) {
        int k = 0;
        Polynomial rest = f;
        for (;;) {
            auto [quot, rem] = rest.divmod(place.irreducible());
            if (!rem.is_zero()) return k;
            ++k;
            rest = quot;
        }
    };
    return order(u.num()) - order(u.den());
}

RationalFunction function_with_divisor(const Divisor& g) {
    require_arg(g.degree() == 0, "only degree-zero divisors are principal");
    const FieldCtx& F = g.ctx();
    Polynomial num = Polynomial::constant(F.one());
    Polynomial den = Polynomial::constant(F.one());
    for (const auto& [place, c] : g.terms()) {
        if (place.is_infinity()) continue;  // forced by the finite part
        if (c > 0) {
            num = num * place.irreducible().pow(c);
        } else {
            den = den * place.irreducible().pow(-c);
        }
    }
    RationalFunction y(num, den);
    internal_check(principal_divisor(y) == g, "constructed function has the wrong divisor");
    return y;
}

std::vector<RationalFunction> riemann_roch_basis(const Divisor& g) {
    const FieldCtx& F = g.ctx();
    const int deg = g.degree();
    std::vector<RationalFunction> basis;
    if (deg < 0) return basis;

    // u = forced_zeros * x^j / pole_bound, j = 0..deg(G). The positive finite
    // part of G bounds poles, the negative finite part forces zeros, and the
    // coefficient at infinity caps the numerator degree.
    Polynomial pole_bound = Polynomial::constant(F.one());
    Polynomial forced_zeros = Polynomial::constant(F.one());
    for (const auto& [place, c] : g.terms()) {
        if (place.is_infinity()) continue;
        if (c > 0) {
            pole_bound = pole_bound * place.irreducible().pow(c);
        } else {
            forced_zeros = forced_zeros * place.irreducible().pow(-c);
        }
    }
    const Polynomial x = Polynomial::x(F);
    Polynomial shift = Polynomial::constant(F.one());
    basis.reserve(static_cast<std::size_t>(deg) + 1);
    for (int j = 0; j <= deg; ++j) {
        RationalFunction u(forced_zeros * shift, pole_bound);
        internal_check(principal_divisor(u) + g >= Divisor(F),
                       "Riemann-Roch basis member violates the divisor constraint");
        basis.push_back(u);
        shift = shift * x;
    }
    return basis;
}

FieldElement evaluate(const RationalFunction& u, const Place& place) {
    require_arg(place.degree() == 1, "evaluation only at rational places");
    const FieldCtx& F = u.ctx();
    if (u.is_zero()) return F.zero();
    if (place.is_infinity()) {
        int dn = u.num().degree(), dd = u.den().degree();
        require_arg(dn <= dd, "pole at infinity");
        if (dn < dd) return F.zero();
        return u.num().leading() / u.den().leading();
    }
    FieldElement a = place.alpha();
    FieldElement dv = u.den().eval(a);
    require_arg(!dv.is_zero(), "pole at the evaluation place");
    return u.num().eval(a) / dv;
}

FieldElement residue(const RationalFunction& u, const Place& place) {
    require_arg(!place.is_infinity() && place.degree() == 1,
                "residues are taken at finite rational places");
    if (u.is_zero()) return u.ctx().zero();
    RationalFunction shifted = u * RationalFunction::from_poly(place.irreducible());
    require_arg(!shifted.den().eval(place.alpha()).is_zero(),
                "pole of order at least two; residue undefined here");
    return evaluate(shifted, place);
}

Divisor differential_divisor_of_omega_z(const FieldCtx& ctx,
                                        const std::vector<FieldElement>& alphas) {
    require_arg(!alphas.empty() && alphas.size() <= ctx.q(), "need 1 <= n <= q points");
    std::set<std::uint32_t> seen;
    Polynomial g = Polynomial::constant(ctx.one());
    Divisor d(ctx);
    for (const FieldElement& a : alphas) {
        require_arg(&a.ctx() == &ctx, "evaluation point from a different field");
        require_arg(seen.insert(a.enc()).second, "repeated evaluation point");
        g = g * Polynomial::x_minus(a);
        d.add_place(Place::rational(a), 1);
    }
    Polynomial z = derivative(g);
    internal_check(!z.is_zero(), "derivative of a separable polynomial cannot vanish");
    Divisor w = principal_divisor(z) - d + Divisor::single(Place::at_infinity(ctx),
                                                           static_cast<int>(alphas.size()) - 2);
    internal_check(w.degree() == -2, "canonical divisor must have degree -2");
    return w;
}

} // namespace lcdmds
