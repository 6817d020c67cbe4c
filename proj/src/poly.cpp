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

#include "lcdmds/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace lcdmds {

namespace {

// Fixed seed for the equal-degree splitting steps; factorization output is
// canonical (sorted) regardless, this just makes runs bit-reproducible.
constexpr std::uint64_t kFactorSeed = 0x1cd5eedULL;

} // namespace

Polynomial::Polynomial(const FieldCtx& ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
    for (std::uint32_t v : c_) {
        require_arg(v < ctx.q(), "polynomial coefficient encoding out of range");
    }
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.ctx(), {c.enc()});
}

Polynomial Polynomial::x(const FieldCtx& ctx) { return Polynomial(ctx, {0, 1}); }

Polynomial Polynomial::x_minus(const FieldElement& alpha) {
    return Polynomial(alpha.ctx(), {alpha.ctx().neg(alpha.enc()), 1});
}

Polynomial Polynomial::from_elements(const FieldCtx& ctx, const std::vector<FieldElement>& coeffs) {
    std::vector<std::uint32_t> enc;
    enc.reserve(coeffs.size());
    for (const FieldElement& e : coeffs) {
        require_arg(&e.ctx() == &ctx, "coefficient from a different field");
        enc.push_back(e.enc());
    }
    return Polynomial(ctx, std::move(enc));
}

int Polynomial::degree() const {
    require_arg(!c_.empty(), "degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

FieldElement Polynomial::leading() const {
    require_arg(!c_.empty(), "leading coefficient of the zero polynomial");
    return FieldElement(*ctx_, c_.back());
}

Polynomial Polynomial::monic() const {
    require_arg(!c_.empty(), "cannot normalize the zero polynomial");
    if (c_.back() == 1) return *this;
    std::uint32_t inv = ctx_->inv(c_.back());
    std::vector<std::uint32_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ctx_->mul(c_[i], inv);
    return Polynomial(*ctx_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_arg(ctx_ == o.ctx_, "polynomials over different fields");
    std::vector<std::uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = ctx_->add(coeff_enc(i), o.coeff_enc(i));
    }
    return Polynomial(*ctx_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<std::uint32_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ctx_->neg(c_[i]);
    return Polynomial(*ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_arg(ctx_ == o.ctx_, "polynomials over different fields");
    if (is_zero() || o.is_zero()) return Polynomial(*ctx_);
    std::vector<std::uint32_t> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] = ctx_->add(out[i + j], ctx_->mul(c_[i], o.c_[j]));
        }
    }
    return Polynomial(*ctx_, std::move(out));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    require_arg(&s.ctx() == ctx_, "scalar from a different field");
    std::vector<std::uint32_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ctx_->mul(c_[i], s.enc());
    return Polynomial(*ctx_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    require_arg(ctx_ == d.ctx_, "polynomials over different fields");
    require_arg(!d.is_zero(), "polynomial division by zero");
    if (c_.size() < d.c_.size()) return {Polynomial(*ctx_), *this};
    std::vector<std::uint32_t> rem = c_;
    std::vector<std::uint32_t> quot(c_.size() - d.c_.size() + 1, 0);
    const std::uint32_t lead_inv = ctx_->inv(d.c_.back());
    for (std::size_t i = rem.size(); i-- >= d.c_.size();) {
        std::uint32_t f = ctx_->mul(rem[i], lead_inv);
        if (f != 0) {
            quot[i - d.c_.size() + 1] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) {
                std::size_t k = i - d.c_.size() + 1 + j;
                rem[k] = ctx_->sub(rem[k], ctx_->mul(f, d.c_[j]));
            }
        }
        if (i == 0) break;
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(*ctx_, std::move(quot)), Polynomial(*ctx_, std::move(rem))};
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = Polynomial::constant(ctx_->one());
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    require_arg(&at.ctx() == ctx_, "evaluation point from a different field");
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = ctx_->add(ctx_->mul(acc, at.enc()), c_[i]);
        if (i == 0) break;
    }
    return FieldElement(*ctx_, acc);
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    require_arg(a.ctx_ == b.ctx_, "polynomials over different fields");
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
        if (i == 0) break;
    }
    return 0;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) {
            if (i == 0) break;
            continue;
        }
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i >= 1) {
            if (c_[i] != 1) out += "*";
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        if (i == 0) break;
    }
    return out;
}

Polynomial derivative(const Polynomial& f) {
    const FieldCtx& F = f.ctx();
    if (f.size() <= 1) return Polynomial(F);
    std::vector<std::uint32_t> out(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) {
        std::uint32_t scalar = static_cast<std::uint32_t>(i % F.p());
        out[i - 1] = F.mul(f.coeff_enc(i), scalar);  // i mod p lives in the prime subfield
    }
    return Polynomial(F, std::move(out));
}

Polynomial gcd(Polynomial a, Polynomial b) {
    require_arg(&a.ctx() == &b.ctx(), "polynomials over different fields");
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
    return (a * b) % m;
}

Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
    Polynomial result = Polynomial::constant(a.ctx().one()) % m;
    Polynomial base = a % m;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

Polynomial interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    require_arg(!points.empty(), "interpolation requires at least one point");
    const FieldCtx& F = points.front().first.ctx();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            require_arg(points[i].first != points[j].first, "repeated interpolation abscissa");
        }
    }
    // Lagrange: full node product, then peel one factor per point.
    Polynomial master = Polynomial::constant(F.one());
    for (const auto& pt : points) master = master * Polynomial::x_minus(pt.first);
    Polynomial acc(F);
    for (const auto& [xi, yi] : points) {
        Polynomial basis = master / Polynomial::x_minus(xi);
        FieldElement denom = basis.eval(xi);
        acc = acc + basis * (yi / denom);
    }
    return acc;
}

namespace {

// x^(q^j) mod f for j = 1..count, by iterated Frobenius powering.
std::vector<Polynomial> frobenius_ladder(const Polynomial& f, std::uint32_t count) {
    const FieldCtx& F = f.ctx();
    std::vector<Polynomial> ladder;
    ladder.reserve(count);
    Polynomial cur = Polynomial::x(F) % f;
    for (std::uint32_t j = 0; j < count; ++j) {
        cur = powmod(cur, F.q(), f);
        ladder.push_back(cur);
    }
    return ladder;
}

std::vector<std::uint32_t> distinct_primes_of(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Coefficient-wise p-th root: f must be of the form h(x^p).
Polynomial pth_root(const Polynomial& f) {
    const FieldCtx& F = f.ctx();
    const std::uint32_t p = F.p();
    std::vector<std::uint32_t> out;
    out.reserve(f.size() / p + 1);
    for (std::size_t i = 0; i < f.size(); i += p) {
        // a^(1/p) = a^(q/p) since a^q = a
        out.push_back(F.pow(f.coeff_enc(i), F.q() / p));
    }
    return Polynomial(F, std::move(out));
}

void squarefree_decompose(const Polynomial& f, int outer_mult,
                          std::map<Polynomial, int>& sink);

// Classic char-p squarefree decomposition of a monic polynomial.
void squarefree_core(Polynomial f, int outer_mult, std::map<Polynomial, int>& sink) {
    const FieldCtx& F = f.ctx();
    Polynomial fp = derivative(f);
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(F.p()), sink);
        return;
    }
    Polynomial c = gcd(f, fp);
    Polynomial w = f / c;
    int i = 1;
    while (!w.is_constant()) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (!z.is_constant()) {
            sink[z.monic()] += outer_mult * i;
        }
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_constant()) {
        squarefree_decompose(pth_root(c), outer_mult * static_cast<int>(F.p()), sink);
    }
}

void squarefree_decompose(const Polynomial& f, int outer_mult, std::map<Polynomial, int>& sink) {
    if (f.is_constant()) return;
    squarefree_core(f.monic(), outer_mult, sink);
}

// Cantor-Zassenhaus equal-degree splitting: u is monic, squarefree, and a
// product of irreducibles all of degree d.
void split_equal_degree(const Polynomial& u, std::uint32_t d, std::mt19937_64& rng,
                        std::vector<Polynomial>& out) {
    const FieldCtx& F = u.ctx();
    if (static_cast<std::uint32_t>(u.degree()) == d) {
        out.push_back(u);
        return;
    }
    std::uniform_int_distribution<std::uint32_t> coeff(0, F.q() - 1);
    for (;;) {
        std::vector<std::uint32_t> hc(static_cast<std::size_t>(u.degree()), 0);
        for (auto& c : hc) c = coeff(rng);
        Polynomial h(F, std::move(hc));
        if (h.is_zero()) continue;
        Polynomial g(F);
        if (F.p() != 2) {
            // h^((q^d - 1)/2) = (h^(1 + q + ... + q^(d-1)))^((q-1)/2)
            Polynomial norm = h % u;
            Polynomial cur = norm;
            for (std::uint32_t j = 1; j < d; ++j) {
                cur = powmod(cur, F.q(), u);
                norm = mulmod(norm, cur, u);
            }
            Polynomial s = powmod(norm, (F.q() - 1) / 2, u);
            g = gcd(s - Polynomial::constant(F.one()), u);
        } else {
            // Trace map sum h^(2^j) over j < d * r.
            std::uint32_t steps = d * F.r();
            Polynomial cur = h % u;
            Polynomial tr = cur;
            for (std::uint32_t j = 1; j < steps; ++j) {
                cur = mulmod(cur, cur, u);
                tr = (tr + cur) % u;
            }
            g = gcd(tr, u);
        }
        if (!g.is_constant() && g.degree() < u.degree()) {
            split_equal_degree(g, d, rng, out);
            split_equal_degree(u / g, d, rng, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(const Polynomial& f) {
    require_arg(!f.is_zero(), "irreducibility of the zero polynomial");
    if (f.degree() == 0) return false;
    const FieldCtx& F = f.ctx();
    const std::uint32_t m = static_cast<std::uint32_t>(f.degree());
    if (m == 1) return true;
    Polynomial g = f.monic();
    std::vector<Polynomial> ladder = frobenius_ladder(g, m);
    Polynomial x = Polynomial::x(F) % g;
    if (ladder[m - 1] != x) return false;
    for (std::uint32_t ell : distinct_primes_of(m)) {
        Polynomial probe = ladder[m / ell - 1] - x;
        if (!gcd(probe, g).is_constant()) return false;
    }
    return true;
}

std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f) {
    require_arg(!f.is_zero(), "factorization of the zero polynomial");
    const FieldCtx& F = f.ctx();
    std::vector<std::pair<Polynomial, int>> result;
    if (f.degree() == 0) return result;

    std::map<Polynomial, int> squarefree;
    squarefree_decompose(f, 1, squarefree);

    std::mt19937_64 rng(kFactorSeed);
    std::map<Polynomial, int> factors;
    for (const auto& [part, mult] : squarefree) {
        // Distinct-degree split of the squarefree part.
        Polynomial rest = part;
        Polynomial frob = Polynomial::x(F) % rest;
        std::uint32_t d = 0;
        std::vector<std::pair<Polynomial, std::uint32_t>> buckets;
        while (!rest.is_constant() && 2 * (d + 1) <= static_cast<std::uint32_t>(rest.degree())) {
            ++d;
            frob = powmod(frob, F.q(), rest);
            Polynomial g = gcd(frob - Polynomial::x(F), rest);
            if (!g.is_constant()) {
                buckets.emplace_back(g, d);
                rest = rest / g;
                frob = frob % rest;
            }
        }
        if (!rest.is_constant()) {
            buckets.emplace_back(rest, static_cast<std::uint32_t>(rest.degree()));
        }
        for (const auto& [bucket, deg] : buckets) {
            std::vector<Polynomial> irreducibles;
            split_equal_degree(bucket, deg, rng, irreducibles);
            for (const Polynomial& g : irreducibles) factors[g] += mult;
        }
    }
    result.assign(factors.begin(), factors.end());
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return Polynomial::cmp(a.first, b.first) < 0;
    });
    return result;
}

std::vector<std::pair<FieldElement, int>> roots_in_field(const Polynomial& f) {
    require_arg(!f.is_zero(), "roots of the zero polynomial");
    std::vector<std::pair<FieldElement, int>> out;
    for (const auto& [g, mult] : factor(f)) {
        if (g.degree() == 1) {
            out.emplace_back(-g.coeff(0), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.enc() < b.first.enc(); });
    return out;
}

Polynomial irreducible_of_degree(const FieldCtx& ctx, std::uint32_t m,
                                 const std::vector<Polynomial>& forbidden) {
    require_arg(m >= 1, "irreducible degree must be at least 1");
    std::set<Polynomial> skip(forbidden.begin(), forbidden.end());
    // Odometer over the non-leading coefficients, smallest encoding first.
    std::vector<std::uint32_t> digits(m, 0);
    for (;;) {
        std::vector<std::uint32_t> coeffs = digits;
        coeffs.push_back(1);
        Polynomial cand(ctx, std::move(coeffs));
        if ((m == 1 || is_irreducible(cand)) && skip.find(cand) == skip.end()) {
            return cand;
        }
        std::size_t pos = 0;
        while (pos < m && ++digits[pos] == ctx.q()) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == m) {
            throw InfeasibleError("all monic irreducibles of degree " + std::to_string(m) +
                                  " are forbidden");
        }
    }
}

} // namespace lcdmds
