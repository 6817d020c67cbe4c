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

#ifndef LCDMDS_FUNCFIELD_HPP
#define LCDMDS_FUNCFIELD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcdmds/poly.hpp"

namespace lcdmds {

/// Place of the rational function field GF(q)(x): either a monic irreducible
/// polynomial (finite place) or the place at infinity. Rational places are
/// the degree-one ones: x - alpha and infinity.
class Place {
public:
    static Place finite(const Polynomial& monic_irreducible);
    static Place at_infinity(const FieldCtx& ctx);
    /// The zero place of x - alpha.
    static Place rational(const FieldElement& alpha);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_infinity() const { return infinity_; }
    int degree() const { return degree_; }
    /// Defining polynomial of a finite place.
    const Polynomial& irreducible() const;
    /// alpha for a finite degree-one place.
    FieldElement alpha() const;

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    /// Finite places first in canonical polynomial order, infinity last.
    bool operator<(const Place& o) const;

    std::string to_string() const;

private:
    Place(const FieldCtx& ctx, bool infinity, Polynomial poly, int degree);

    const FieldCtx* ctx_;
    bool infinity_;
    Polynomial poly_;
    int degree_;
};

/// Formal integer combination of places with finite support. Zero
/// coefficients are never stored.
class Divisor {
public:
    explicit Divisor(const FieldCtx& ctx) : ctx_(&ctx) {}
    static Divisor single(const Place& place, int coeff);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::map<Place, int>& terms() const { return terms_; }
    int coeff(const Place& place) const;
    void add_place(const Place& place, int coeff);
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    bool is_effective() const;
    std::vector<Place> support() const;
    Divisor positive_part() const;
    Divisor negative_part() const;  // effective: -min(coeff, 0)

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator*(int scalar) const;
    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }
    /// Coefficient-wise >= comparison (partial order).
    bool operator>=(const Divisor& o) const;

    std::string to_string() const;

private:
    const FieldCtx* ctx_;
    std::map<Place, int> terms_;
};

bool supports_disjoint(const Divisor& a, const Divisor& b);

/// Coefficient-wise (min, max): the lattice meet and join. Degrees satisfy
/// deg(meet) + deg(join) = deg(a) + deg(b).
std::pair<Divisor, Divisor> divisor_lattice(const Divisor& a, const Divisor& b);

/// Nonzero rational function stored as a reduced fraction with monic
/// denominator; any scalar lives in the numerator.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);
    static RationalFunction from_poly(const Polynomial& p);
    static RationalFunction one(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return num_.ctx(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const FieldElement& s) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Zeros minus poles of a nonzero function; always degree zero.
Divisor principal_divisor(const RationalFunction& u);
Divisor principal_divisor(const Polynomial& p);

/// Order of vanishing of u at a place (negative at poles).
int valuation(const RationalFunction& u, const Place& place);

/// Canonical function with the prescribed degree-zero divisor: the
/// monic-over-monic product of the finite-place factors. The divisor
/// determines the function only up to a nonzero scalar; this picks scalar 1.
RationalFunction function_with_divisor(const Divisor& g);

/// Basis of L(G) = { u : (u) + G >= 0 } + {0}. Size is deg(G)+1 for
/// deg(G) >= 0 and 0 otherwise. Every member is re-checked against the
/// divisor constraint before being returned.
std::vector<RationalFunction> riemann_roch_basis(const Divisor& g);

/// Value of u at a rational place (degree one or infinity). Throws on poles.
FieldElement evaluate(const RationalFunction& u, const Place& place);

/// Residue of u dx at a finite rational place carrying at worst a simple
/// pole: the value of (x - alpha) * u at alpha.
FieldElement residue(const RationalFunction& u, const Place& place);

/// Divisor (z) - D + (n-2) * Pinf of the differential (dg/g) dx where
/// g = prod(x - alpha_i) and z = dg/dx. Always has degree -2.
Divisor differential_divisor_of_omega_z(const FieldCtx& ctx,
                                        const std::vector<FieldElement>& alphas);

} // namespace lcdmds

#endif
