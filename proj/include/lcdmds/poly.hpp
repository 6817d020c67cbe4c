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

#ifndef LCDMDS_POLY_HPP
#define LCDMDS_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcdmds/field.hpp"

namespace lcdmds {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// ascending as canonical encodings with no trailing zeros; the zero
/// polynomial stores nothing. Asking the zero polynomial for its degree is an
/// error rather than a sentinel integer, so degree arithmetic can never be
/// silently corrupted.
class Polynomial {
public:
    explicit Polynomial(const FieldCtx& ctx) : ctx_(&ctx) {}
    Polynomial(const FieldCtx& ctx, std::vector<std::uint32_t> coeffs);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x(const FieldCtx& ctx);
    /// The monic linear polynomial x - alpha.
    static Polynomial x_minus(const FieldElement& alpha);
    static Polynomial from_elements(const FieldCtx& ctx, const std::vector<FieldElement>& coeffs);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const;
    std::size_t size() const { return c_.size(); }
    /// Coefficient encoding; indices beyond the stored range read as zero.
    std::uint32_t coeff_enc(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return FieldElement(*ctx_, coeff_enc(i)); }
    FieldElement leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Polynomial monic() const;
    bool is_constant() const { return c_.size() <= 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& s) const;
    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    Polynomial pow(std::uint64_t e) const;

    FieldElement eval(const FieldElement& at) const;

    bool operator==(const Polynomial& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical order: by degree, then by the integer encoding of the
    /// coefficient list (most significant coefficient first). This is the
    /// order behind every "smallest polynomial" tie-break.
    static int cmp(const Polynomial& a, const Polynomial& b);
    bool operator<(const Polynomial& o) const { return cmp(*this, o) < 0; }

    std::string to_string() const;

private:
    void normalize();

    const FieldCtx* ctx_;
    std::vector<std::uint32_t> c_;
};

/// Formal derivative in characteristic p.
Polynomial derivative(const Polynomial& f);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// a * b mod m and a^e mod m.
Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

/// Unique polynomial of degree < #points through the given points.
/// Abscissae must be pairwise distinct.
Polynomial interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);

bool is_irreducible(const Polynomial& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted canonically. The product of the factor powers times leading(f)
/// reconstructs f. Squarefree split, then distinct-degree, then
/// Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator.
std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f);

/// Roots of f lying in the coefficient field, with multiplicities, sorted by
/// encoding.
std::vector<std::pair<FieldElement, int>> roots_in_field(const Polynomial& f);

/// Smallest monic irreducible of degree m not listed in `forbidden`.
/// Throws InfeasibleError if the candidates are exhausted.
Polynomial irreducible_of_degree(const FieldCtx& ctx, std::uint32_t m,
                                 const std::vector<Polynomial>& forbidden);

} // namespace lcdmds

#endif
