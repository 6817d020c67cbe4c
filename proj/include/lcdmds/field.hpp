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

#ifndef LCDMDS_FIELD_HPP
#define LCDMDS_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcdmds/errors.hpp"

namespace lcdmds {

class FieldElement;

/// Largest supported field size. Everything is exact table-backed arithmetic,
/// so q = p^r must stay small.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// Immutable description of GF(p^r): characteristic, extension degree, monic
/// irreducible modulus, plus exp/log tables over a fixed generator.
///
/// Contexts are interned. FieldCtx::make and FieldCtx::with_modulus return
/// references that stay valid for the lifetime of the process, and equal
/// inputs always return the same object, so element contexts compare by
/// address.
///
/// Elements are canonical integer encodings: enc(a) = sum coeffs[i] * p^i
/// with coeffs the base-p coordinate vector over the power basis. All
/// deterministic tie-breaks in the library ("smallest element", "smallest
/// polynomial") refer to this encoding.
class FieldCtx {
public:
    /// Field with the canonical modulus: the monic irreducible of degree r
    /// over GF(p) with the smallest coefficient-list encoding.
    static const FieldCtx& make(std::uint32_t p, std::uint32_t r);

    /// Field with a caller-supplied monic irreducible modulus (ascending
    /// coefficients, length r+1). Validated.
    static const FieldCtx& with_modulus(std::uint32_t p, std::uint32_t r,
                                        const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }
    bool has_odd_characteristic() const { return p_ != 2; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::uint32_t enc) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    /// Image of an integer under Z -> GF(p) c GF(q).
    FieldElement from_int(std::int64_t value) const;
    /// Multiplicative generator with the smallest canonical encoding.
    FieldElement generator() const;
    /// Non-square with the smallest canonical encoding (odd characteristic only).
    FieldElement non_square() const;

    // Encoding-level arithmetic. Inputs and outputs are canonical encodings
    // in [0, q). Polynomial and matrix code uses these directly; they are
    // inline and table-backed because exact linear algebra hammers them.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table_[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_table_[a] + log_table_[b];
        const std::uint32_t group = q_ - 1;
        if (s >= group) s -= group;
        return exp_table_[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        require_arg(a != 0, "division by zero");
        std::uint32_t l = log_table_[a];
        return exp_table_[l == 0 ? 0 : q_ - 1 - l];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// True iff a is a square. In characteristic two every element is a
    /// square; for odd q this is a = 0 or a^((q-1)/2) = 1.
    bool is_square(std::uint32_t a) const;

    /// Square root of a square, canonical branch: of the two roots +-s the
    /// one with the smaller encoding is returned. Throws on non-squares.
    std::uint32_t sqrt(std::uint32_t a) const;

    std::vector<std::uint32_t> decode(std::uint32_t enc) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& coeffs) const;

    bool operator==(const FieldCtx& other) const { return this == &other; }
    bool operator!=(const FieldCtx& other) const { return this != &other; }

private:
    FieldCtx(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);
    static const FieldCtx& intern(std::uint32_t p, std::uint32_t r,
                                  const std::vector<std::uint32_t>& modulus);

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t sqrt_tonelli_shanks(std::uint32_t a) const;

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_;
    std::uint32_t non_square_;              // 0 when p = 2
    std::vector<std::uint32_t> exp_table_;  // exp_table_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_table_;  // inverse of exp_table_ on [1, q)
    std::vector<std::uint32_t> neg_table_;  // additive inverses
    std::vector<std::uint32_t> add_table_;  // q x q, only for small q
};

/// Element of a finite field: context pointer plus canonical encoding.
/// Plain value type; all operations are pure.
class FieldElement {
public:
    FieldElement(const FieldCtx& ctx, std::uint32_t enc) : ctx_(&ctx), enc_(enc) {
        require_arg(enc < ctx.q(), "field element encoding out of range");
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::uint32_t enc() const { return enc_; }
    std::vector<std::uint32_t> coeffs() const { return ctx_->decode(enc_); }
    bool is_zero() const { return enc_ == 0; }
    bool is_one() const { return enc_ == 1; }

    FieldElement operator+(const FieldElement& o) const { return with(ctx_->add(enc_, same(o))); }
    FieldElement operator-(const FieldElement& o) const { return with(ctx_->sub(enc_, same(o))); }
    FieldElement operator*(const FieldElement& o) const { return with(ctx_->mul(enc_, same(o))); }
    FieldElement operator/(const FieldElement& o) const { return with(ctx_->div(enc_, same(o))); }
    FieldElement operator-() const { return with(ctx_->neg(enc_)); }
    FieldElement pow(std::uint64_t e) const { return with(ctx_->pow(enc_, e)); }
    FieldElement inverse() const { return with(ctx_->inv(enc_)); }
    bool is_square() const { return ctx_->is_square(enc_); }
    FieldElement sqrt() const { return with(ctx_->sqrt(enc_)); }

    bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && enc_ == o.enc_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Encoding order. Only meaningful between elements of the same field.
    bool operator<(const FieldElement& o) const { return enc_ < same(o); }

    std::string to_string() const { return std::to_string(enc_); }

private:
    FieldElement with(std::uint32_t e) const { return FieldElement(*ctx_, e); }
    std::uint32_t same(const FieldElement& o) const {
        require_arg(ctx_ == o.ctx_, "field elements from different contexts");
        return o.enc_;
    }

    const FieldCtx* ctx_;
    std::uint32_t enc_;
};

} // namespace lcdmds

#endif
