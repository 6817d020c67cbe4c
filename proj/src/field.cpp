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

#include "lcdmds/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "lcdmds/poly.hpp"

namespace lcdmds {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint32_t p, std::uint32_t r) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxFieldSize) {
            throw std::invalid_argument("field size p^r exceeds the supported bound");
        }
    }
    return q;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
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

using CtxKey = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<CtxKey, std::unique_ptr<FieldCtx>>& registry() {
    static std::map<CtxKey, std::unique_ptr<FieldCtx>> reg;
    return reg;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& modulus_cache() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> cache;
    return cache;
}

} // namespace

const FieldCtx& FieldCtx::intern(std::uint32_t p, std::uint32_t r,
                                 const std::vector<std::uint32_t>& modulus) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& reg = registry();
    CtxKey key{p, r, modulus};
    auto it = reg.find(key);
    if (it == reg.end()) {
        it = reg.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, r, modulus))).first;
    }
    return *it->second;
}

const FieldCtx& FieldCtx::make(std::uint32_t p, std::uint32_t r) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (r < 1) throw std::invalid_argument("extension degree must be at least 1");
    checked_pow(p, r);

    if (r == 1) {
        return intern(p, 1, {0, 1});  // modulus x
    }

    {
        std::vector<std::uint32_t> cached;
        {
            std::lock_guard<std::mutex> lock(registry_mutex());
            auto it = modulus_cache().find({p, r});
            if (it != modulus_cache().end()) cached = it->second;
        }
        if (!cached.empty()) return intern(p, r, cached);
    }
    // Smallest-encoding monic irreducible of degree r over GF(p). The scan is
    // done outside the registry lock because it builds the base field.
    const FieldCtx& base = FieldCtx::make(p, 1);
    Polynomial canonical = irreducible_of_degree(base, r, {});
    std::vector<std::uint32_t> mod;
    mod.reserve(r + 1);
    for (std::uint32_t i = 0; i <= r; ++i) mod.push_back(canonical.coeff_enc(i));
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        modulus_cache().emplace(std::make_pair(p, r), mod);
    }
    return intern(p, r, mod);
}

const FieldCtx& FieldCtx::with_modulus(std::uint32_t p, std::uint32_t r,
                                       const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (r < 1) throw std::invalid_argument("extension degree must be at least 1");
    checked_pow(p, r);
    if (modulus.size() != static_cast<std::size_t>(r) + 1) {
        throw std::invalid_argument("modulus must have exactly r+1 coefficients");
    }
    for (std::uint32_t c : modulus) {
        if (c >= p) throw std::invalid_argument("modulus coefficients must be reduced mod p");
    }
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (r == 1) {
        return intern(p, 1, modulus);  // any monic linear works; elements are residues mod p
    }
    const FieldCtx& base = FieldCtx::make(p, 1);
    Polynomial f(base, modulus);
    if (!is_irreducible(f)) throw std::invalid_argument("modulus is not irreducible over GF(p)");
    return intern(p, r, modulus);
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(static_cast<std::uint32_t>(checked_pow(p, r))), modulus_(std::move(modulus)),
      generator_(0), non_square_(0) {
    // Generator search on raw digit arithmetic, then exp/log tables.
    const std::uint32_t group = q_ - 1;
    const std::vector<std::uint32_t> primes = prime_factors(group);
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint32_t ell : primes) {
            if (pow_raw(cand, group / ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok || q_ == 2) {
            generator_ = (q_ == 2) ? 1 : cand;
            break;
        }
    }
    internal_check(generator_ != 0 || q_ == 2, "no multiplicative generator found");
    if (q_ == 2) generator_ = 1;

    exp_table_.assign(group, 0);
    log_table_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_table_[i] = acc;
        log_table_[acc] = i;
        acc = mul_raw(acc, generator_);
    }
    internal_check(acc == 1, "generator order mismatch while building tables");

    if (p_ != 2) {
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            if (log_table_[cand] % 2 == 1) {
                non_square_ = cand;
                break;
            }
        }
        internal_check(non_square_ != 0, "no non-square found in odd-characteristic field");
    }

    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t out = 0, base = 1;
        for (std::uint32_t i = 0; i < r_; ++i) {
            std::uint32_t da = (a / base) % p_;
            out += ((p_ - da) % p_) * base;
            base *= p_;
        }
        neg_table_[a] = out;
    }
    // Full addition table only where it stays small.
    if (q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
            }
        }
    }
}

std::vector<std::uint32_t> FieldCtx::decode(std::uint32_t enc) const {
    require_arg(enc < q_, "encoding out of range");
    std::vector<std::uint32_t> c(r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        c[i] = enc % p_;
        enc /= p_;
    }
    return c;
}

std::uint32_t FieldCtx::encode(const std::vector<std::uint32_t>& coeffs) const {
    require_arg(coeffs.size() == r_, "coefficient vector must have length r");
    std::uint64_t enc = 0;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        require_arg(coeffs[i] < p_, "coefficient not reduced mod p");
        enc += static_cast<std::uint64_t>(coeffs[i]) * base;
        base *= p_;
    }
    return static_cast<std::uint32_t>(enc);
}

std::uint32_t FieldCtx::add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    std::uint32_t base = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t da = (a / base) % p_;
        std::uint32_t db = (b / base) % p_;
        out += ((da + db) % p_) * base;
        base *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::mul_raw(std::uint32_t a, std::uint32_t b) const {
    // Schoolbook product of digit vectors, reduced by the modulus. Used only
    // while bootstrapping the tables.
    std::vector<std::uint32_t> da = decode(a), db = decode(b);
    std::vector<std::uint32_t> prod(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
    }
    for (std::uint32_t k = 2 * r_ - 2; k + 1 > r_; --k) {
        std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t j = 0; j < r_; ++j) {
            std::uint32_t m = (c * (p_ - modulus_[j])) % p_;
            prod[k - r_ + j] = (prod[k - r_ + j] + m) % p_;
        }
    }
    prod.resize(r_);
    return encode(prod);
}

std::uint32_t FieldCtx::pow_raw(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1) result = mul_raw(result, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t group = q_ - 1;
    std::uint64_t l = (static_cast<std::uint64_t>(log_table_[a]) * (e % group)) % group;
    return exp_table_[l];
}

bool FieldCtx::is_square(std::uint32_t a) const {
    require_arg(a < q_, "encoding out of range");
    if (p_ == 2 || a == 0) return true;
    return log_table_[a] % 2 == 0;
}

std::uint32_t FieldCtx::sqrt_tonelli_shanks(std::uint32_t a) const {
    // Odd q, a a nonzero square. Standard Tonelli-Shanks with the canonical
    // non-square as non-residue seed.
    std::uint64_t t = q_ - 1;
    std::uint32_t s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    std::uint32_t c = pow(non_square_, t);
    std::uint32_t x = pow(a, (t + 1) / 2);
    std::uint32_t u = pow(a, t);
    std::uint32_t round = s;
    while (u != 1) {
        std::uint32_t j = 0;
        std::uint32_t probe = u;
        while (probe != 1) {
            probe = mul(probe, probe);
            ++j;
            internal_check(j < round, "Tonelli-Shanks: input was not a square");
        }
        std::uint32_t b = c;
        for (std::uint32_t i = 0; i + j + 1 < round; ++i) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        u = mul(u, c);
        round = j;
    }
    return x;
}

std::uint32_t FieldCtx::sqrt(std::uint32_t a) const {
    require_arg(a < q_, "encoding out of range");
    if (a == 0) return 0;
    if (p_ == 2) {
        // Squaring is the Frobenius, so a^(q/2) squares back to a^q = a.
        return pow(a, q_ / 2);
    }
    require_arg(is_square(a), "square root of a non-square");
    std::uint32_t s = (q_ % 4 == 3) ? pow(a, (static_cast<std::uint64_t>(q_) + 1) / 4)
                                    : sqrt_tonelli_shanks(a);
    internal_check(mul(s, s) == a, "square root verification failed");
    std::uint32_t other = neg(s);
    return s <= other ? s : other;
}

FieldElement FieldCtx::zero() const { return FieldElement(*this, 0); }
FieldElement FieldCtx::one() const { return FieldElement(*this, 1); }
FieldElement FieldCtx::element(std::uint32_t enc) const { return FieldElement(*this, enc); }

FieldElement FieldCtx::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    return FieldElement(*this, encode(coeffs));
}

FieldElement FieldCtx::from_int(std::int64_t value) const {
    std::int64_t m = value % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return FieldElement(*this, static_cast<std::uint32_t>(m));
}

FieldElement FieldCtx::generator() const { return FieldElement(*this, generator_); }

FieldElement FieldCtx::non_square() const {
    require_arg(p_ != 2, "every element is a square in characteristic two");
    return FieldElement(*this, non_square_);
}

} // namespace lcdmds
