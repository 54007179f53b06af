/*
 * Copyright 2026 hermcurve contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exact arithmetic in GF(p^k) at desk scale, and towers GF(q) subset GF(q^2)
// subset GF(q^4) (plus GF(q^3)/GF(q^6)) with embeddings that commute along
// every registered chain.
//
// Elements are stored as a packed coefficient index into the polynomial
// basis; multiplication, inversion and Frobenius go through per-context
// lookup tables built once at construction. Contexts are immutable after
// construction and safe to share across threads.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hermcurve/common.hpp"

namespace hermcurve {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// One element of a FieldCtx. Value type; equality is index equality within
/// the same context. The index packs the coefficient vector c_0..c_{k-1}
/// (c_0 most significant base-p digit), so index order is lexicographic
/// order on coefficient vectors; index 0 is the ring zero.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(const FieldCtx* ctx, uint64_t idx) : ctx_(ctx), idx_(idx) {}

    const FieldCtx* ctx() const { return ctx_; }
    uint64_t index() const { return idx_; }
    bool valid() const { return ctx_ != nullptr; }

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && idx_ == o.idx_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

   private:
    const FieldCtx* ctx_ = nullptr;
    uint64_t idx_ = 0;
};

/// GF(p^k) with the lexicographically smallest monic irreducible modulus of
/// degree k over GF(p). Orders above 2^20 are refused.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
   public:
    static FieldCtxPtr make(uint32_t p, uint32_t k);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return k_; }
    uint64_t order() const { return order_; }

    /// Modulus coefficients c_0..c_k (constant first, c_k == 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    /// Text form "p k c_0 c_1 ... c_k" used in reports.
    std::string field_spec() const;

    FieldElem zero() const { return FieldElem(this, 0); }
    FieldElem one() const { return FieldElem(this, one_idx_); }
    FieldElem element(uint64_t idx) const;
    /// Prime-subfield constant v mod p.
    FieldElem from_int(int64_t v) const;
    FieldElem from_coeffs(const std::vector<uint32_t>& c) const;
    std::vector<uint32_t> coeffs(const FieldElem& x) const;
    /// The class of the modulus variable; requires k >= 2.
    FieldElem poly_gen() const;
    /// Smallest-index generator of the multiplicative group.
    FieldElem mult_generator() const { return FieldElem(this, gen_idx_); }

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, uint64_t e) const;
    /// x^(p^j), a table lookup.
    FieldElem frobenius(const FieldElem& a, uint32_t j = 1) const;

    uint64_t mult_order(const FieldElem& a) const;

   private:
    FieldCtx(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
    void build_tables();
    void check(const FieldElem& x) const;

    uint32_t p_ = 0, k_ = 0;
    uint64_t order_ = 0;
    uint64_t one_idx_ = 0;
    uint64_t gen_idx_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint64_t> pow_p_;          // pow_p_[j] = p^j
    std::vector<uint32_t> exp_;            // exp_[e] = index of g^e, e in [0, order-1)
    std::vector<uint32_t> log_;            // log_[idx] for idx != 0
    std::vector<std::vector<uint32_t>> frob_;  // frob_[j][idx] = idx^(p^(j+1)), j+1 < k
};

/// Injective ring homomorphism between two contexts, realized as a lookup
/// table from source index to destination index.
class Embedding {
   public:
    Embedding() = default;
    Embedding(FieldCtxPtr src, FieldCtxPtr dst, FieldElem root_of_src_modulus);

    const FieldCtx* src() const { return src_.get(); }
    const FieldCtx* dst() const { return dst_.get(); }
    FieldElem root() const { return root_; }

    FieldElem apply(const FieldElem& x) const;
    /// Inverse on the image; returns false when x is not in the image.
    bool preimage(const FieldElem& x, FieldElem* out) const;

   private:
    FieldCtxPtr src_, dst_;
    FieldElem root_;
    std::vector<uint32_t> fwd_;
    std::vector<int64_t> rev_;
};

/// The field tower over GF(q), q = p^t: contexts GF(q^m) created on demand
/// with embeddings chosen so that every chain of embeddings between
/// registered fields commutes (skip-level maps extend the maps of all
/// proper subfields).
class FieldTower {
   public:
    FieldTower(uint32_t p, uint32_t t);

    uint32_t p() const { return p_; }
    uint32_t t() const { return t_; }
    uint64_t q() const { return q_; }

    /// GF(q^m); created and linked on first use.
    FieldCtxPtr field(uint32_t m);
    const Embedding& embedding(uint32_t m_src, uint32_t m_dst);

    /// Which m a context belongs to; 0 when not a member of this tower.
    uint32_t member_m(const FieldCtx* ctx) const;

    /// x^q in x's own field (a power of Frobenius).
    FieldElem pow_q(const FieldElem& x) const;
    /// x^(q^2).
    FieldElem pow_q2(const FieldElem& x) const { return pow_q(pow_q(x)); }

    /// The GF(q^2) -> GF(q^2) involution x -> x^q. Requires x in field(2).
    FieldElem conjugate(const FieldElem& x) const;
    /// x^(q+1) for x in GF(q^2), as an element of GF(q^2).
    FieldElem norm_q2(const FieldElem& x) const;
    /// x + x^q for x in GF(q^2), as an element of GF(q^2).
    FieldElem trace_q2(const FieldElem& x) const;
    /// x^(q+1) mapped down into the GF(q) context.
    FieldElem norm_to_subfield(const FieldElem& x);
    /// x + x^q mapped down into the GF(q) context.
    FieldElem trace_to_subfield(const FieldElem& x);

    /// True when x lies in the subfield GF(q^m_sub) of its own field.
    bool in_subfield(const FieldElem& x, uint32_t m_sub) const;
    bool is_q2_rational(const FieldElem& x) const { return in_subfield(x, 2); }

    /// Lift x from its tower field into GF(q^m_dst).
    FieldElem lift(const FieldElem& x, uint32_t m_dst);
    /// Write x in GF(q^4) as a + theta*b with a, b in GF(q^2) and theta a
    /// fixed basis element of GF(q^4) over GF(q^2).
    std::pair<FieldElem, FieldElem> split_q4_over_q2(const FieldElem& x);

   private:
    const Embedding& embedding_locked(uint32_t m_src, uint32_t m_dst);
    void build_split_tables();

    uint32_t p_ = 0, t_ = 0;
    uint64_t q_ = 0;
    std::map<uint32_t, FieldCtxPtr> fields_;
    std::map<std::pair<uint32_t, uint32_t>, Embedding> embeddings_;
    // GF(q^4) = GF(q^2) + theta*GF(q^2) component tables.
    bool split_built_ = false;
    std::vector<std::pair<uint32_t, uint32_t>> split_;
};

/// Dense univariate polynomial over one context; coefficient of X^i at c[i].
struct UniPoly {
    const FieldCtx* ctx = nullptr;
    std::vector<FieldElem> c;

    UniPoly() = default;
    UniPoly(const FieldCtx* f, std::vector<FieldElem> coeffs) : ctx(f), c(std::move(coeffs)) {}

    int64_t degree() const;
    bool is_zero() const { return degree() < 0; }
    FieldElem eval(const FieldElem& x) const;
};

/// All roots of f in its field, by exhaustive scan in index order.
/// Throws UsageError on the zero polynomial.
std::vector<FieldElem> univariate_roots(const UniPoly& f);

}  // namespace hermcurve
