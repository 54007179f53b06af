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

#include "hermcurve/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hermcurve {
namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// -- dense univariate arithmetic over GF(p), used only while bootstrapping a
//    context (modulus search, generator search). Little-endian coefficients.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

// a mod m, m monic
PPoly pmod(PPoly a, const PPoly& m, uint32_t p) {
    ptrim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t j = 0; j < m.size(); ++j) {
                uint32_t sub = (lead * m[j]) % p;
                a[shift + j] = (a[shift + j] + p * p - sub) % p;
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint32_t p) {
    return pmod(pmul(a, b, p), m, p);
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& m, uint32_t p) {
    PPoly r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // normalize b monic before reduction
        uint32_t lb = b.back();
        if (lb != 1) {
            // inverse of lb mod p
            uint32_t inv = 1;
            for (uint32_t x = 1; x < p; ++x)
                if ((x * lb) % p == 1) { inv = x; break; }
            for (auto& c : b) c = (c * inv) % p;
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree k over GF(p); true iff irreducible.
bool irreducible(const PPoly& f, uint32_t p) {
    const size_t k = f.size() - 1;
    if (k == 1) return true;
    // X^(p^k) == X mod f
    uint64_t pk = 1;
    for (size_t i = 0; i < k; ++i) pk *= p;
    PPoly x{0, 1};
    PPoly xp = ppowmod(x, pk, f, p);
    PPoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    // gcd(X^(p^(k/l)) - X, f) trivial for every prime l | k
    for (uint64_t l : prime_factors(k)) {
        uint64_t pd = 1;
        for (size_t i = 0; i < k / l; ++i) pd *= p;
        PPoly g = ppowmod(x, pd, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        ptrim(g);
        PPoly d = pgcd(f, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElem forwarding

bool FieldElem::is_one() const { return *this == ctx_->one(); }
FieldElem FieldElem::operator+(const FieldElem& o) const { return ctx_->add(*this, o); }
FieldElem FieldElem::operator-(const FieldElem& o) const { return ctx_->sub(*this, o); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return ctx_->mul(*this, o); }
FieldElem FieldElem::operator-() const { return ctx_->neg(*this); }
FieldElem FieldElem::inv() const { return ctx_->inv(*this); }
FieldElem FieldElem::pow(uint64_t e) const { return ctx_->pow(*this, e); }

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtxPtr FieldCtx::make(uint32_t p, uint32_t k) {
    if (!is_prime(p)) throw UsageError("field characteristic must be prime, got " + std::to_string(p));
    if (k == 0) throw UsageError("extension degree must be >= 1");
    uint64_t order = 1;
    for (uint32_t i = 0; i < k; ++i) {
        order *= p;
        if (order > kFieldOrderCap)
            throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds the desk-scale cap");
    }
    // lexicographically smallest monic irreducible, coefficients (c_0..c_{k-1})
    std::vector<uint32_t> mod(k + 1, 0);
    mod[k] = 1;
    bool found = false;
    for (uint64_t idx = 0; idx < order && !found; ++idx) {
        uint64_t v = idx;
        // idx digits: c_0 most significant
        for (uint32_t j = 0; j < k; ++j) {
            mod[k - 1 - j] = uint32_t(v % p);
            v /= p;
        }
        if (irreducible(mod, p)) found = true;
    }
    if (!found) throw InternalError("no irreducible modulus found");  // cannot happen
    return FieldCtxPtr(new FieldCtx(p, k, std::move(mod)));
}

FieldCtx::FieldCtx(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (uint32_t i = 0; i < k_; ++i) order_ *= p_;
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    one_idx_ = pow_p_[k_ - 1];  // coefficient vector (1,0,...,0)
    build_tables();
}

std::vector<uint32_t> FieldCtx::coeffs(const FieldElem& x) const {
    check(x);
    std::vector<uint32_t> c(k_);
    uint64_t v = x.index();
    for (uint32_t j = 0; j < k_; ++j) {
        c[k_ - 1 - j] = uint32_t(v % p_);
        v /= p_;
    }
    return c;
}

FieldElem FieldCtx::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != k_) throw UsageError("coefficient vector has wrong length");
    uint64_t idx = 0;
    for (uint32_t j = 0; j < k_; ++j) idx = idx * p_ + (c[j] % p_);
    return FieldElem(this, idx);
}

FieldElem FieldCtx::element(uint64_t idx) const {
    if (idx >= order_) throw UsageError("element index out of range");
    return FieldElem(this, idx);
}

FieldElem FieldCtx::from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return FieldElem(this, uint64_t(r) * pow_p_[k_ - 1]);
}

FieldElem FieldCtx::poly_gen() const {
    if (k_ < 2) throw UsageError("prime field has no polynomial generator");
    return FieldElem(this, pow_p_[k_ - 2]);  // coefficient vector (0,1,0,...)
}

std::string FieldCtx::field_spec() const {
    std::ostringstream os;
    os << p_ << ' ' << k_;
    for (uint32_t c : modulus_) os << ' ' << c;
    return os.str();
}

void FieldCtx::check(const FieldElem& x) const {
    if (x.ctx() != this) throw InternalError("element belongs to a different field context");
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    if (p_ == 2) return FieldElem(this, a.index() ^ b.index());
    uint64_t ia = a.index(), ib = b.index(), r = 0;
    for (uint32_t j = 0; j < k_; ++j) {
        uint64_t pw = pow_p_[j];
        uint32_t da = uint32_t(ia / pw % p_), db = uint32_t(ib / pw % p_);
        r += uint64_t((da + db) % p_) * pw;
    }
    return FieldElem(this, r);
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    check(a);
    if (p_ == 2) return a;
    uint64_t ia = a.index(), r = 0;
    for (uint32_t j = 0; j < k_; ++j) {
        uint64_t pw = pow_p_[j];
        uint32_t da = uint32_t(ia / pw % p_);
        r += uint64_t((p_ - da) % p_) * pw;
    }
    return FieldElem(this, r);
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    uint64_t e = uint64_t(log_[a.index()]) + log_[b.index()];
    if (e >= order_ - 1) e -= order_ - 1;
    return FieldElem(this, exp_[e]);
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw InternalError("inverse of zero");
    uint64_t e = (order_ - 1 - log_[a.index()]) % (order_ - 1);
    return FieldElem(this, exp_[e]);
}

FieldElem FieldCtx::pow(const FieldElem& a, uint64_t e) const {
    check(a);
    if (a.is_zero()) return e == 0 ? one() : zero();
    uint64_t r = (uint64_t(log_[a.index()]) * (e % (order_ - 1))) % (order_ - 1);
    return FieldElem(this, exp_[r]);
}

FieldElem FieldCtx::frobenius(const FieldElem& a, uint32_t j) const {
    check(a);
    j %= k_;
    if (j == 0) return a;
    return FieldElem(this, frob_[j - 1][a.index()]);
}

uint64_t FieldCtx::mult_order(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw UsageError("zero has no multiplicative order");
    uint64_t ord = order_ - 1;
    for (uint64_t f : prime_factors(order_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f).is_one()) ord /= f;
    }
    return ord;
}

void FieldCtx::build_tables() {
    const uint64_t n = order_;
    // bootstrap multiplication in coefficient space
    auto idx2poly = [&](uint64_t idx) {
        PPoly c(k_);
        for (uint32_t j = 0; j < k_; ++j) {
            c[j] = uint32_t(idx / pow_p_[j] % p_);
        }
        ptrim(c);
        return c;
    };
    auto poly2idx = [&](const PPoly& c) {
        uint64_t idx = 0;
        for (size_t j = 0; j < c.size(); ++j) idx += uint64_t(c[j]) * pow_p_[j];
        return idx;
    };
    auto slow_mul = [&](uint64_t a, uint64_t b) {
        return poly2idx(pmulmod(idx2poly(a), idx2poly(b), modulus_, p_));
    };
    auto slow_pow = [&](uint64_t a, uint64_t e) {
        uint64_t r = one_idx_;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    // smallest-index multiplicative generator
    auto factors = prime_factors(n - 1);
    gen_idx_ = 0;
    for (uint64_t cand = 1; cand < n; ++cand) {
        if (cand == one_idx_ && n > 2) continue;
        bool ok = true;
        for (uint64_t f : factors) {
            if (slow_pow(cand, (n - 1) / f) == one_idx_) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_idx_ = cand;
            break;
        }
    }
    if (gen_idx_ == 0 && n > 2) throw InternalError("no multiplicative generator found");
    if (n == 2) gen_idx_ = one_idx_;
    exp_.resize(n - 1);
    log_.assign(n, 0);
    uint64_t acc = one_idx_;
    for (uint64_t e = 0; e < n - 1; ++e) {
        exp_[e] = uint32_t(acc);
        log_[acc] = uint32_t(e);
        acc = slow_mul(acc, gen_idx_);
    }
    if (acc != one_idx_) throw InternalError("generator order mismatch");
    // Frobenius tables: x -> x^(p^j), j = 1..k-1
    frob_.assign(k_ > 1 ? k_ - 1 : 0, std::vector<uint32_t>(n));
    if (k_ > 1) {
        for (uint64_t idx = 0; idx < n; ++idx) {
            uint64_t xp = idx == 0 ? 0 : exp_[(uint64_t(log_[idx]) * (p_ % (n - 1))) % (n - 1)];
            frob_[0][idx] = uint32_t(xp);
        }
        for (uint32_t j = 1; j + 1 < k_; ++j)
            for (uint64_t idx = 0; idx < n; ++idx) frob_[j][idx] = frob_[0][frob_[j - 1][idx]];
    }
}

// ---------------------------------------------------------------------------
// Embedding

Embedding::Embedding(FieldCtxPtr src, FieldCtxPtr dst, FieldElem root)
    : src_(std::move(src)), dst_(std::move(dst)), root_(root) {
    const uint64_t ns = src_->order();
    fwd_.resize(ns);
    rev_.assign(dst_->order(), -1);
    for (uint64_t idx = 0; idx < ns; ++idx) {
        auto c = src_->coeffs(src_->element(idx));
        // Horner over powers of the root; c_0 is the constant term.
        FieldElem acc = dst_->zero();
        for (uint32_t j = src_->degree(); j-- > 0;) acc = acc * root_ + dst_->from_int(int64_t(c[j]));
        fwd_[idx] = uint32_t(acc.index());
        rev_[acc.index()] = int64_t(idx);
    }
}

FieldElem Embedding::apply(const FieldElem& x) const {
    if (x.ctx() != src_.get()) throw InternalError("embedding applied to foreign element");
    return FieldElem(dst_.get(), fwd_[x.index()]);
}

bool Embedding::preimage(const FieldElem& x, FieldElem* out) const {
    if (x.ctx() != dst_.get()) throw InternalError("preimage of foreign element");
    int64_t idx = rev_[x.index()];
    if (idx < 0) return false;
    *out = FieldElem(src_.get(), uint64_t(idx));
    return true;
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower::FieldTower(uint32_t p, uint32_t t) : p_(p), t_(t) {
    if (!is_prime(p)) throw UsageError("tower characteristic must be prime");
    if (t == 0) throw UsageError("tower degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < t; ++i) q_ *= p;
    field(1);
}

FieldCtxPtr FieldTower::field(uint32_t m) {
    auto it = fields_.find(m);
    if (it != fields_.end()) return it->second;
    auto ctx = FieldCtx::make(p_, m * t_);
    fields_.emplace(m, ctx);
    return ctx;
}

uint32_t FieldTower::member_m(const FieldCtx* ctx) const {
    for (const auto& [m, f] : fields_)
        if (f.get() == ctx) return m;
    return 0;
}

const Embedding& FieldTower::embedding(uint32_t ms, uint32_t md) {
    auto key = std::make_pair(ms, md);
    auto it = embeddings_.find(key);
    if (it != embeddings_.end()) return it->second;
    if (md % ms != 0) throw UsageError("no embedding: source degree does not divide target degree");
    auto Fs = field(ms);
    auto Fd = field(md);
    if (ms == md) {
        FieldElem root = Fs->degree() >= 2 ? Fs->poly_gen() : Fs->zero();
        auto [pos, _] = embeddings_.emplace(key, Embedding(Fs, Fd, root));
        return pos->second;
    }
    // proper divisors of ms whose fields carry a polynomial generator
    std::vector<uint32_t> divs;
    for (uint32_t d = 1; d < ms; ++d)
        if (ms % d == 0 && d * t_ >= 2) divs.push_back(d);
    for (uint32_t d : divs) {
        embedding(d, ms);
        embedding(d, md);
    }
    // modulus of the source field, evaluated in the destination
    const auto& mod = Fs->modulus();
    auto eval_mod = [&](const FieldElem& x) {
        FieldElem acc = Fd->zero();
        for (size_t j = mod.size(); j-- > 0;) acc = acc * x + Fd->from_int(int64_t(mod[j]));
        return acc;
    };
    auto horner = [&](const FieldCtx* sctx, const FieldElem& v, const FieldElem& root) {
        auto c = sctx->coeffs(v);
        FieldElem acc = Fd->zero();
        for (uint32_t j = sctx->degree(); j-- > 0;) acc = acc * root + Fd->from_int(int64_t(c[j]));
        return acc;
    };
    for (uint64_t idx = 0; idx < Fd->order(); ++idx) {
        FieldElem cand = Fd->element(idx);
        if (!eval_mod(cand).is_zero()) continue;
        bool ok = true;
        for (uint32_t d : divs) {
            const Embedding& d_to_ms = embeddings_.at({d, ms});
            const Embedding& d_to_md = embeddings_.at({d, md});
            FieldElem gd = field(d)->poly_gen();
            FieldElem via = horner(Fs.get(), d_to_ms.apply(gd), cand);
            if (via != d_to_md.apply(gd)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto [pos, _] = embeddings_.emplace(key, Embedding(Fs, Fd, cand));
        return pos->second;
    }
    throw InternalError("no compatible embedding root found");
}

FieldElem FieldTower::pow_q(const FieldElem& x) const {
    return x.ctx()->frobenius(x, t_);
}

FieldElem FieldTower::conjugate(const FieldElem& x) const {
    if (member_m(x.ctx()) != 2)
        throw UsageError("conjugate requires an element of the degree-2 tower field");
    return pow_q(x);
}

FieldElem FieldTower::norm_q2(const FieldElem& x) const { return x * conjugate(x); }

FieldElem FieldTower::trace_q2(const FieldElem& x) const { return x + conjugate(x); }

FieldElem FieldTower::norm_to_subfield(const FieldElem& x) {
    FieldElem n = norm_q2(x);
    FieldElem out;
    if (!embedding(1, 2).preimage(n, &out)) throw InternalError("norm value escaped GF(q)");
    return out;
}

FieldElem FieldTower::trace_to_subfield(const FieldElem& x) {
    FieldElem n = trace_q2(x);
    FieldElem out;
    if (!embedding(1, 2).preimage(n, &out)) throw InternalError("trace value escaped GF(q)");
    return out;
}

bool FieldTower::in_subfield(const FieldElem& x, uint32_t m_sub) const {
    uint32_t m = member_m(x.ctx());
    if (m == 0) throw UsageError("element is not in this tower");
    if (m % m_sub != 0) return false;
    FieldElem y = x;
    for (uint32_t i = 0; i < m_sub; ++i) y = pow_q(y);
    return y == x;
}

FieldElem FieldTower::lift(const FieldElem& x, uint32_t m_dst) {
    uint32_t m = member_m(x.ctx());
    if (m == 0) throw UsageError("element is not in this tower");
    if (m == m_dst) return x;
    return embedding(m, m_dst).apply(x);
}

namespace {
// Gauss-Jordan inverse over GF(p) for small dense matrices.
std::vector<std::vector<uint32_t>> gfp_invert(std::vector<std::vector<uint32_t>> a, uint32_t p) {
    const size_t n = a.size();
    std::vector<std::vector<uint32_t>> inv(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    auto minv = [&](uint32_t v) {
        for (uint32_t x = 1; x < p; ++x)
            if ((x * v) % p == 1) return x;
        throw InternalError("gfp_invert: singular pivot");
    };
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("gfp_invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        uint32_t s = minv(a[col][col]);
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = (a[col][j] * s) % p;
            inv[col][j] = (inv[col][j] * s) % p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            uint32_t f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] = (a[r][j] + p * p - f * a[col][j] % p) % p;
                inv[r][j] = (inv[r][j] + p * p - f * inv[col][j] % p) % p;
            }
        }
    }
    return inv;
}
}  // namespace

void FieldTower::build_split_tables() {
    auto F2 = field(2);
    auto F4 = field(4);
    const Embedding& e24 = embedding(2, 4);
    // theta: smallest element of GF(q^4) outside the image of GF(q^2)
    FieldElem theta = F4->zero(), dummy;
    for (uint64_t idx = 0; idx < F4->order(); ++idx) {
        FieldElem cand = F4->element(idx);
        if (!e24.preimage(cand, &dummy)) {
            theta = cand;
            break;
        }
    }
    const uint32_t half = F2->degree();
    const uint32_t full = F4->degree();
    // columns: emb(e_i) then theta*emb(e_i), as GF(p) coefficient vectors
    std::vector<std::vector<uint32_t>> cols(full, std::vector<uint32_t>(full, 0));
    for (uint32_t i = 0; i < half; ++i) {
        std::vector<uint32_t> unit(half, 0);
        unit[i] = 1;
        FieldElem bi = e24.apply(F2->from_coeffs(unit));
        auto c0 = F4->coeffs(bi);
        auto c1 = F4->coeffs(bi * theta);
        for (uint32_t r = 0; r < full; ++r) {
            cols[r][i] = c0[r];
            cols[r][half + i] = c1[r];
        }
    }
    auto inv = gfp_invert(cols, p_);
    split_.resize(F4->order());
    for (uint64_t idx = 0; idx < F4->order(); ++idx) {
        auto cz = F4->coeffs(F4->element(idx));
        std::vector<uint32_t> sol(full, 0);
        for (uint32_t r = 0; r < full; ++r) {
            uint64_t acc = 0;
            for (uint32_t j = 0; j < full; ++j) acc += uint64_t(inv[r][j]) * cz[j];
            sol[r] = uint32_t(acc % p_);
        }
        std::vector<uint32_t> a(sol.begin(), sol.begin() + half);
        std::vector<uint32_t> b(sol.begin() + half, sol.end());
        split_[idx] = {uint32_t(F2->from_coeffs(a).index()), uint32_t(F2->from_coeffs(b).index())};
    }
    split_built_ = true;
}

std::pair<FieldElem, FieldElem> FieldTower::split_q4_over_q2(const FieldElem& x) {
    if (member_m(x.ctx()) != 4) throw UsageError("split_q4_over_q2 requires a GF(q^4) element");
    if (!split_built_) build_split_tables();
    auto [a, b] = split_[x.index()];
    auto F2 = field(2);
    return {FieldElem(F2.get(), a), FieldElem(F2.get(), b)};
}

// ---------------------------------------------------------------------------
// UniPoly

int64_t UniPoly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) return int64_t(i);
    return -1;
}

FieldElem UniPoly::eval(const FieldElem& x) const {
    FieldElem acc = ctx->zero();
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<FieldElem> univariate_roots(const UniPoly& f) {
    if (f.is_zero()) throw UsageError("univariate_roots: zero polynomial");
    if (f.ctx->order() > kFieldOrderCap) throw CapExceeded("root scan over this field exceeds the cap");
    std::vector<FieldElem> roots;
    for (uint64_t idx = 0; idx < f.ctx->order(); ++idx) {
        FieldElem x = f.ctx->element(idx);
        if (f.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

}  // namespace hermcurve
