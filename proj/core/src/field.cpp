#include "gf2trace/field.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "gf2trace/gf2matrix.hpp"

namespace gf2trace::field {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b != 0) {
        unsigned r = a % b;
        a = b;
        b = r;
    }
    return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

FieldCtxPtr make_ctx(std::size_t m, std::optional<BitPoly> modulus) {
    if (m < 1) throw std::invalid_argument("make_ctx: m must be positive");
    BitPoly mod = modulus ? *modulus : canonical_irreducible(m);
    auto d = mod.degree();
    if (!d || *d != m) throw std::invalid_argument("make_ctx: modulus degree != m");
    if (!is_irreducible(mod)) throw std::invalid_argument("make_ctx: modulus is reducible");
    return std::shared_ptr<const FieldCtx>(new FieldCtx(m, std::move(mod)));
}

Elt::Elt(FieldCtxPtr ctx, BitPoly value) : ctx_(std::move(ctx)), v_(std::move(value)) {
    if (!ctx_) throw std::invalid_argument("Elt: null context");
    auto d = v_.degree();
    if (d && *d >= ctx_->m()) v_ = v_ % ctx_->modulus();
}

Elt Elt::monomial(FieldCtxPtr ctx, std::size_t degree) {
    return Elt(std::move(ctx), BitPoly::monomial(degree));
}

Elt Elt::from_hex(FieldCtxPtr ctx, std::string_view hex) {
    BitPoly v = BitPoly::from_hex(hex);
    auto d = v.degree();
    if (d && *d >= ctx->m()) throw std::invalid_argument("Elt::from_hex: value exceeds field degree");
    return Elt(std::move(ctx), std::move(v));
}

std::vector<std::uint64_t> Elt::coeff_words() const {
    return v_.padded_words((ctx_->m() + 63) / 64);
}

namespace {
void require_same_ctx(const Elt& a, const Elt& b) {
    if (!same_field(*a.ctx(), *b.ctx()))
        throw std::invalid_argument("field: mixed contexts");
}
}  // namespace

Elt Elt::operator+(const Elt& other) const {
    require_same_ctx(*this, other);
    return Elt(ctx_, v_ + other.v_);
}

Elt Elt::operator*(const Elt& other) const {
    require_same_ctx(*this, other);
    return Elt(ctx_, (v_ * other.v_) % ctx_->modulus());
}

Elt Elt::inv() const {
    if (is_zero()) throw std::invalid_argument("Elt::inv: zero element");
    // extended Euclid on (v, modulus); gcd is 1 since modulus is irreducible
    BitPoly r0 = ctx_->modulus(), r1 = v_;
    BitPoly t0 = BitPoly::zero(), t1 = BitPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = BitPoly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        BitPoly t = t0 + q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    return Elt(ctx_, t0 % ctx_->modulus());
}

Elt Elt::pow(std::uint64_t e) const {
    Elt acc = Elt::one(ctx_);
    Elt base = *this;
    while (e != 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Elt::operator==(const Elt& other) const {
    require_same_ctx(*this, other);
    return v_ == other.v_;
}

Elt frob(const Elt& x, std::size_t j) {
    j %= x.ctx()->m();
    Elt r = x;
    for (std::size_t i = 0; i < j; ++i) r = r * r;
    return r;
}

Elt tmap(const Elt& x, unsigned l, unsigned k) {
    if (l == 0 || k % l != 0) throw std::invalid_argument("tmap: l must divide k");
    Elt term = x;
    Elt acc = x;
    for (unsigned i = 1; i < k / l; ++i) {
        term = frob(term, l);
        acc = acc + term;
    }
    return acc;
}

bool in_subfield(const Elt& x, unsigned n) {
    if (n == 0 || x.ctx()->m() % n != 0) throw std::invalid_argument("in_subfield: n must divide m");
    return frob(x, n) == x;
}

Elt rel_trace(const Elt& x, unsigned n) {
    if (n == 0 || x.ctx()->m() % n != 0) throw std::invalid_argument("rel_trace: n must divide m");
    return tmap(x, n, static_cast<unsigned>(x.ctx()->m()));
}

std::vector<Elt> subfield_basis(const FieldCtxPtr& ctx, unsigned n) {
    if (n == 0 || ctx->m() % n != 0)
        throw std::invalid_argument("subfield_basis: n must divide m");
    {
        std::lock_guard lk(ctx->cache_mu_);
        auto it = ctx->basis_cache_.find(n);
        if (it != ctx->basis_cache_.end()) {
            std::vector<Elt> out;
            out.reserve(n);
            for (const auto& p : it->second) out.emplace_back(ctx, p);
            return out;
        }
    }

    std::size_t m = ctx->m();
    BitRowBasis indep(m);
    std::vector<Elt> basis;
    for (std::size_t j = 0; j < m && basis.size() < n; ++j) {
        Elt img = rel_trace(Elt::monomial(ctx, j), n);
        if (indep.insert(img.coeff_words())) basis.push_back(std::move(img));
    }
    if (basis.size() != n)
        throw std::logic_error("subfield_basis: trace images did not reach full rank");

    // normalize so that 1 is the first basis element
    Elt one = Elt::one(ctx);
    if (!(basis[0] == one)) {
        auto combo = indep.combination(one.coeff_words());
        if (!combo) throw std::logic_error("subfield_basis: 1 not in subfield span");
        std::size_t i = 0;
        while (!vec_bit(*combo, i)) ++i;
        basis[i] = one;
        std::swap(basis[0], basis[i]);
    }

    {
        std::lock_guard lk(ctx->cache_mu_);
        auto& slot = ctx->basis_cache_[n];
        if (slot.empty()) {
            slot.reserve(n);
            for (const auto& e : basis) slot.push_back(e.value());
        }
    }
    return basis;
}

Elt sample_subfield(const FieldCtxPtr& ctx, unsigned n, std::uint64_t seed) {
    auto basis = subfield_basis(ctx, n);
    std::mt19937_64 rng(seed);
    std::uint64_t bits = rng();
    Elt acc = Elt::zero(ctx);
    for (unsigned i = 0; i < n; ++i) {
        if (i % 64 == 0 && i != 0) bits = rng();
        if ((bits >> (i % 64)) & 1) acc = acc + basis[i];
    }
    return acc;
}

std::vector<Elt> enumerate_subfield(const FieldCtxPtr& ctx, unsigned n) {
    if (n > 20) throw std::invalid_argument("enumerate_subfield: n > 20");
    auto basis = subfield_basis(ctx, n);
    std::vector<Elt> out;
    out.reserve(std::size_t{1} << n);
    Elt cur = Elt::zero(ctx);
    out.push_back(cur);
    // Gray-code walk: one basis add per step
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << n); ++idx) {
        unsigned flip = 0;
        std::uint64_t v = idx;
        while (!(v & 1)) {
            v >>= 1;
            ++flip;
        }
        cur = cur + basis[flip];
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Elt mu_xi(const FieldCtxPtr& ctx, unsigned M, unsigned choice) {
    if (M == 0 || ctx->m() % (2 * M) != 0)
        throw std::invalid_argument("mu_xi: 2M must divide m");
    auto basis = subfield_basis(ctx, 2 * M);

    // Deterministic scan of GF(2^{2M}) \ GF(2^M): basis elements first, then
    // multi-term combinations. The choice index wraps when the scan range
    // holds fewer candidates (e.g. M = 1 has only two).
    std::vector<Elt> candidates;
    auto done = [&] { return candidates.size() > choice; };
    for (unsigned i = 0; i < 2 * M && !done(); ++i) {
        if (!in_subfield(basis[i], M)) candidates.push_back(basis[i]);
    }
    if (!done()) {
        unsigned span_bits = std::min(2 * M, 64u);
        std::uint64_t limit =
            (2 * M <= 16) ? (std::uint64_t{1} << (2 * M)) : std::uint64_t{4096};
        for (std::uint64_t idx = 3; idx < limit && !done(); ++idx) {
            if (std::popcount(idx) < 2) continue;
            Elt s = Elt::zero(ctx);
            for (unsigned i = 0; i < span_bits; ++i) {
                if ((idx >> i) & 1) s = s + basis[i];
            }
            if (!in_subfield(s, M)) candidates.push_back(std::move(s));
        }
    }
    if (candidates.empty()) throw std::logic_error("mu_xi: scan found no candidate");
    const Elt& s = candidates[choice % candidates.size()];
    // s^(2^M - 1) = frob(s, M) / s
    return frob(s, M) * s.inv();
}

FieldCtxPtr ambient_ctx(unsigned n, unsigned k) {
    if (n == 0 || k == 0) throw std::invalid_argument("ambient_ctx: n, k must be positive");
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldCtxPtr> cache;
    unsigned m = 2 * lcm_u(n, k);
    std::lock_guard lk(mu);
    auto key = std::minmax(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = make_ctx(m);
    cache.emplace(key, ctx);
    return ctx;
}

}  // namespace gf2trace::field
