#ifndef GF2TRACE_FIELD_HPP
#define GF2TRACE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gf2trace/bitpoly.hpp"

namespace gf2trace::field {

/// Ambient field GF(2^m), fixed by an irreducible modulus of degree m.
/// Immutable after construction; shareable across threads.
class FieldCtx {
  public:
    std::size_t m() const { return m_; }
    const BitPoly& modulus() const { return modulus_; }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

  private:
    FieldCtx(std::size_t m, BitPoly modulus) : m_(m), modulus_(std::move(modulus)) {}
    friend std::shared_ptr<const FieldCtx> make_ctx(std::size_t, std::optional<BitPoly>);
    friend std::vector<class Elt> subfield_basis(const std::shared_ptr<const FieldCtx>&, unsigned);

    std::size_t m_;
    BitPoly modulus_;

    mutable std::mutex cache_mu_;
    mutable std::map<unsigned, std::vector<BitPoly>> basis_cache_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Validates the modulus (irreducible, degree m); canonical modulus when omitted.
FieldCtxPtr make_ctx(std::size_t m, std::optional<BitPoly> modulus = std::nullopt);

inline bool same_field(const FieldCtx& a, const FieldCtx& b) {
    return &a == &b || (a.m() == b.m() && a.modulus() == b.modulus());
}

/// Element of GF(2^m): coefficient bits in the polynomial basis of its context.
class Elt {
  public:
    Elt() = default;  // detached; only assignable
    Elt(FieldCtxPtr ctx, BitPoly value);

    static Elt zero(FieldCtxPtr ctx) { return Elt(std::move(ctx), BitPoly::zero()); }
    static Elt one(FieldCtxPtr ctx) { return Elt(std::move(ctx), BitPoly::one()); }
    static Elt monomial(FieldCtxPtr ctx, std::size_t degree);
    static Elt from_hex(FieldCtxPtr ctx, std::string_view hex);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const BitPoly& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }
    std::string to_hex() const { return v_.to_hex(); }
    std::vector<std::uint64_t> coeff_words() const;  // padded to ceil(m/64)

    Elt operator+(const Elt& other) const;
    Elt operator*(const Elt& other) const;
    Elt inv() const;  // extended Euclid; throws on zero
    Elt pow(std::uint64_t e) const;

    bool operator==(const Elt& other) const;
    // canonical order by coefficient bits (same context assumed)
    std::strong_ordering operator<=>(const Elt& other) const { return v_ <=> other.v_; }

  private:
    FieldCtxPtr ctx_;
    BitPoly v_;
};

/// x^(2^j), j reduced mod m, by repeated squaring.
Elt frob(const Elt& x, std::size_t j);

/// Partial trace sum_{i=0}^{k/l-1} x^(2^(l*i)); requires l | k.
Elt tmap(const Elt& x, unsigned l, unsigned k);

/// Frobenius fixed-point test for GF(2^n); requires n | m.
bool in_subfield(const Elt& x, unsigned n);

/// Relative trace onto GF(2^n): tmap(x, n, m); requires n | m.
Elt rel_trace(const Elt& x, unsigned n);

/// Deterministic GF(2)-basis of GF(2^n) inside the context, 1 first.
std::vector<Elt> subfield_basis(const FieldCtxPtr& ctx, unsigned n);

/// Seeded pseudorandom element of GF(2^n).
Elt sample_subfield(const FieldCtxPtr& ctx, unsigned n, std::uint64_t seed);

/// All 2^n elements of GF(2^n), canonically sorted; requires n <= 20.
std::vector<Elt> enumerate_subfield(const FieldCtxPtr& ctx, unsigned n);

/// xi in mu_{2^M+1} \ {1}: the choice-th s in GF(2^{2M}) \ GF(2^M) (deterministic
/// scan), mapped through s -> s^(2^M - 1). Requires 2M | m.
Elt mu_xi(const FieldCtxPtr& ctx, unsigned M, unsigned choice);

/// Shared context of degree 2*lcm(n,k) with the canonical modulus (cached).
FieldCtxPtr ambient_ctx(unsigned n, unsigned k);

unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

}  // namespace gf2trace::field

#endif
