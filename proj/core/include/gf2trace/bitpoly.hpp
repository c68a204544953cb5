#ifndef GF2TRACE_BITPOLY_HPP
#define GF2TRACE_BITPOLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2trace {

/// Polynomial over GF(2), bit i = coefficient of X^i, little-endian words.
/// Always stored normalized (no trailing zero words), so equality is
/// word-wise equality.
class BitPoly {
  public:
    BitPoly() = default;  // zero polynomial

    static BitPoly zero() { return BitPoly{}; }
    static BitPoly one() { return monomial(0); }
    static BitPoly x() { return monomial(1); }
    static BitPoly monomial(std::size_t degree);
    static BitPoly from_words(std::vector<std::uint64_t> words);
    static BitPoly from_hex(std::string_view s);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    // nullopt for the zero polynomial
    std::optional<std::size_t> degree() const;

    bool bit(std::size_t i) const;
    void set_bit(std::size_t i, bool value);

    // coefficient words, padded/truncated to word_count entries
    std::vector<std::uint64_t> padded_words(std::size_t word_count) const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_hex() const;

    BitPoly operator+(const BitPoly& other) const;
    BitPoly& operator+=(const BitPoly& other);
    BitPoly operator*(const BitPoly& other) const;  // carry-less schoolbook
    BitPoly operator<<(std::size_t shift) const;
    BitPoly operator%(const BitPoly& modulus) const;

    // (quotient, remainder), deg rem < deg divisor; throws on zero divisor
    static std::pair<BitPoly, BitPoly> divmod(const BitPoly& p, const BitPoly& q);
    static BitPoly gcd(BitPoly p, BitPoly q);

    friend bool operator==(const BitPoly&, const BitPoly&) = default;
    // order by integer encoding
    std::strong_ordering operator<=>(const BitPoly& other) const;

  private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

/// Rabin irreducibility criterion over GF(2). Throws for constant input.
bool is_irreducible(const BitPoly& p);

/// Degree-m irreducible with the smallest integer encoding; 1 <= m <= 1024.
BitPoly canonical_irreducible(std::size_t m);

}  // namespace gf2trace

#endif
