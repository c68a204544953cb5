#include "gf2trace/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gf2trace {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

void BitPoly::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly BitPoly::monomial(std::size_t degree) {
    BitPoly p;
    p.words_.assign(degree / kWordBits + 1, 0);
    p.words_.back() = std::uint64_t{1} << (degree % kWordBits);
    return p;
}

BitPoly BitPoly::from_words(std::vector<std::uint64_t> words) {
    BitPoly p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

BitPoly BitPoly::from_hex(std::string_view s) {
    if (s.substr(0, 2) == "0x" || s.substr(0, 2) == "0X") s.remove_prefix(2);
    if (s.empty()) throw std::invalid_argument("BitPoly::from_hex: empty string");
    BitPoly p;
    p.words_.assign(word_count_for(s.size() * 4), 0);
    std::size_t nibble = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it, ++nibble) {
        char c = *it;
        std::uint64_t v;
        if (c >= '0' && c <= '9')
            v = static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<std::uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v = static_cast<std::uint64_t>(c - 'A' + 10);
        else
            throw std::invalid_argument("BitPoly::from_hex: bad digit");
        p.words_[nibble / 16] |= v << (4 * (nibble % 16));
    }
    p.normalize();
    return p;
}

std::optional<std::size_t> BitPoly::degree() const {
    if (words_.empty()) return std::nullopt;
    std::size_t top = words_.size() - 1;
    return top * kWordBits + (kWordBits - 1 - std::countl_zero(words_[top]));
}

bool BitPoly::bit(std::size_t i) const {
    std::size_t w = i / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1;
}

void BitPoly::set_bit(std::size_t i, bool value) {
    std::size_t w = i / kWordBits;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    if (value)
        words_[w] |= std::uint64_t{1} << (i % kWordBits);
    else
        words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
    normalize();
}

std::vector<std::uint64_t> BitPoly::padded_words(std::size_t word_count) const {
    std::vector<std::uint64_t> out(words_.begin(),
                                   words_.begin() + std::min(words_.size(), word_count));
    out.resize(word_count, 0);
    return out;
}

std::string BitPoly::to_hex() const {
    if (words_.empty()) return "0x0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t wi = words_.size(); wi-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            unsigned v = (words_[wi] >> (4 * nib)) & 0xf;
            if (s.empty() && v == 0) continue;
            s.push_back(digits[v]);
        }
    }
    return "0x" + s;
}

BitPoly BitPoly::operator+(const BitPoly& other) const {
    BitPoly r = *this;
    r += other;
    return r;
}

BitPoly& BitPoly::operator+=(const BitPoly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    normalize();
    return *this;
}

BitPoly BitPoly::operator<<(std::size_t shift) const {
    if (is_zero()) return {};
    std::size_t word_shift = shift / kWordBits;
    std::size_t bit_shift = shift % kWordBits;
    BitPoly r;
    r.words_.assign(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0) r.words_[i + word_shift + 1] ^= words_[i] >> (kWordBits - bit_shift);
    }
    r.normalize();
    return r;
}

BitPoly BitPoly::operator*(const BitPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    BitPoly acc;
    acc.words_.assign(words_.size() + other.words_.size(), 0);
    for (std::size_t wi = 0; wi < other.words_.size(); ++wi) {
        std::uint64_t w = other.words_[wi];
        while (w != 0) {
            unsigned b = std::countr_zero(w);
            w &= w - 1;
            BitPoly shifted = *this << (wi * kWordBits + b);
            acc += shifted;
        }
    }
    acc.normalize();
    return acc;
}

std::pair<BitPoly, BitPoly> BitPoly::divmod(const BitPoly& p, const BitPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("BitPoly::divmod: division by zero polynomial");
    BitPoly rem = p;
    BitPoly quot;
    std::size_t dq = *q.degree();
    while (!rem.is_zero() && *rem.degree() >= dq) {
        std::size_t shift = *rem.degree() - dq;
        quot.set_bit(shift, true);
        rem += q << shift;
    }
    return {quot, rem};
}

BitPoly BitPoly::operator%(const BitPoly& modulus) const { return divmod(*this, modulus).second; }

BitPoly BitPoly::gcd(BitPoly p, BitPoly q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("BitPoly::gcd(0, 0)");
    while (!q.is_zero()) {
        BitPoly r = p % q;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

std::strong_ordering BitPoly::operator<=>(const BitPoly& other) const {
    if (words_.size() != other.words_.size()) return words_.size() <=> other.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
}

namespace {

BitPoly mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& mod) { return (a * b) % mod; }

std::vector<std::size_t> prime_factors(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

bool is_irreducible(const BitPoly& p) {
    auto d = p.degree();
    if (!d || *d == 0) throw std::invalid_argument("is_irreducible: constant polynomial");
    std::size_t m = *d;
    if (m == 1) return true;
    if (!p.bit(0)) return false;  // divisible by X

    auto factors = prime_factors(m);
    // one squaring chain; check gcd condition at m/r, equality at m
    BitPoly h = BitPoly::x() % p;
    for (std::size_t j = 1; j <= m; ++j) {
        h = mulmod(h, h, p);
        for (std::size_t r : factors) {
            if (j == m / r) {
                BitPoly g = BitPoly::gcd(h + BitPoly::x(), p);
                if (!g.is_one()) return false;
            }
        }
    }
    return h == BitPoly::x() % p;
}

BitPoly canonical_irreducible(std::size_t m) {
    if (m < 1 || m > 1024) throw std::invalid_argument("canonical_irreducible: degree out of range");
    // degree-m candidates in increasing integer encoding: X^m + (low bits)
    for (std::uint64_t low = 0;; ++low) {
        BitPoly p = BitPoly::monomial(m) + BitPoly::from_words({low});
        if (is_irreducible(p)) return p;
        if (low == UINT64_MAX) throw std::logic_error("canonical_irreducible: scan exhausted");
    }
}

}  // namespace gf2trace
