#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fields.hpp"

namespace skewcodes {

/// q^k as a decimal string (cardinalities routinely exceed 64 bits).
inline std::string pow_decimal(std::uint64_t base, std::uint64_t exp) {
    std::vector<std::uint32_t> digits{1};  // base 10^9, little endian
    for (std::uint64_t e = 0; e < exp; ++e) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t v = static_cast<std::uint64_t>(d) * base + carry;
            d = static_cast<std::uint32_t>(v % 1000000000ull);
            carry = v / 1000000000ull;
        }
        while (carry) {
            digits.push_back(static_cast<std::uint32_t>(carry % 1000000000ull));
            carry /= 1000000000ull;
        }
    }
    std::string s = std::to_string(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

/// q^k as a uint64 if it fits, otherwise nullopt-style sentinel via bool.
inline bool pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t& out) {
    std::uint64_t r = 1;
    for (std::uint64_t e = 0; e < exp; ++e) {
        if (base != 0 && r > UINT64_MAX / base) return false;
        r *= base;
    }
    out = r;
    return true;
}

/// Injective base-q encoding of an F_q word; used for exact word-set
/// comparisons. Fails loudly when q^len does not fit 64 bits.
inline std::uint64_t encode_word(const std::vector<FqElem>& w) {
    if (w.empty()) return 0;
    std::uint64_t q = w[0].ctx().q();
    std::uint64_t v = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (v > (UINT64_MAX - w[i].value()) / q)
            raise(Errc::OutOfEnvelope, "word too long for 64-bit encoding");
        v = v * q + w[i].value();
    }
    return v;
}

inline int hamming_weight(const std::vector<FqElem>& w) {
    int s = 0;
    for (const auto& c : w) s += c.is_zero() ? 0 : 1;
    return s;
}

}  // namespace skewcodes
