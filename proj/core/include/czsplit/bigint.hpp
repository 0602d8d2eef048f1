#ifndef CZSPLIT_BIGINT_HPP
#define CZSPLIT_BIGINT_HPP

#include <cstdint>
#include <vector>

#include "czsplit/errors.hpp"

namespace czsplit {

/// Minimal unsigned big integer, just wide enough to hold splitting
/// exponents (p^(s*m) - 1) / q, which overflow 64 bits as soon as the
/// equal-degree stage works on factors of moderate degree.
class BigUint {
public:
    BigUint() = default;

    static BigUint from_u64(std::uint64_t v) {
        BigUint r;
        if (v != 0) r.limbs_.push_back(v);
        return r;
    }

    /// base^exp for small base.
    static BigUint power(std::uint64_t base, unsigned exp) {
        BigUint r = from_u64(1);
        for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    void mul_small(std::uint64_t f) {
        if (f == 0) {
            limbs_.clear();
            return;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = (unsigned __int128)limb * f + carry;
            limb = (std::uint64_t)cur;
            carry = cur >> 64;
        }
        while (carry) {
            limbs_.push_back((std::uint64_t)carry);
            carry >>= 64;
        }
    }

    /// Subtracts v; requires *this >= v.
    void sub_small(std::uint64_t v) {
        std::size_t i = 0;
        while (v) {
            if (i >= limbs_.size()) throw InternalError("BigUint underflow");
            if (limbs_[i] >= v) {
                limbs_[i] -= v;
                v = 0;
            } else {
                limbs_[i] -= v; // wraps
                v = 1;
            }
            ++i;
        }
        trim();
    }

    /// Divides by small d, returns the remainder.
    std::uint64_t div_small(std::uint64_t d) {
        if (d == 0) throw Error("BigUint division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = (std::uint64_t)(cur / d);
            rem = cur % d;
        }
        trim();
        return (std::uint64_t)rem;
    }

    unsigned bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint64_t top = limbs_.back();
        unsigned bits = 0;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return (unsigned)(64 * (limbs_.size() - 1)) + bits;
    }

    bool bit(unsigned i) const {
        std::size_t limb = i / 64;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 64)) & 1u;
    }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_; // little-endian
};

/// (base^exp - 1) / q, the equal-degree splitting exponent. q must divide
/// base^exp - 1 exactly.
inline BigUint splitting_exponent(std::uint64_t base, unsigned exp, std::uint64_t q) {
    BigUint e = BigUint::power(base, exp);
    e.sub_small(1);
    if (e.div_small(q) != 0) throw Error("q does not divide p^m - 1");
    return e;
}

} // namespace czsplit

#endif
