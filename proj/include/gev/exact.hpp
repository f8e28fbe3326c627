#ifndef GEV_EXACT_HPP
#define GEV_EXACT_HPP

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gev {

using uint128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt to_bigint(uint128 v) {
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

inline std::string to_string_u128(uint128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

inline uint128 gcd_u128(uint128 a, uint128 b) {
    while (b) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// 256-bit product of two 128-bit values, for overflow-free cross comparison.
struct U256 {
    std::array<std::uint64_t, 4> w{}; // little-endian limbs
};

inline U256 mul_wide(uint128 a, uint128 b) {
    const std::uint64_t a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
    const std::uint64_t b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
    const uint128 p00 = static_cast<uint128>(a0) * b0;
    const uint128 p01 = static_cast<uint128>(a0) * b1;
    const uint128 p10 = static_cast<uint128>(a1) * b0;
    const uint128 p11 = static_cast<uint128>(a1) * b1;
    U256 r;
    r.w[0] = static_cast<std::uint64_t>(p00);
    const uint128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
    r.w[1] = static_cast<std::uint64_t>(mid);
    const uint128 hi = (mid >> 64) + (p01 >> 64) + (p10 >> 64) + p11;
    r.w[2] = static_cast<std::uint64_t>(hi);
    r.w[3] = static_cast<std::uint64_t>(hi >> 64);
    return r;
}

inline int cmp_u256(const U256& x, const U256& y) {
    for (int i = 3; i >= 0; --i) {
        if (x.w[i] != y.w[i]) return x.w[i] < y.w[i] ? -1 : 1;
    }
    return 0;
}

// Compares a/b with c/d (all positive) without overflow: sign of a*d - c*b.
inline int cmp_ratio(uint128 a, uint128 b, uint128 c, uint128 d) {
    return cmp_u256(mul_wide(a, d), mul_wide(c, b));
}

// Exact product accumulator: 128-bit fast path with overflow detection and
// an arbitrary-precision fallback.
class ExactProduct {
public:
    ExactProduct() = default;

    void multiply(std::uint64_t factor) {
        if (!wide_) {
            uint128 r;
            if (__builtin_mul_overflow(fast_, static_cast<uint128>(factor), &r)) {
                wide_ = true;
                big_ = to_bigint(fast_);
                big_ *= factor;
            } else {
                fast_ = r;
            }
        } else {
            big_ *= factor;
        }
    }

    bool is_wide() const { return wide_; }
    uint128 fast_value() const { return fast_; } // valid only when !is_wide()

    BigInt value() const { return wide_ ? big_ : to_bigint(fast_); }

private:
    bool wide_ = false;
    uint128 fast_ = 1;
    BigInt big_ = 1;
};

// Reduced nonnegative fraction with exact integer parts.
struct Fraction {
    BigInt num{1};
    BigInt den{1};

    static Fraction of(BigInt n, BigInt d) {
        BigInt g = boost::multiprecision::gcd(n, d);
        if (g == 0) g = 1;
        Fraction f;
        f.num = n / g;
        f.den = d / g;
        return f;
    }

    static Fraction of_u128(uint128 n, uint128 d) {
        uint128 g = gcd_u128(n, d);
        if (g == 0) g = 1;
        Fraction f;
        f.num = to_bigint(n / g);
        f.den = to_bigint(d / g);
        return f;
    }

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool less_than(const Fraction& o) const { return num * o.den < o.num * den; }
    bool less_than_one() const { return num < den; }

    std::string str() const { return num.str() + "/" + den.str(); }
};

} // namespace gev

#endif // GEV_EXACT_HPP
