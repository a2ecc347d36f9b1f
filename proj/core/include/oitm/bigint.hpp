#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oitm {

// Signed arbitrary-precision integer, just big enough for exact 8x8
// determinants of 10^18-scaled kernels. Sign-magnitude, base 2^32 limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }

    bool operator==(const BigInt& o) const;
    bool operator<(const BigInt& o) const;

    // Quotient of |this| / 10^e with the sign of this: truncation toward zero.
    BigInt shift_down_pow10(int e) const;
    // Floor division by 10^e (toward minus infinity).
    BigInt floor_div_pow10(int e) const;

    bool fits_int64() const;
    std::int64_t to_int64() const;
    std::string to_string() const;

private:
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
    // divides magnitude by d in place, returns remainder
    std::uint32_t divmod_small(std::uint32_t d);
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

}  // namespace oitm
