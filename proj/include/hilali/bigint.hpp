#ifndef HILALI_BIGINT_HPP
#define HILALI_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hilali {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
// (little endian). Sized for exact linear algebra at desk scale; numbers
// here are typically a handful of limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated toward zero, like C integer division.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    // Quotient and remainder with |r| < |d|, r has the sign of the dividend.
    static void divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r);
    // Division that must be exact; throws std::domain_error otherwise.
    BigInt divide_exact(const BigInt& d) const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned long exp);

    BigInt abs() const;
    std::string to_string() const;

    // Fits in long long? (used for small fast paths and CSV decimals)
    bool fits_longlong() const;
    long long to_longlong() const;
    double to_double() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // empty means zero

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
    static void divmod_mag(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r);
};

}  // namespace hilali

#endif
