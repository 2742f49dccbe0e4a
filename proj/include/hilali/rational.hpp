#ifndef HILALI_RATIONAL_HPP
#define HILALI_RATIONAL_HPP

#include <string>

#include "hilali/bigint.hpp"

namespace hilali {

// Exact rational number, always reduced, denominator > 0. All arithmetic in
// the engine goes through this type; there is no floating point anywhere on
// a computation path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    // Parses "a", "-a", "a/b".
    static Rational from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational inverse() const;

    // "a" when the denominator is 1, otherwise "a/b".
    std::string to_string() const;
    // Decimal expansion with `digits` places, exact long division,
    // round-toward-zero. Deterministic across platforms.
    std::string to_decimal_string(int digits = 6) const;

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

}  // namespace hilali

#endif
