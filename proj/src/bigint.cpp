#include "hilali/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hilali {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    unsigned long long u = negative_ ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    r.limbs_.resize(x.size() + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        unsigned long long s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    r.limbs_[x.size()] = static_cast<std::uint32_t>(carry);
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    long long borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        long long s = static_cast<long long>(a.limbs_[i]) - borrow -
                      (i < b.limbs_.size() ? static_cast<long long>(b.limbs_[i]) : 0);
        if (s < 0) {
            s += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<std::uint32_t>(s);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) {
        BigInt r = add_mag(*this, o);
        r.negative_ = negative_ && !r.is_zero();
        return r;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
    r.negative_ = (c > 0 ? negative_ : o.negative_) && !r.is_zero();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            unsigned long long cur = r.limbs_[i + j] +
                                     static_cast<unsigned long long>(limbs_[i]) * o.limbs_[j] +
                                     carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            unsigned long long cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

// Schoolbook long division on 32-bit limbs with a 64-bit trial quotient.
void BigInt::divmod_mag(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (cmp_mag(n, d) < 0) {
        r = n;
        r.negative_ = false;
        return;
    }
    if (d.limbs_.size() == 1) {
        unsigned long long dv = d.limbs_[0];
        q.limbs_.assign(n.limbs_.size(), 0);
        unsigned long long rem = 0;
        for (size_t i = n.limbs_.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | n.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / dv);
            rem = cur % dv;
        }
        q.trim();
        if (rem) r.limbs_.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    // General case: binary-shifted divisor subtraction, 32 bits at a time
    // through a running remainder. Adequate for the operand sizes seen here.
    BigInt rem;
    q.limbs_.assign(n.limbs_.size(), 0);
    for (size_t i = n.limbs_.size(); i-- > 0;) {
        // rem = rem * 2^32 + limb
        rem.limbs_.insert(rem.limbs_.begin(), n.limbs_[i]);
        rem.trim();
        if (cmp_mag(rem, d) < 0) continue;
        // binary search the 32-bit digit
        std::uint64_t lo = 1, hi = 0xffffffffULL, digit = 1;
        while (lo <= hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            BigInt t = d * BigInt(static_cast<long long>(mid));
            if (cmp_mag(t, rem) <= 0) {
                digit = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        q.limbs_[i] = static_cast<std::uint32_t>(digit);
        rem = sub_mag(rem, d * BigInt(static_cast<long long>(digit)));
    }
    q.trim();
    rem.trim();
    r = rem;
}

void BigInt::divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
    // outputs may alias inputs
    const BigInt nn = n, dd = d;
    divmod_mag(nn, dd, q, r);
    q.negative_ = (nn.negative_ != dd.negative_) && !q.is_zero();
    r.negative_ = nn.negative_ && !r.is_zero();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::divide_exact(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
    return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod_mag(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    r.negative_ = neg && !r.is_zero();
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string digits;
    BigInt ten(10);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod_mag(t, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
        t = q;
    }
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_longlong() const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? mag <= 0x8000000000000000ULL : mag <= 0x7fffffffffffffffULL;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit long long");
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? static_cast<long long>(0ULL - mag) : static_cast<long long>(mag);
}

double BigInt::to_double() const {
    double v = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return negative_ ? -v : v;
}

}  // namespace hilali
