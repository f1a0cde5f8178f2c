#pragma once

#include <qeuler/bigint.hpp>
#include <qeuler/errors.hpp>

#include <compare>
#include <string>

namespace qeuler {

// Exact rational number.
//
// Canonical form invariants, restored after every operation:
//   * denominator > 0,
//   * gcd(|numerator|, denominator) == 1,
//   * zero is stored as 0/1.
// Equality is therefore plain field equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw ZeroDenominator("Rational: zero denominator");
        canonicalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DivisionByZero("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_;
        BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (num_ == 0) throw DivisionByZero("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    // this^e; negative e inverts first (DivisionByZero on zero).
    Rational pow(long e) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "a" when integral, "a/b" otherwise.
    std::string to_string() const;

    // Parses "a" or "a/b" with optional leading minus.  Throws RangeError on
    // malformed input, ZeroDenominator on "a/0".
    static Rational parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = big_gcd(big_abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

} // namespace qeuler
