#pragma once

#include <qeuler/poly.hpp>

#include <map>
#include <string>

namespace qeuler {

// Rational function in (q, t), kept in the canonical form
//   * denominator nonzero and never the zero polynomial,
//   * poly_gcd(num, den) == 1,
//   * num and den have integer coefficients whose contents are coprime,
//   * den's leading coefficient (graded lex, q senior) is positive,
//   * zero is 0/1.
// Structural equality of normalized (num, den) pairs is semantic equality;
// equal_value() double-checks by cross-multiplication without any gcd.
//
// The t variable encodes q^x: substituting t -> q^m recovers integer x = m.
// Negative powers of q or t appear only through denominators.
class RatFn {
public:
    RatFn() : num_(), den_(1) {}
    RatFn(long c) : num_(c), den_(1) {}
    RatFn(const Rational& c) : num_(c), den_(1) {}
    RatFn(const PolyQT& p) : num_(p), den_(1) {}
    RatFn(PolyQT num, PolyQT den);

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == PolyQT(1) && den_ == PolyQT(1); }
    bool is_polynomial() const { return den_ == PolyQT(1); }
    bool is_t_free() const { return num_.is_t_free() && den_.is_t_free(); }

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    // Cross-multiplication equality, no gcd involved.
    bool equal_value(const RatFn& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }

    RatFn inverse() const;
    // Negative exponents go through inverse() (DivisionByZero on zero).
    RatFn pow(long e) const;

    Rational eval(const Rational& q0, const Rational& t0) const;
    // Evaluation of a t-free function (InternalError if t occurs).
    Rational eval_q(const Rational& q0) const;

    // t -> q^x, x >= 0.  ZeroDenominator if the denominator collapses.
    RatFn subst_t_qpow(int x) const;
    // q -> 1/q.
    RatFn subst_q_inv() const;
    // t -> q/t (the x -> 1-x symmetry of the Bernstein basis).
    RatFn subst_t_qovert() const;

    // Partial derivative with respect to t (quotient rule, re-normalized).
    RatFn derivative_t() const;

    // q -> 1 limit of a t-free function.  Common (q-1) powers are already
    // cancelled by normalization, so this evaluates; PoleAtOne if the
    // denominator still vanishes at 1.
    Rational limit_q1() const;

    std::string to_string() const;

    // [x]_q = (1-t)/(1-q).
    static RatFn x_bracket();
    // [1-x]_q = (t-q)/(t(1-q)).
    static RatFn one_minus_x_bracket();
    // q^a for any integer a (negative powers become denominators).
    static RatFn q_pow(long a);
    // t^a likewise.
    static RatFn t_pow(long a);

private:
    PolyQT num_;
    PolyQT den_;

    void normalize();
};

inline bool rf_equal(const RatFn& a, const RatFn& b) { return a.equal_value(b); }

inline Rational rf_limit_q1(const RatFn& a) { return a.limit_q1(); }

// t-Laurent expansion of a function whose denominator is t^e * D(q): returns
// the map from t-power j to its t-free rational-function coefficient.
// InternalError if the denominator mixes distinct t-powers.
std::map<int, RatFn> laurent_t(const RatFn& a);

} // namespace qeuler
