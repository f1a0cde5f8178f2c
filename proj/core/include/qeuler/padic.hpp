#pragma once

#include <qeuler/rational.hpp>

#include <functional>
#include <string>

namespace qeuler {

// p-adic number at capped precision.
//
// A nonzero value is p^val * unit with unit coprime to p, known modulo
// p^prec (prec significant digits, so the absolute precision is val + prec).
// The zero-at-precision value records only the lower bound abs_prec on the
// valuation: unit == 0, prec == 0, val == abs_prec.
//
// Arithmetic tracks precision pessimistically: minimum absolute precision of
// the operands, with the valuation re-counted after additive cancellation.
class PadicNum {
public:
    // Canonicalizes: factors of p are moved from unit into val, and a unit
    // that vanishes at the available precision collapses to zero.
    PadicNum(long p, long val, BigInt unit, int prec);

    static PadicNum zero(long p, long abs_prec);

    long p() const { return p_; }
    // Valuation for a nonzero value; for zero, the abs_prec lower bound.
    long val() const { return val_; }
    const BigInt& unit() const { return unit_; }
    int prec() const { return prec_; }
    long abs_prec() const { return val_ + prec_; }
    bool is_zero() const { return unit_ == 0; }

    PadicNum operator-() const;
    friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
    friend PadicNum operator-(const PadicNum& a, const PadicNum& b);
    friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
    PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
    PadicNum& operator-=(const PadicNum& o) { return *this = *this - o; }
    PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

    // Caps the significant digits (for zero, the valuation bound).
    PadicNum truncated(int new_prec) const;

    // "3^2*11 + O(3^5)", "11 + O(3^4)", "O(3^4)".
    std::string to_string() const;

private:
    long p_;
    long val_;
    BigInt unit_;
    int prec_;

    PadicNum(long p) : p_(p), val_(0), unit_(0), prec_(0) {}
};

// Exponent of p in n (n must be nonzero).
long padic_val(const BigInt& n, long p);
// v_p of a rational: v_p(num) - v_p(den); InternalError on zero.
long padic_val(const Rational& r, long p);

// Exact image of r in Q_p with M significant digits.  Negative valuations
// (p dividing the denominator) are allowed.
PadicNum padic_embed(const Rational& r, long p, int M);

// Valuation of a - b; when the difference vanishes at the joint precision,
// the returned value is the abs_prec lower bound.
long agreement_valuation(const PadicNum& a, const PadicNum& b);

// Integer sequences f(0), f(1), ... with exact rational values.
using RatSeq = std::function<Rational(long)>;

// Alternating partial sum  sum_{x < p^N} f(x) (-1)^x, exact.
// PDenominator if any f(x) has p in its denominator.
Rational fermionic_partial_sum(const RatSeq& f, long p, int N);
PadicNum fermionic_oracle(const RatSeq& f, long p, int N, int M);

// Weighted partial sum  (1+q0)/(1+q0^(p^N)) * sum_{x < p^N} f(x) (-q0)^x.
// BadQ unless v_p(q0 - 1) >= 1 (which keeps the weight a p-adic unit);
// q0 = 1 reduces to the unweighted sum.
Rational fermionic_partial_sum_q(const RatSeq& f, const Rational& q0, long p, int N);
PadicNum fermionic_oracle_q(const RatSeq& f, const Rational& q0, long p, int N, int M);

// Term cap for valuation-driven series summation: QEULER_MAX_TERMS from the
// environment, defaulting to 10000.
long default_max_terms();

// Sums term(0), term(1), ... until val_bound(m) >= M + 2 (two guard digits);
// val_bound must be a nondecreasing, unbounded lower bound on the tail
// valuation.  The result is truncated to M significant digits.
// NoConvergence if the bound has not cleared M + 2 after max_terms terms.
PadicNum series_sum(long p, int M, const std::function<PadicNum(long)>& term,
                    const std::function<long(long)>& val_bound,
                    long max_terms = default_max_terms());

// The alternating-sum shift identity at matched partial-sum levels:
//   sum f(x+n)(-1)^x  vs  (-1)^n sum f(x)(-1)^x + 2 sum_{l<n} (-1)^(n-1-l) f(l),
// whose mismatch is a pure level-N boundary term.
struct ShiftCheck {
    Rational lhs;
    Rational rhs;
    bool exact = false; // equal as rationals, not just p-adically close
    long agreement = 0; // valuation of lhs - rhs at precision M
};
ShiftCheck shift_identity_check(int n_shift, const RatSeq& f, long p, int N, int M);

} // namespace qeuler
