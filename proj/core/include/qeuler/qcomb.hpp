#pragma once

#include <qeuler/ratfn.hpp>

#include <vector>

namespace qeuler {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.  RangeError for n < 0.
PolyQT q_int(int n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.  RangeError for n < 0.
PolyQT q_factorial(int n);

// Gaussian binomial coefficient: [n]_q! / ([k]_q! [n-k]_q!) computed by exact
// polynomial division for 0 <= k <= n, and 0 for k outside that range.
// InternalError if the division ever leaves a remainder (a kernel bug).
PolyQT gauss_binomial(int n, int k);

// Binomial coefficient in the product form a(a-1)...(a-b+1)/b!, defined for
// every integer upper index: binom_general(-1, 0) = 1, binom_general(m-1, m)
// = 0 for m >= 1, binom_general(-1, m) = (-1)^m.  RangeError for b < 0.
BigInt binom_general(const BigInt& a, int b);

// Sum of q^(0*l_0 + 1*l_1 + ... + k*l_k) over all ordered (k+1)-tuples of
// nonnegative integers with l_0 + ... + l_k = w; equals the Gaussian binomial
// with upper index k + w and lower index k.
PolyQT composition_sum(int k, int w);

// (a;q)_r = (1-a)(1-aq)...(1-aq^(r-1)).
RatFn pochhammer_value(const RatFn& a, int r);
// (a;1/q)_r = (1-a)(1-a/q)...(1-a/q^(r-1)).
RatFn pochhammer_value_qinv(const RatFn& a, int r);

// Both classical expansions of the q-shifted factorial (t;q)_n, checked
// against each other: the signed q-binomial sum for the product itself and
// the q-binomial series for its reciprocal (verified as a series inverse
// through t-order `order`).
struct PochhammerCheck {
    PolyQT product;                        // (t;q)_n multiplied out
    PolyQT signed_sum;                     // sum_i C(n,i)_q q^C(i,2) (-1)^i t^i
    std::vector<PolyQT> reciprocal_series; // coefficient of t^i, i = 0..order
    bool sum_matches = false;
    bool reciprocal_matches = false;
};
PochhammerCheck q_pochhammer(int n, int order);

// The binomial polynomial C(x,n)_q = [x][x-1]...[x-n+1] / [n]_q! (with
// t = q^x) against its printed expansion in powers of q^((n-i)x).  The
// printed prefactor is off by (1-q)^(2n); both the verbatim form and the
// corrected one are evaluated and the residual ratio is recorded.
struct GaussExpansionCheck {
    RatFn lhs;       // C(x,n)_q
    RatFn printed;   // expansion with the prefactor as printed
    RatFn corrected; // prefactor replaced by (1-q)^(-n)
    RatFn residual;  // printed / lhs
    bool printed_matches = false;
    bool corrected_matches = false;
};
GaussExpansionCheck gauss_expansion_check(int n);

} // namespace qeuler
