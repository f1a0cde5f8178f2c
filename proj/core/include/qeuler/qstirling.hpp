#pragma once

#include <qeuler/qcomb.hpp>

#include <vector>

namespace qeuler {

// Connection coefficients between the power basis and the falling-factorial
// basis in the q-integers, plus the product-generated pair S1/S2.  All rows
// are polynomial in q; entry i of a row is the coefficient of index i.

// Coefficients of the monic product (y - [0]_q)(y - [1]_q)...(y - [k-1]_q):
// row k has k+1 entries, entry l multiplying y^l.  Entry k is 1; entry 0
// vanishes for k >= 1.
std::vector<PolyQT> s1_row(int k);

// Unique coefficients writing y^n in the falling-factorial basis:
// y^n = sum_k s2(n,k) * (y-[0]_q)...(y-[k-1]_q); n+1 entries, entry n is 1.
std::vector<PolyQT> s2_row(int n);

// Coefficients of prod_{k=1..n} (1 + [k]_q z) in z: n+1 entries.
// n = -1 is accepted as the empty product (single entry 1), the convention
// the index-shifted sums below rely on.
std::vector<PolyQT> S1_row(int n);

// Power-series coefficients of prod_{k=1..n} (1 + [k]_q z)^(-1) through
// z^order, by series inversion: order+1 entries.
std::vector<PolyQT> S2_coeffs(int n, int order);

// The two product displays tying the families together, verified exactly:
//   st1: q^C(m,2) C(r,m)_q [m]_q! = prod_{k<m} ([r]_q - [k]_q) for all m <= r = n,
//   st2: prod_{k<n} (z - [k]_q) = sum_{k<n} S1(n-1,k) (-1)^k z^(n-k).
struct St2ProductCheck {
    bool st1_ok = false;
    bool st2_ok = false;
};
St2ProductCheck st2_product_check(int n);

} // namespace qeuler
