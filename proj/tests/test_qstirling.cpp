#include <doctest.h>

#include <qeuler/qstirling.hpp>

#include <vector>

using namespace qeuler;

namespace {

const PolyQT q = PolyQT::variable_q();
const PolyQT one(1);

// Classical signed Stirling numbers of the first kind:
// s(k+1, l) = s(k, l-1) - k s(k, l).
std::vector<std::vector<Rational>> classical_s1(int kmax) {
    std::vector<std::vector<Rational>> s(kmax + 1,
                                         std::vector<Rational>(kmax + 1, Rational(0)));
    s[0][0] = Rational(1);
    for (int k = 0; k < kmax; ++k)
        for (int l = 0; l <= k + 1; ++l) {
            Rational v = l > 0 ? s[k][l - 1] : Rational(0);
            s[k + 1][l] = v - Rational(k) * s[k][l];
        }
    return s;
}

// Classical Stirling numbers of the second kind:
// S(n+1, k) = k S(n, k) + S(n, k-1).
std::vector<std::vector<Rational>> classical_s2(int nmax) {
    std::vector<std::vector<Rational>> s(nmax + 1,
                                         std::vector<Rational>(nmax + 1, Rational(0)));
    s[0][0] = Rational(1);
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            Rational v = k > 0 ? s[n][k - 1] : Rational(0);
            s[n + 1][k] = Rational(k) * s[n][k] + v;
        }
    return s;
}

} // namespace

TEST_CASE("first-kind rows from the falling-factorial product") {
    auto r0 = s1_row(0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0] == one);

    auto r2 = s1_row(2);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].is_zero());
    CHECK(r2[1] == PolyQT(-1));
    CHECK(r2[2] == one);

    auto r3 = s1_row(3);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0].is_zero());
    CHECK(r3[1] == one + q);
    CHECK(r3[2] == -(PolyQT(2) + q));
    CHECK(r3[3] == one);

    for (int k = 1; k <= 10; ++k) {
        auto row = s1_row(k);
        CHECK(row[k] == one);    // monic
        CHECK(row[0].is_zero()); // the y - [0]_q = y factor
    }
    CHECK_THROWS_AS(s1_row(-1), RangeError);
}

TEST_CASE("second-kind rows solve the change of basis") {
    auto r0 = s2_row(0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0] == one);

    auto r1 = s2_row(1);
    CHECK(r1[0].is_zero());
    CHECK(r1[1] == one);

    auto r2 = s2_row(2);
    CHECK(r2[0].is_zero());
    CHECK(r2[1] == one);
    CHECK(r2[2] == one);

    auto r3 = s2_row(3);
    CHECK(r3[1] == one);
    CHECK(r3[2] == PolyQT(2) + q);
    CHECK(r3[3] == one);

    for (int n = 0; n <= 10; ++n) CHECK(s2_row(n)[n] == one);
    CHECK_THROWS_AS(s2_row(-1), RangeError);
}

TEST_CASE("the two families are mutually inverse matrices") {
    const int N = 12;
    std::vector<std::vector<PolyQT>> m1(N + 1, std::vector<PolyQT>(N + 1, PolyQT(0)));
    std::vector<std::vector<PolyQT>> m2 = m1;
    for (int k = 0; k <= N; ++k) {
        auto r1 = s1_row(k);
        auto r2 = s2_row(k);
        for (int l = 0; l <= k; ++l) {
            m1[k][l] = r1[l];
            m2[k][l] = r2[l];
        }
    }
    for (int n = 0; n <= N; ++n)
        for (int l = 0; l <= N; ++l) {
            PolyQT a, b;
            for (int k = l; k <= n; ++k) {
                a += m2[n][k] * m1[k][l]; // enforced by the solve
                b += m1[n][k] * m2[k][l]; // the genuinely independent direction
            }
            PolyQT expect(n == l ? 1 : 0);
            CHECK(a == expect);
            CHECK(b == expect);
        }
}

TEST_CASE("classical limits at q = 1") {
    auto s1c = classical_s1(10);
    auto s2c = classical_s2(10);
    for (int n = 0; n <= 10; ++n) {
        auto r1 = s1_row(n);
        auto r2 = s2_row(n);
        for (int l = 0; l <= n; ++l) {
            CHECK(r1[l].eval_q(Rational(1)) == s1c[n][l]);
            CHECK(r2[l].eval_q(Rational(1)) == s2c[n][l]);
        }
    }
}

TEST_CASE("capital-S first kind: product coefficients") {
    auto r0 = S1_row(0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0] == one);

    auto r1 = S1_row(1);
    CHECK(r1[0] == one);
    CHECK(r1[1] == one);

    auto r2 = S1_row(2);
    CHECK(r2[0] == one);
    CHECK(r2[1] == PolyQT(2) + q);
    CHECK(r2[2] == one + q);

    // Empty-product convention for the index-shifted sums.
    auto rm = S1_row(-1);
    REQUIRE(rm.size() == 1);
    CHECK(rm[0] == one);
    CHECK_THROWS_AS(S1_row(-2), RangeError);

    // At q = 1 the row is the elementary symmetric polynomials of 1..n.
    for (int n = 0; n <= 10; ++n) {
        std::vector<Rational> e(n + 1, Rational(0));
        e[0] = Rational(1);
        for (int k = 1; k <= n; ++k)
            for (int j = k; j >= 1; --j) e[j] += Rational(k) * e[j - 1];
        auto row = S1_row(n);
        for (int k = 0; k <= n; ++k) CHECK(row[k].eval_q(Rational(1)) == e[k]);
    }
}

TEST_CASE("capital-S second kind: series inversion") {
    auto c1 = S2_coeffs(1, 2);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == one);
    CHECK(c1[1] == PolyQT(-1));
    CHECK(c1[2] == one);

    auto c2 = S2_coeffs(2, 2);
    CHECK(c2[0] == one);
    CHECK(c2[1] == -(PolyQT(2) + q));
    CHECK(c2[2] == q * q + Rational(3) * q + Rational(3) * one);

    auto c0 = S2_coeffs(0, 3);
    CHECK(c0[0] == one);
    CHECK(c0[1].is_zero());
    CHECK(c0[2].is_zero());
    CHECK(c0[3].is_zero());

    // Convolving the product row with the series gives exactly 1.
    for (int n = 0; n <= 10; ++n) {
        auto a = S1_row(n);
        auto b = S2_coeffs(n, 10);
        for (int j = 0; j <= 10; ++j) {
            PolyQT acc;
            for (int i = 0; i <= j && i <= n; ++i) acc += a[i] * b[j - i];
            CHECK(acc == PolyQT(j == 0 ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(S2_coeffs(-1, 2), RangeError);
    CHECK_THROWS_AS(S2_coeffs(2, -1), RangeError);
}

TEST_CASE("product displays linking the families") {
    for (int n = 1; n <= 6; ++n) {
        St2ProductCheck c = st2_product_check(n);
        CHECK(c.st1_ok);
        CHECK(c.st2_ok);
    }
    CHECK_THROWS_AS(st2_product_check(0), RangeError);
}

TEST_CASE("rows come back identical from the cache") {
    CHECK(s1_row(7) == s1_row(7));
    CHECK(s2_row(7) == s2_row(7));
    CHECK(S1_row(7) == S1_row(7));
}
