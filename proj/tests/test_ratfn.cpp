#include <doctest.h>

#include <qeuler/ratfn.hpp>

#include <vector>

using qeuler::PolyQT;
using qeuler::RatFn;
using qeuler::Rational;

namespace {

const PolyQT q = PolyQT::variable_q();
const PolyQT t = PolyQT::variable_t();
const PolyQT one(1);

// Independent value check on a grid of points where every denominator in the
// suite is nonzero.
bool same_function(const RatFn& a, const RatFn& b) {
    const Rational pts[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-3), Rational(5)};
    for (const Rational& q0 : pts)
        for (const Rational& t0 : pts)
            if (a.eval(q0, t0) != b.eval(q0, t0)) return false;
    return true;
}

} // namespace

TEST_CASE("normalization cancels, integerizes, and orients the denominator") {
    // 2(q-1)^3 over 2(1-q)^2(1+q)(1+q^2) reduces to (q-1) over (1+q)(1+q^2).
    PolyQT num = Rational(2) * (q - one).pow(3);
    PolyQT den = Rational(2) * (one - q).pow(2) * (one + q) * (one + q * q);
    RatFn f(num, den);
    CHECK(f.num() == q - one);
    CHECK(f.den() == (one + q) * (one + q * q));
    CHECK(f.to_string() == "(q-1)/((1+q)*(1+q^2))");

    // Rational coefficients move into an integer den with coprime contents.
    RatFn h(Rational(1, 2) * q, Rational(3, 4) * (one + q));
    CHECK(h.num() == Rational(2) * q);
    CHECK(h.den() == Rational(3) * (one + q));

    // Leading-coefficient orientation flips both parts.
    RatFn g(one, one - q);
    CHECK(g.num() == -one);
    CHECK(g.den() == q - one);

    CHECK_THROWS_AS(RatFn(one, PolyQT(0)), qeuler::ZeroDenominator);
}

TEST_CASE("zero and constants") {
    RatFn z;
    CHECK(z.is_zero());
    CHECK(z.den() == one);
    CHECK(RatFn(PolyQT(0), one + q).is_zero());
    CHECK(RatFn(PolyQT(0), one + q).den() == one);
    CHECK(RatFn(1).is_one());
    CHECK(RatFn(Rational(1, 2)).to_string() == "1/2");
    CHECK(RatFn(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(RatFn(5).is_polynomial());
}

TEST_CASE("field arithmetic agrees with pointwise evaluation") {
    std::vector<RatFn> fns = {RatFn(q + t),
                              RatFn(one, one + q),
                              RatFn(t - q, t * (q - one)),
                              RatFn(Rational(3, 7)),
                              RatFn(q * t, one + q * q)};
    for (const auto& a : fns)
        for (const auto& b : fns) {
            CHECK(same_function(a + b, b + a));
            CHECK(same_function(a * b, b * a));
            CHECK(same_function((a + b) - b, a));
            CHECK((a - a).is_zero());
            if (!b.is_zero()) CHECK(same_function((a / b) * b, a));
        }
    CHECK_THROWS_AS(RatFn(1) / RatFn(), qeuler::DivisionByZero);
    CHECK_THROWS_AS(RatFn().inverse(), qeuler::DivisionByZero);
}

TEST_CASE("results of arithmetic are already in canonical form") {
    RatFn a(one, q - one);
    RatFn b(one, (q - one) * (one + q));
    RatFn s = a - b; // q/((q-1)(1+q))
    CHECK(s.num() == q);
    CHECK(s.den() == (q - one) * (one + q));

    RatFn p = RatFn(q - one, one + q) * RatFn(one + q, q * q); // cross-cancel
    CHECK(p.num() == q - one);
    CHECK(p.den() == q * q);

    // Structural equality after normalization, and gcd-free value equality.
    CHECK(RatFn((q - one) * (one + q), (one + q) * (one + q)) == RatFn(q - one, one + q));
    CHECK(RatFn(q - one, one + q).equal_value(RatFn((q - one) * t, (one + q) * t)));
    CHECK(qeuler::rf_equal(a + b, b + a));
}

TEST_CASE("powers reuse the coprime parts") {
    RatFn f(q - one, one + q);
    CHECK(f.pow(2) == RatFn((q - one).pow(2), (one + q).pow(2)));
    CHECK(f.pow(0).is_one());
    CHECK(f.pow(-2) == RatFn((one + q).pow(2), (q - one).pow(2)));
    CHECK_THROWS_AS(RatFn().pow(-1), qeuler::DivisionByZero);
}

TEST_CASE("evaluation and poles") {
    RatFn f(one, q - one);
    CHECK(f.eval(Rational(3), Rational(0)) == Rational(1, 2));
    CHECK_THROWS_AS(f.eval(Rational(1), Rational(0)), qeuler::PoleError);
    CHECK(f.eval_q(Rational(3)) == Rational(1, 2));
    CHECK_THROWS_AS(RatFn(t).eval_q(Rational(2)), qeuler::InternalError);
}

TEST_CASE("the bracket builders and the defining substitution t -> q^m") {
    RatFn x = RatFn::x_bracket();
    RatFn omx = RatFn::one_minus_x_bracket();
    // [x] at x = m is the q-integer 1 + q + ... + q^(m-1).
    CHECK(x.subst_t_qpow(3) == RatFn(one + q + q * q));
    CHECK(x.subst_t_qpow(0).is_zero());
    CHECK(x.subst_t_qpow(1).is_one());
    // [1-x] at x = 0 is 1; at x = 1 it vanishes.
    CHECK(omx.subst_t_qpow(0).is_one());
    CHECK(omx.subst_t_qpow(1).is_zero());
    // Pole when the substitution kills the denominator outright.
    CHECK_THROWS_AS(RatFn(one, t - q).subst_t_qpow(1), qeuler::ZeroDenominator);
}

TEST_CASE("q -> 1/q substitution") {
    // [m] with q -> 1/q equals q^(1-m) [m].
    RatFn m3(one + q + q * q);
    RatFn expect = RatFn(one + q + q * q, q * q);
    CHECK(m3.subst_q_inv() == expect);
    // Involution up to value.
    RatFn f(q - one, one + q * q);
    CHECK(f.subst_q_inv().subst_q_inv().equal_value(f));
}

TEST_CASE("t -> q/t swaps the two brackets") {
    CHECK(RatFn::x_bracket().subst_t_qovert() == RatFn::one_minus_x_bracket());
    CHECK(RatFn::one_minus_x_bracket().subst_t_qovert() == RatFn::x_bracket());
    RatFn f(q * t + one, t * t);
    CHECK(f.subst_t_qovert().subst_t_qovert().equal_value(f));
}

TEST_CASE("t-derivative via the quotient rule") {
    // d/dt of (1-t)/(1-q) is -1/(1-q).
    CHECK(RatFn::x_bracket().derivative_t() == RatFn(PolyQT(-1), one - q));
    // d/dt of 1/t is -1/t^2.
    CHECK(RatFn(one, t).derivative_t() == RatFn(-one, t * t));
    CHECK(RatFn(one + q).derivative_t().is_zero());
}

TEST_CASE("q -> 1 limits after cancellation") {
    // The q-integer [n] tends to n.
    RatFn m(one - q * q * q, one - q);
    CHECK(m.limit_q1() == Rational(3));
    CHECK(RatFn(one + q).limit_q1() == Rational(2));
    CHECK_THROWS_AS(RatFn(one, one - q).limit_q1(), qeuler::PoleAtOne);
    CHECK_THROWS_AS(RatFn(t, one + q).limit_q1(), qeuler::InternalError);
}

TEST_CASE("t-Laurent expansion over a t-monomial denominator") {
    RatFn f(t * t + q * t + Rational(3) * one, t * (one + q));
    auto series = qeuler::laurent_t(f);
    REQUIRE(series.size() == 3);
    CHECK(series[-1] == RatFn(Rational(3) * one, one + q));
    CHECK(series[0] == RatFn(q, one + q));
    CHECK(series[1] == RatFn(one, one + q));

    CHECK(qeuler::laurent_t(RatFn()).empty());
    CHECK_THROWS_AS(qeuler::laurent_t(RatFn(one, one + t)), qeuler::InternalError);
}

TEST_CASE("monomial power builders") {
    CHECK(RatFn::q_pow(3) == RatFn(q * q * q));
    CHECK(RatFn::q_pow(-2).to_string() == "1/q^2");
    CHECK(RatFn::t_pow(-1).to_string() == "1/t");
    CHECK(RatFn::q_pow(-2) * RatFn::q_pow(2) == RatFn(1));
    CHECK(RatFn::t_pow(0).is_one());
}

TEST_CASE("pinned denominator rendering") {
    CHECK(RatFn(PolyQT(-1), one + q).to_string() == "-1/(1+q)");
    CHECK(RatFn(q - one, (one + q) * (one + q * q)).to_string() == "(q-1)/((1+q)*(1+q^2))");
    CHECK(RatFn(one + q + Rational(2) * q.pow(2) + q.pow(3) + q.pow(4)).to_string() ==
          "1+q+2*q^2+q^3+q^4");
    CHECK(RatFn(q, t).to_string() == "q/t");
    CHECK(RatFn::one_minus_x_bracket().to_string() == "(q-t)/(t*(q-1))");
    CHECK(RatFn(one, (q - one).pow(2)).to_string() == "1/(q-1)^2");
    CHECK(RatFn(one, Rational(2) * (one + q)).to_string() == "1/(2*(1+q))");
    CHECK(RatFn(one, q * q * t * (one + q)).to_string() == "1/(q^2*t*(1+q))");
    // An unstructured denominator core stays one parenthesized block.
    CHECK(RatFn(one, q + t).to_string() == "1/(t+q)");
}

TEST_CASE("x_bracket plus one_minus_x_bracket is the unit-interval mass") {
    // [x] + [1-x] = (2t - t^2 - q)/(t(1-q)), not 1.
    RatFn s = RatFn::x_bracket() + RatFn::one_minus_x_bracket();
    RatFn expect(Rational(2) * t - t * t - q, t * (one - q));
    CHECK(s == expect);
    CHECK_FALSE(s.is_one());
    // At q = 3, t = 9 (x = 2) the mass is [2] + [-1] = 4 + (-1/3)... evaluate both ways.
    CHECK(s.eval(Rational(3), Rational(9)) ==
          RatFn::x_bracket().eval(Rational(3), Rational(9)) +
              RatFn::one_minus_x_bracket().eval(Rational(3), Rational(9)));
}
