#include <qeuler/ratfn.hpp>

#include <sstream>
#include <vector>

namespace qeuler {

RatFn::RatFn(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("RatFn: zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = PolyQT(1);
        return;
    }
    PolyQT g = poly_gcd(num_, den_);
    if (!(g == PolyQT(1))) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Integerize: num = A*pp(num), den = B*pp(den) with coprime positive A, B.
    Rational c = num_.content() / den_.content();
    num_ = num_.primitive_part() * Rational(c.num());
    den_ = den_.primitive_part() * Rational(c.den());
    if (den_.leading().second.sign() < 0) {
        num_ *= Rational(-1);
        den_ *= Rational(-1);
    }
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    PolyQT g = poly_gcd(a.den_, b.den_);
    PolyQT bd = b.den_.divide_exact(g);
    PolyQT ad = a.den_.divide_exact(g);
    return RatFn(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    // Cross-cancel first to keep intermediate degrees down.
    PolyQT g1 = poly_gcd(a.num_, b.den_);
    PolyQT g2 = poly_gcd(b.num_, a.den_);
    return RatFn(a.num_.divide_exact(g1) * b.num_.divide_exact(g2),
                 a.den_.divide_exact(g2) * b.den_.divide_exact(g1));
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw DivisionByZero("RatFn: division by zero");
    return a * b.inverse();
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw DivisionByZero("RatFn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(long e) const {
    if (e == 0) return RatFn(1L);
    RatFn base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    // num and den are already coprime, so power them term-wise.
    RatFn r;
    r.num_ = base.num_.pow(n);
    r.den_ = base.den_.pow(n);
    return r;
}

Rational RatFn::eval(const Rational& q0, const Rational& t0) const {
    Rational d = den_.eval(q0, t0);
    if (d.is_zero())
        throw PoleError("RatFn::eval: denominator vanishes at the evaluation point");
    return num_.eval(q0, t0) / d;
}

Rational RatFn::eval_q(const Rational& q0) const {
    if (!is_t_free()) throw InternalError("RatFn::eval_q: function involves t");
    return eval(q0, Rational(0));
}

RatFn RatFn::subst_t_qpow(int x) const {
    return RatFn(num_.subst_t_qpow(x), den_.subst_t_qpow(x));
}

RatFn RatFn::subst_q_inv() const {
    int d = std::max(num_.deg_q(), den_.deg_q());
    auto flip = [d](const PolyQT& p) {
        PolyQT r;
        for (const auto& [m, c] : p.terms())
            r.set_coefficient({d - m.q_exp, m.t_exp}, c);
        return r;
    };
    return RatFn(flip(num_), flip(den_));
}

RatFn RatFn::subst_t_qovert() const {
    int e = std::max(num_.deg_t(), den_.deg_t());
    auto flip = [e](const PolyQT& p) {
        PolyQT r;
        for (const auto& [m, c] : p.terms())
            r.set_coefficient({m.q_exp + m.t_exp, e - m.t_exp}, c);
        return r;
    };
    return RatFn(flip(num_), flip(den_));
}

RatFn RatFn::derivative_t() const {
    return RatFn(num_.derivative_t() * den_ - num_ * den_.derivative_t(), den_ * den_);
}

Rational RatFn::limit_q1() const {
    if (!is_t_free()) throw InternalError("RatFn::limit_q1: function involves t");
    Rational d = den_.eval_q(Rational(1));
    if (!d.is_zero()) return num_.eval_q(Rational(1)) / d;
    if (!num_.eval_q(Rational(1)).is_zero())
        throw PoleAtOne("RatFn::limit_q1: pole at q = 1");
    // num and den are coprime, so they cannot share the root q = 1.
    throw InternalError("RatFn::limit_q1: unnormalized state");
}

RatFn RatFn::x_bracket() {
    return RatFn(PolyQT(1) - PolyQT::variable_t(), PolyQT(1) - PolyQT::variable_q());
}

RatFn RatFn::one_minus_x_bracket() {
    PolyQT t = PolyQT::variable_t();
    PolyQT q = PolyQT::variable_q();
    return RatFn(t - q, t * (PolyQT(1) - q));
}

RatFn RatFn::q_pow(long a) {
    if (a >= 0) return RatFn(PolyQT::monomial(Rational(1), static_cast<int>(a), 0));
    return RatFn(PolyQT(1), PolyQT::monomial(Rational(1), static_cast<int>(-a), 0));
}

RatFn RatFn::t_pow(long a) {
    if (a >= 0) return RatFn(PolyQT::monomial(Rational(1), 0, static_cast<int>(a)));
    return RatFn(PolyQT(1), PolyQT::monomial(Rational(1), 0, static_cast<int>(-a)));
}

std::map<int, RatFn> laurent_t(const RatFn& a) {
    if (a.is_zero()) return {};
    auto den_t = a.den().as_t_poly();
    if (den_t.size() != 1)
        throw InternalError("laurent_t: denominator mixes distinct powers of t");
    int e = den_t.begin()->first;
    const PolyQT& d = den_t.begin()->second;
    std::map<int, RatFn> out;
    for (const auto& [b, coeff] : a.num().as_t_poly())
        out[b - e] = RatFn(coeff, d);
    return out;
}

// ---------------------------------------------------------------------------
// printing

namespace {

struct PrintFactor {
    std::string body; // rendered without power
    bool atomic;      // monomial or integer: no parens of its own
    int power = 1;
};

std::string render(const PrintFactor& f) {
    std::string base = f.atomic ? f.body : "(" + f.body + ")";
    if (f.power > 1) base += "^" + std::to_string(f.power);
    return base;
}

// Denominators are integer polynomials; present them as a product of the
// structured factors this library actually produces, with any unstructured
// core kept as a single parenthesized block.
std::vector<PrintFactor> factorize_for_print(const PolyQT& den) {
    std::vector<PrintFactor> out;
    PolyQT core = den;

    BigInt content = core.content().num(); // integer poly: content is integral
    if (content != 1) {
        core = core.divide_exact(PolyQT(Rational(content)));
        out.push_back({Rational(content).to_string(), true, 1});
    }
    int mq = core.min_q_exp();
    int mt = core.min_t_exp();
    if (mq > 0 || mt > 0) {
        core = core.divide_exact(PolyQT::monomial(Rational(1), mq, mt));
        Mono m{mq, mt};
        std::string s;
        if (mq > 0) s += (mq > 1) ? "q^" + std::to_string(mq) : "q";
        if (mt > 0) {
            if (!s.empty()) s += "*";
            s += (mt > 1) ? "t^" + std::to_string(mt) : "t";
        }
        out.push_back({s, true, 1});
    }
    for (const PolyQT& cand : structured_factor_candidates(core.deg_q(), core.deg_t() > 0)) {
        int power = 0;
        while (!core.is_constant()) {
            auto quo = core.try_divide(cand);
            if (!quo) break;
            core = *quo;
            ++power;
        }
        if (power > 0) out.push_back({cand.to_string(), false, power});
    }
    if (core.is_constant()) {
        Rational c = core.constant_value();
        if (c != Rational(1)) {
            // Sign or residue folded back onto the last factor's content slot.
            out.insert(out.begin(), {c.to_string(), true, 1});
        }
    } else {
        out.push_back({core.to_string(), false, 1});
    }
    return out;
}

} // namespace

std::string RatFn::to_string() const {
    std::string num_str = num_.to_string();
    if (is_polynomial()) return num_str;
    if (num_.term_count() > 1) num_str = "(" + num_str + ")";

    std::vector<PrintFactor> factors = factorize_for_print(den_);
    std::ostringstream inner;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) inner << "*";
        inner << render(factors[i]);
    }
    std::string den_str = inner.str();
    // A lone factor is already unambiguous ("t", "2", "(1+q)", "(1-q)^2");
    // products get one outer pair: "((1+q)*(1+q^2))".
    if (factors.size() > 1) den_str = "(" + den_str + ")";
    return num_str + "/" + den_str;
}

} // namespace qeuler
