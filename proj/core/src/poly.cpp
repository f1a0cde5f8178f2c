#include <qeuler/poly.hpp>

#include <algorithm>
#include <sstream>

namespace qeuler {

PolyQT PolyQT::monomial(const Rational& c, int q_exp, int t_exp) {
    if (q_exp < 0 || t_exp < 0)
        throw RangeError("PolyQT::monomial: negative exponent");
    PolyQT p;
    p.set_coefficient({q_exp, t_exp}, c);
    return p;
}

Rational PolyQT::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw InternalError("PolyQT::constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

bool PolyQT::is_t_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.t_exp == 0; });
}

bool PolyQT::is_q_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.q_exp == 0; });
}

int PolyQT::deg_q() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.q_exp);
    return d;
}

int PolyQT::deg_t() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t_exp);
    return d;
}

int PolyQT::min_q_exp() const {
    if (is_zero()) return 0;
    int d = terms_.begin()->first.q_exp;
    for (const auto& [m, c] : terms_) d = std::min(d, m.q_exp);
    return d;
}

int PolyQT::min_t_exp() const {
    if (is_zero()) return 0;
    int d = terms_.begin()->first.t_exp;
    for (const auto& [m, c] : terms_) d = std::min(d, m.t_exp);
    return d;
}

Rational PolyQT::coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

void PolyQT::set_coefficient(const Mono& m, const Rational& c) {
    if (m.q_exp < 0 || m.t_exp < 0)
        throw RangeError("PolyQT::set_coefficient: negative exponent");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

const std::pair<const Mono, Rational>& PolyQT::leading() const {
    if (is_zero()) throw InternalError("PolyQT::leading: zero polynomial");
    return *terms_.rbegin();
}

PolyQT PolyQT::operator-() const {
    PolyQT r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    PolyQT r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m{ma.q_exp + mb.q_exp, ma.t_exp + mb.t_exp};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

PolyQT& PolyQT::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

PolyQT PolyQT::pow(long e) const {
    if (e < 0) throw RangeError("PolyQT::pow: negative exponent");
    PolyQT r(1);
    PolyQT b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

Rational PolyQT::eval(const Rational& q0, const Rational& t0) const {
    // Powers are cached up to the needed degree; sparse exponent gaps stay cheap.
    std::vector<Rational> qp{Rational(1)}, tp{Rational(1)};
    auto power = [](std::vector<Rational>& cache, const Rational& base, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Rational acc(0);
    for (const auto& [m, c] : terms_)
        acc += c * power(qp, q0, m.q_exp) * power(tp, t0, m.t_exp);
    return acc;
}

Rational PolyQT::eval_q(const Rational& q0) const {
    if (!is_t_free()) throw InternalError("PolyQT::eval_q: polynomial involves t");
    return eval(q0, Rational(0));
}

PolyQT PolyQT::subst_t_qpow(int x) const {
    if (x < 0) throw RangeError("PolyQT::subst_t_qpow: negative power of q");
    PolyQT r;
    for (const auto& [m, c] : terms_) {
        Mono nm{m.q_exp + x * m.t_exp, 0};
        auto it = r.terms_.find(nm);
        if (it == r.terms_.end()) {
            r.terms_.emplace(nm, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

PolyQT PolyQT::derivative_t() const {
    PolyQT r;
    for (const auto& [m, c] : terms_) {
        if (m.t_exp == 0) continue;
        r.terms_.emplace(Mono{m.q_exp, m.t_exp - 1}, c * Rational(m.t_exp));
    }
    return r;
}

Rational PolyQT::content() const {
    if (is_zero()) return Rational(1);
    BigInt den_lcm = 1;
    for (const auto& [m, c] : terms_)
        den_lcm = den_lcm / big_gcd(den_lcm, c.den()) * c.den();
    BigInt num_gcd = 0;
    for (const auto& [m, c] : terms_)
        num_gcd = big_gcd(num_gcd, big_abs(c.num() * (den_lcm / c.den())));
    return Rational(num_gcd, den_lcm);
}

PolyQT PolyQT::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = content();
    PolyQT r = *this;
    r *= c.inverse();
    return r;
}

std::optional<PolyQT> PolyQT::try_divide(const PolyQT& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("PolyQT: division by zero polynomial");
    PolyQT quotient;
    PolyQT rem = *this;
    const auto& [lg_mono, lg_coeff] = divisor.leading();
    while (!rem.is_zero()) {
        const auto& [lr_mono, lr_coeff] = rem.leading();
        if (lr_mono.q_exp < lg_mono.q_exp || lr_mono.t_exp < lg_mono.t_exp)
            return std::nullopt;
        Mono m{lr_mono.q_exp - lg_mono.q_exp, lr_mono.t_exp - lg_mono.t_exp};
        Rational c = lr_coeff / lg_coeff;
        quotient.set_coefficient(m, c);
        rem -= divisor * PolyQT::monomial(c, m.q_exp, m.t_exp);
    }
    return quotient;
}

PolyQT PolyQT::divide_exact(const PolyQT& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw InternalError("PolyQT::divide_exact: division left a remainder");
    return *q;
}

std::map<int, PolyQT> PolyQT::as_t_poly() const {
    std::map<int, PolyQT> out;
    for (const auto& [m, c] : terms_)
        out[m.t_exp].set_coefficient({m.q_exp, 0}, c);
    return out;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string mono_string(const Mono& m) {
    std::string s;
    if (m.q_exp > 0) {
        s += "q";
        if (m.q_exp > 1) s += "^" + std::to_string(m.q_exp);
    }
    if (m.t_exp > 0) {
        if (!s.empty()) s += "*";
        s += "t";
        if (m.t_exp > 1) s += "^" + std::to_string(m.t_exp);
    }
    return s;
}

std::string term_body(const Rational& abs_coeff, const Mono& m) {
    std::string ms = mono_string(m);
    if (ms.empty()) return abs_coeff.to_string();
    if (abs_coeff == Rational(1)) return ms;
    return abs_coeff.to_string() + "*" + ms;
}

} // namespace

std::string PolyQT::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::pair<Mono, Rational>> order(terms_.begin(), terms_.end());
    // Ascending canonical order, with one positive term fronted when the
    // lowest term is negative ("q-1" rather than "-1+q").
    if (order.front().second.sign() < 0) {
        auto pos = std::find_if(order.begin(), order.end(),
                                [](const auto& tc) { return tc.second.sign() > 0; });
        if (pos != order.end()) std::rotate(order.begin(), pos, pos + 1);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : order) {
        if (first) {
            if (c.sign() < 0) os << "-";
            os << term_body(c.abs(), m);
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+") << term_body(c.abs(), m);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

// q^e as a divisor is handled by exponent arithmetic, not trial division.
void strip_monomials(PolyQT& f, PolyQT& g, PolyQT& acc) {
    int aq = std::min(f.min_q_exp(), g.min_q_exp());
    int at = std::min(f.min_t_exp(), g.min_t_exp());
    if (aq == 0 && at == 0) return;
    PolyQT shift = PolyQT::monomial(Rational(1), aq, at);
    f = f.divide_exact(shift);
    g = g.divide_exact(shift);
    acc *= shift;
}

// Flip sign so the leading coefficient is positive; keeps trial-division
// quotients sign-stable.
PolyQT oriented(PolyQT p) {
    if (!p.is_zero() && p.leading().second.sign() < 0) p *= Rational(-1);
    return p;
}


// Primitive PRS over the integers for t-free polynomials.
PolyQT gcd_qonly(const PolyQT& f, const PolyQT& g);

// Content of f viewed in t: gcd of its t-coefficient polynomials (all t-free).
PolyQT content_in_t(const PolyQT& f) {
    PolyQT c;
    for (const auto& [e, coeff] : f.as_t_poly()) {
        c = c.is_zero() ? coeff.primitive_part() : gcd_qonly(c, coeff);
        if (c.is_constant()) return PolyQT(1);
    }
    return c;
}

PolyQT pseudo_rem_t(PolyQT f, const PolyQT& g) {
    auto gt = g.as_t_poly();
    int dg = gt.rbegin()->first;
    PolyQT lc_g = gt.rbegin()->second;
    while (!f.is_zero()) {
        auto ft = f.as_t_poly();
        int df = ft.rbegin()->first;
        if (df < dg) break;
        PolyQT lc_f = ft.rbegin()->second;
        PolyQT tshift = PolyQT::monomial(Rational(1), 0, df - dg);
        f = f * lc_g - g * (lc_f * tshift);
    }
    return f;
}

PolyQT gcd_qonly(const PolyQT& f, const PolyQT& g) {
    PolyQT a = f.primitive_part();
    PolyQT b = g.primitive_part();
    if (a.deg_q() < b.deg_q()) std::swap(a, b);
    while (!b.is_zero()) {
        // Pseudo-remainder in q with content removal each step.
        PolyQT r = a;
        const Rational lb = b.leading().second;
        int db = b.deg_q();
        while (!r.is_zero() && r.deg_q() >= db) {
            const Rational lr = r.leading().second;
            int shift = r.deg_q() - db;
            r = r * lb - b * PolyQT::monomial(lr, shift, 0);
        }
        a = b;
        b = r.is_zero() ? r : r.primitive_part();
    }
    a = a.primitive_part();
    if (!a.is_zero() && a.leading().second.sign() < 0) a *= Rational(-1);
    return a;
}

} // namespace

std::vector<PolyQT> structured_factor_candidates(int max_q_deg, bool with_t) {
    std::vector<PolyQT> out;
    const PolyQT one(1);
    const PolyQT t = PolyQT::variable_t();
    out.push_back(PolyQT::variable_q() - one);
    for (int l = 1; l <= max_q_deg; ++l)
        out.push_back(one + PolyQT::monomial(Rational(1), l, 0));
    if (with_t) {
        for (int i = 0; i <= max_q_deg; ++i)
            out.push_back(oriented(t - PolyQT::monomial(Rational(1), i, 0)));
    }
    return out;
}

PolyQT poly_gcd(const PolyQT& f, const PolyQT& g) {
    auto positive_pp = [](const PolyQT& p) {
        PolyQT r = p.primitive_part();
        if (!r.is_zero() && r.leading().second.sign() < 0) r *= Rational(-1);
        return r;
    };
    if (f.is_zero()) return positive_pp(g);
    if (g.is_zero()) return positive_pp(f);
    if (f.is_constant() || g.is_constant()) return PolyQT(1);

    PolyQT a = f.primitive_part();
    PolyQT b = g.primitive_part();
    PolyQT acc(1);
    strip_monomials(a, b, acc);

    const int max_q_deg = std::min(a.deg_q(), b.deg_q());
    const bool with_t = a.deg_t() > 0 && b.deg_t() > 0;
    for (const PolyQT& cand : structured_factor_candidates(max_q_deg, with_t)) {
        while (true) {
            if (a.is_constant() || b.is_constant()) break;
            auto qa = a.try_divide(cand);
            if (!qa) break;
            auto qb = b.try_divide(cand);
            if (!qb) break;
            a = *qa;
            b = *qb;
            acc *= cand;
        }
    }
    if (a.is_constant() || b.is_constant()) return positive_pp(acc);

    // Quick exits that catch most of what the structured pass leaves behind.
    if (positive_pp(a) == positive_pp(b)) return positive_pp(acc * positive_pp(a));
    if (a.try_divide(b)) return positive_pp(acc * b);
    if (b.try_divide(a)) return positive_pp(acc * a);

    if (a.is_t_free() && b.is_t_free()) return positive_pp(acc * gcd_qonly(a, b));

    // Primitive PRS in t with t-free contents split off.
    PolyQT ca = content_in_t(a);
    PolyQT cb = content_in_t(b);
    PolyQT cont = gcd_qonly(ca, cb);
    a = a.divide_exact(ca);
    b = b.divide_exact(cb);
    if (a.deg_t() < b.deg_t()) std::swap(a, b);
    while (!b.is_zero() && b.deg_t() > 0) {
        PolyQT r = pseudo_rem_t(a, b);
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = r.divide_exact(content_in_t(r)).primitive_part();
        }
    }
    PolyQT prs = b.is_zero() ? a : PolyQT(1);
    return positive_pp(acc * cont * prs);
}

} // namespace qeuler
