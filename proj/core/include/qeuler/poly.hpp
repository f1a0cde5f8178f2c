#pragma once

#include <qeuler/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qeuler {

// Exponent pair of one monomial q^q_exp * t^t_exp.  Exponents are never
// negative inside a polynomial; negative powers live in RatFn denominators.
struct Mono {
    int q_exp = 0;
    int t_exp = 0;

    int degree() const { return q_exp + t_exp; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

// Graded lexicographic order with q senior to t: first by total degree, then
// by q-exponent.  The map below is ascending, so the leading term (highest in
// this order) sits at rbegin().
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.q_exp < b.q_exp;
    }
};

// Sparse bivariate polynomial in (q, t) with exact rational coefficients.
// Zero coefficients are never stored, so structural equality of the term maps
// is semantic equality.
class PolyQT {
public:
    using TermMap = std::map<Mono, Rational, MonoLess>;

    PolyQT() = default;
    PolyQT(long c) { set_coefficient({0, 0}, Rational(c)); }
    PolyQT(const Rational& c) { set_coefficient({0, 0}, c); }

    static PolyQT variable_q() { return monomial(Rational(1), 1, 0); }
    static PolyQT variable_t() { return monomial(Rational(1), 0, 1); }
    static PolyQT monomial(const Rational& c, int q_exp, int t_exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    // Value of a constant polynomial (InternalError if not constant).
    Rational constant_value() const;

    bool is_t_free() const;
    bool is_q_free() const;

    int deg_q() const;
    int deg_t() const;
    int min_q_exp() const;
    int min_t_exp() const;
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    Rational coefficient(int q_exp, int t_exp) const;
    void set_coefficient(const Mono& m, const Rational& c);

    // Leading term in the canonical order (InternalError on zero).
    const std::pair<const Mono, Rational>& leading() const;

    PolyQT operator-() const;
    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
    PolyQT& operator*=(const PolyQT& o) { return *this = *this * o; }
    PolyQT& operator*=(const Rational& c);
    friend PolyQT operator*(PolyQT a, const Rational& c) { return a *= c; }
    friend PolyQT operator*(const Rational& c, PolyQT a) { return a *= c; }

    friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyQT& a, const PolyQT& b) { return !(a == b); }

    PolyQT pow(long e) const; // e >= 0 (RangeError otherwise)

    Rational eval(const Rational& q0, const Rational& t0) const;
    // Evaluation of a t-free polynomial (InternalError if t occurs).
    Rational eval_q(const Rational& q0) const;

    // t -> q^x for integer x >= 0 (RangeError otherwise).
    PolyQT subst_t_qpow(int x) const;

    // Formal partial derivative with respect to t.
    PolyQT derivative_t() const;

    // Positive rational c such that (*this)/c has coprime integer coefficients;
    // the sign stays with the polynomial.  Content of zero is 1.
    Rational content() const;
    PolyQT primitive_part() const;

    // Exact division: quotient when divisor divides *this, nullopt otherwise.
    std::optional<PolyQT> try_divide(const PolyQT& divisor) const;
    // Exact division that must succeed (InternalError on remainder).
    PolyQT divide_exact(const PolyQT& divisor) const;

    // View as a polynomial in t with t-free coefficient polynomials.
    std::map<int, PolyQT> as_t_poly() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// Primitive gcd with positive leading coefficient (1 for coprime inputs,
// gcd(f, 0) = primitive part of f).  Structured factors common in this
// library (powers of q, t, 1-q, 1+q^l, t-q^i) are stripped by trial division
// first; a primitive pseudo-remainder sequence handles whatever remains.
PolyQT poly_gcd(const PolyQT& f, const PolyQT& g);

// The structured factor family shared by the gcd accelerator and the
// denominator printer: q-1, 1+q^l (l <= max_q_deg) and, when with_t, the
// sign-normalized t-q^i binomials.
std::vector<PolyQT> structured_factor_candidates(int max_q_deg, bool with_t);

} // namespace qeuler
