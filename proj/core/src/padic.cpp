#include <qeuler/padic.hpp>

#include <boost/multiprecision/integer.hpp>

#include <cstdlib>
#include <sstream>

namespace qeuler {

namespace {

BigInt p_power(long p, long e) {
    if (e < 0) throw InternalError("p_power: negative exponent");
    return big_pow(BigInt(p), e);
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a modulo p^M via Euler's theorem (a is coprime to p).
BigInt mod_inverse(const BigInt& a, long p, int M) {
    BigInt mod = p_power(p, M);
    BigInt phi = p_power(p, M - 1) * (p - 1);
    return boost::multiprecision::powm(mod_reduce(a, mod), phi - 1, mod);
}

} // namespace

PadicNum::PadicNum(long p, long val, BigInt unit, int prec) : p_(p), val_(val), prec_(prec) {
    if (p < 3 || p % 2 == 0) throw RangeError("PadicNum: p must be an odd prime");
    if (prec_ <= 0) {
        val_ += prec_;
        prec_ = 0;
        unit_ = 0;
        return;
    }
    unit_ = mod_reduce(unit, p_power(p_, prec_));
    if (unit_ == 0) {
        val_ += prec_;
        prec_ = 0;
        return;
    }
    long shift = padic_val(unit_, p_);
    if (shift > 0) {
        // Stray p-factors move into the valuation and cost precision.
        val_ += shift;
        prec_ -= static_cast<int>(shift);
        unit_ = mod_reduce(unit_ / p_power(p_, shift), p_power(p_, prec_));
        if (unit_ == 0) {
            val_ += prec_;
            prec_ = 0;
        }
    }
}

PadicNum PadicNum::zero(long p, long abs_prec) {
    PadicNum z(p);
    z.val_ = abs_prec;
    return z;
}

PadicNum PadicNum::operator-() const {
    if (is_zero()) return *this;
    PadicNum r = *this;
    r.unit_ = p_power(p_, prec_) - unit_;
    return r;
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
    if (a.p_ != b.p_) throw InternalError("PadicNum: mixed primes");
    const long p = a.p_;
    const long ap = std::min(a.abs_prec(), b.abs_prec());
    if (a.is_zero() && b.is_zero()) return PadicNum::zero(p, ap);
    if (a.is_zero() || b.is_zero()) {
        const PadicNum& v = a.is_zero() ? b : a;
        if (v.val_ >= ap) return PadicNum::zero(p, ap);
        return PadicNum(p, v.val_, v.unit_, static_cast<int>(ap - v.val_));
    }
    const long vmin = std::min(a.val_, b.val_);
    // Both operands have abs_prec > their val, so ap > vmin.
    BigInt scaled = p_power(p, a.val_ - vmin) * a.unit_ + p_power(p, b.val_ - vmin) * b.unit_;
    return PadicNum(p, vmin, std::move(scaled), static_cast<int>(ap - vmin));
}

PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
    if (a.p_ != b.p_) throw InternalError("PadicNum: mixed primes");
    const long p = a.p_;
    if (a.is_zero() || b.is_zero()) return PadicNum::zero(p, a.val_ + b.val_);
    int prec = std::min(a.prec_, b.prec_);
    return PadicNum(p, a.val_ + b.val_, a.unit_ * b.unit_, prec);
}

PadicNum PadicNum::truncated(int new_prec) const {
    if (is_zero()) return zero(p_, std::min(val_, static_cast<long>(new_prec)));
    return PadicNum(p_, val_, unit_, std::min(prec_, new_prec));
}

std::string PadicNum::to_string() const {
    std::ostringstream os;
    if (!is_zero()) {
        if (val_ != 0) os << p_ << "^" << val_ << "*";
        os << unit_ << " + ";
    }
    os << "O(" << p_ << "^" << abs_prec() << ")";
    return os.str();
}

long padic_val(const BigInt& n, long p) {
    if (n == 0) throw InternalError("padic_val: zero has no finite valuation");
    BigInt m = big_abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long padic_val(const Rational& r, long p) {
    if (r.is_zero()) throw InternalError("padic_val: zero has no finite valuation");
    long vn = padic_val(r.num(), p);
    return vn > 0 ? vn : -padic_val(r.den(), p);
}

PadicNum padic_embed(const Rational& r, long p, int M) {
    if (M <= 0) throw RangeError("padic_embed: precision must be positive");
    if (r.is_zero()) return PadicNum::zero(p, M);
    long vn = padic_val(r.num(), p);
    long vd = padic_val(r.den(), p);
    BigInt nu = r.num() / p_power(p, vn);
    BigInt du = r.den() / p_power(p, vd);
    BigInt unit = nu * mod_inverse(du, p, M);
    return PadicNum(p, vn - vd, std::move(unit), M);
}

long agreement_valuation(const PadicNum& a, const PadicNum& b) {
    PadicNum d = a - b;
    return d.is_zero() ? d.abs_prec() : d.val();
}

long default_max_terms() {
    static const long cap = [] {
        if (const char* env = std::getenv("QEULER_MAX_TERMS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 10000L;
    }();
    return cap;
}

PadicNum series_sum(long p, int M, const std::function<PadicNum(long)>& term,
                    const std::function<long(long)>& val_bound, long max_terms) {
    // Start from a bound far above anything reachable so the first real term
    // sets the precision.
    PadicNum acc = PadicNum::zero(p, static_cast<long>(M) + 64);
    for (long m = 0;; ++m) {
        if (val_bound(m) >= M + 2) break;
        if (m >= max_terms)
            throw NoConvergence("series_sum: tail valuation still below target after " +
                                std::to_string(max_terms) + " terms");
        acc += term(m);
    }
    return acc.truncated(M);
}

} // namespace qeuler
