#include <qeuler/padic.hpp>

namespace qeuler {

namespace {

long p_level(long p, int N) {
    if (N < 1) throw RangeError("fermionic sum: level must be >= 1");
    long count = 1;
    for (int i = 0; i < N; ++i) count *= p;
    return count;
}

void require_p_free(const Rational& v, long p, const char* where) {
    if (!v.is_zero() && v.den() % p == 0)
        throw PDenominator(std::string(where) + ": value has p in its denominator");
}

} // namespace

Rational fermionic_partial_sum(const RatSeq& f, long p, int N) {
    const long count = p_level(p, N);
    Rational acc;
    for (long x = 0; x < count; ++x) {
        Rational v = f(x);
        require_p_free(v, p, "fermionic_partial_sum");
        if (x % 2 == 0)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

PadicNum fermionic_oracle(const RatSeq& f, long p, int N, int M) {
    return padic_embed(fermionic_partial_sum(f, p, N), p, M);
}

Rational fermionic_partial_sum_q(const RatSeq& f, const Rational& q0, long p, int N) {
    Rational qm1 = q0 - Rational(1);
    if (!qm1.is_zero() && padic_val(qm1, p) < 1)
        throw BadQ("fermionic_partial_sum_q: q0 must satisfy v_p(q0 - 1) >= 1");
    const long count = p_level(p, N);
    Rational acc;
    Rational power(1); // (-q0)^x
    for (long x = 0; x < count; ++x) {
        Rational v = f(x);
        require_p_free(v, p, "fermionic_partial_sum_q");
        acc += v * power;
        power *= -q0;
    }
    // (1+q0)/(1+q0^(p^N)); the denominator is ≡ 2 mod p, hence a unit.
    Rational weight = (Rational(1) + q0) / (Rational(1) + q0.pow(count));
    return acc * weight;
}

PadicNum fermionic_oracle_q(const RatSeq& f, const Rational& q0, long p, int N, int M) {
    return padic_embed(fermionic_partial_sum_q(f, q0, p, N), p, M);
}

ShiftCheck shift_identity_check(int n_shift, const RatSeq& f, long p, int N, int M) {
    if (n_shift < 0) throw RangeError("shift_identity_check: negative shift");
    ShiftCheck out;
    out.lhs = fermionic_partial_sum([&](long x) { return f(x + n_shift); }, p, N);

    Rational boundary;
    for (int l = 0; l < n_shift; ++l) {
        Rational v = f(l);
        require_p_free(v, p, "shift_identity_check");
        boundary += Rational((n_shift - 1 - l) % 2 == 0 ? 1 : -1) * v;
    }
    Rational base = fermionic_partial_sum(f, p, N);
    out.rhs = Rational(n_shift % 2 == 0 ? 1 : -1) * base + Rational(2) * boundary;

    out.exact = out.lhs == out.rhs;
    out.agreement = agreement_valuation(padic_embed(out.lhs, p, M), padic_embed(out.rhs, p, M));
    return out;
}

} // namespace qeuler
