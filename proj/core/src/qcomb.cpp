#include <qeuler/qcomb.hpp>

namespace qeuler {

namespace {

// Truncation to t-degree <= order.
PolyQT truncate_t(const PolyQT& p, int order) {
    PolyQT r;
    for (const auto& [m, c] : p.terms())
        if (m.t_exp <= order) r.set_coefficient(m, c);
    return r;
}

long binom2(int n) { return n < 2 ? 0 : static_cast<long>(n) * (n - 1) / 2; }

} // namespace

PolyQT q_int(int n) {
    if (n < 0) throw RangeError("q_int: negative index");
    PolyQT r;
    for (int i = 0; i < n; ++i) r.set_coefficient({i, 0}, Rational(1));
    return r;
}

PolyQT q_factorial(int n) {
    if (n < 0) throw RangeError("q_factorial: negative index");
    PolyQT r(1);
    for (int k = 2; k <= n; ++k) r *= q_int(k);
    return r;
}

PolyQT gauss_binomial(int n, int k) {
    if (n < 0) throw RangeError("gauss_binomial: negative upper index");
    if (k < 0 || k > n) return PolyQT(0);
    // [n]!/[k]! = [k+1][k+2]...[n], then one exact division by [n-k]!.
    PolyQT num(1);
    for (int j = k + 1; j <= n; ++j) num *= q_int(j);
    return num.divide_exact(q_factorial(n - k));
}

BigInt binom_general(const BigInt& a, int b) {
    if (b < 0) throw RangeError("binom_general: negative lower index");
    BigInt r = 1;
    // After step i the value is C(a-b+i, i), an exact integer throughout.
    for (int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

PolyQT composition_sum(int k, int w) {
    if (k < 0 || w < 0) throw RangeError("composition_sum: negative argument");
    // DP over parts: part i contributes q^(i*l_i) for every split of the
    // remaining weight.
    std::vector<PolyQT> by_weight(w + 1, PolyQT(0));
    by_weight[w] = PolyQT(1); // all weight still unassigned
    for (int i = k; i >= 1; --i) {
        std::vector<PolyQT> next(w + 1, PolyQT(0));
        for (int rem = 0; rem <= w; ++rem) {
            if (by_weight[rem].is_zero()) continue;
            for (int li = 0; li <= rem; ++li)
                next[rem - li] += by_weight[rem] * PolyQT::monomial(Rational(1), i * li, 0);
        }
        by_weight = std::move(next);
    }
    // Part 0 absorbs whatever weight remains at exponent 0.
    PolyQT total;
    for (int rem = 0; rem <= w; ++rem) total += by_weight[rem];
    return total;
}

RatFn pochhammer_value(const RatFn& a, int r) {
    if (r < 0) throw RangeError("pochhammer_value: negative length");
    RatFn acc(1);
    for (int j = 0; j < r; ++j) acc *= RatFn(1) - a * RatFn::q_pow(j);
    return acc;
}

RatFn pochhammer_value_qinv(const RatFn& a, int r) {
    if (r < 0) throw RangeError("pochhammer_value_qinv: negative length");
    RatFn acc(1);
    for (int j = 0; j < r; ++j) acc *= RatFn(1) - a * RatFn::q_pow(-j);
    return acc;
}

PochhammerCheck q_pochhammer(int n, int order) {
    if (n < 0) throw RangeError("q_pochhammer: negative index");
    if (order < 0) throw RangeError("q_pochhammer: negative order");
    PochhammerCheck out;

    out.product = PolyQT(1);
    for (int j = 0; j < n; ++j)
        out.product *= PolyQT(1) - PolyQT::monomial(Rational(1), j, 1);

    for (int i = 0; i <= n; ++i) {
        Rational sign(i % 2 == 0 ? 1 : -1);
        out.signed_sum +=
            gauss_binomial(n, i) * PolyQT::monomial(sign, static_cast<int>(binom2(i)), i);
    }
    out.sum_matches = out.product == out.signed_sum;

    out.reciprocal_series.reserve(order + 1);
    PolyQT series;
    for (int i = 0; i <= order; ++i) {
        // The i = 0 coefficient is the empty product 1 even when n = 0.
        PolyQT coeff = i == 0 ? PolyQT(1) : gauss_binomial(n + i - 1, i);
        series += coeff * PolyQT::monomial(Rational(1), 0, i);
        out.reciprocal_series.push_back(std::move(coeff));
    }
    out.reciprocal_matches = truncate_t(out.product * series, order) == PolyQT(1);
    return out;
}

GaussExpansionCheck gauss_expansion_check(int n) {
    if (n < 0) throw RangeError("gauss_expansion_check: negative index");
    GaussExpansionCheck out;

    const PolyQT one(1);
    const PolyQT q = PolyQT::variable_q();
    const PolyQT t = PolyQT::variable_t();

    // C(x,n)_q = prod_{i<n} [x-i]_q / [n]_q! with [x-i]_q = (q^i - t)/(q^i (1-q)).
    RatFn lhs(1);
    for (int i = 0; i < n; ++i) {
        PolyQT qi = PolyQT::monomial(Rational(1), i, 0);
        lhs *= RatFn(qi - t, qi * (one - q));
    }
    lhs /= RatFn(q_factorial(n));
    out.lhs = lhs;

    // Printed expansion: (1-q)^n q^(-C(n,2)) / [n]_q! * sum_i q^C(i,2) C(n,i)_q (-1)^(n+i) t^(n-i).
    PolyQT sum;
    for (int i = 0; i <= n; ++i) {
        Rational sign((n + i) % 2 == 0 ? 1 : -1);
        sum += gauss_binomial(n, i) *
               PolyQT::monomial(sign, static_cast<int>(binom2(i)), n - i);
    }
    PolyQT qbin2 = PolyQT::monomial(Rational(1), static_cast<int>(binom2(n)), 0);
    out.printed = RatFn((one - q).pow(n) * sum, qbin2 * q_factorial(n));
    out.corrected = RatFn(sum, (one - q).pow(n) * qbin2 * q_factorial(n));

    out.printed_matches = rf_equal(out.printed, out.lhs);
    out.corrected_matches = rf_equal(out.corrected, out.lhs);
    out.residual = out.printed / out.lhs; // lhs is a product of nonzero factors
    return out;
}

} // namespace qeuler
