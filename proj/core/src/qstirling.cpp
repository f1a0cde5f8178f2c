#include <qeuler/qstirling.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qeuler {

namespace {

// Row caches: many identity checks walk the same rows repeatedly, and rows
// are immutable once computed.  Readers share; a missing row is computed
// outside any lock and inserted under the exclusive one.
template <typename Compute>
std::vector<PolyQT> cached_row(std::map<int, std::vector<PolyQT>>& cache,
                               std::shared_mutex& mutex, int key, Compute compute) {
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<PolyQT> row = compute();
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(row)).first->second;
}

// The falling-factorial product prod_{i<k}(y - [i]_q), with t standing in
// for y; its t-coefficients are exactly the row entries.
PolyQT falling_product(int k) {
    PolyQT p(1);
    const PolyQT t = PolyQT::variable_t();
    for (int i = 0; i < k; ++i) p *= t - q_int(i);
    return p;
}

std::vector<PolyQT> t_coeffs(const PolyQT& p, int count) {
    std::vector<PolyQT> out(count, PolyQT(0));
    for (const auto& [e, c] : p.as_t_poly())
        if (e < count) out[e] = c;
    return out;
}

} // namespace

std::vector<PolyQT> s1_row(int k) {
    if (k < 0) throw RangeError("s1_row: negative index");
    static std::map<int, std::vector<PolyQT>> cache;
    static std::shared_mutex mutex;
    return cached_row(cache, mutex, k,
                      [k] { return t_coeffs(falling_product(k), k + 1); });
}

std::vector<PolyQT> s2_row(int n) {
    if (n < 0) throw RangeError("s2_row: negative index");
    static std::map<int, std::vector<PolyQT>> cache;
    static std::shared_mutex mutex;
    return cached_row(cache, mutex, n, [n] {
        // Triangular elimination: subtract c_k * (monic degree-k product)
        // from y^n, top degree down; no division ever occurs.
        std::vector<PolyQT> row(n + 1, PolyQT(0));
        PolyQT target = PolyQT::monomial(Rational(1), 0, n); // y^n as t^n
        for (int k = n; k >= 0; --k) {
            auto coeffs = target.as_t_poly();
            auto it = coeffs.find(k);
            if (it == coeffs.end()) continue;
            row[k] = it->second;
            target -= row[k] * falling_product(k);
        }
        if (!target.is_zero())
            throw InternalError("s2_row: change of basis did not terminate");
        return row;
    });
}

std::vector<PolyQT> S1_row(int n) {
    if (n < -1) throw RangeError("S1_row: index below the empty product");
    if (n == -1) return {PolyQT(1)};
    static std::map<int, std::vector<PolyQT>> cache;
    static std::shared_mutex mutex;
    return cached_row(cache, mutex, n, [n] {
        PolyQT p(1);
        const PolyQT z = PolyQT::variable_t();
        for (int k = 1; k <= n; ++k) p *= PolyQT(1) + q_int(k) * z;
        return t_coeffs(p, n + 1);
    });
}

std::vector<PolyQT> S2_coeffs(int n, int order) {
    if (n < 0) throw RangeError("S2_coeffs: negative index");
    if (order < 0) throw RangeError("S2_coeffs: negative order");
    std::vector<PolyQT> a = S1_row(n);
    std::vector<PolyQT> b(order + 1, PolyQT(0));
    b[0] = PolyQT(1); // the product has constant term 1
    for (int j = 1; j <= order; ++j) {
        PolyQT acc;
        for (int i = 1; i <= j && i <= n; ++i) acc += a[i] * b[j - i];
        b[j] = -acc;
    }
    return b;
}

St2ProductCheck st2_product_check(int n) {
    if (n < 1) throw RangeError("st2_product_check: index must be >= 1");
    St2ProductCheck out;

    const int r = n;
    out.st1_ok = true;
    for (int m = 0; m <= r; ++m) {
        PolyQT lhs = PolyQT::monomial(Rational(1), m * (m - 1) / 2, 0) *
                     gauss_binomial(r, m) * q_factorial(m);
        PolyQT rhs(1);
        for (int k = 0; k < m; ++k) rhs *= q_int(r) - q_int(k);
        if (!(lhs == rhs)) out.st1_ok = false;
    }

    std::vector<PolyQT> row = S1_row(n - 1);
    PolyQT rhs;
    for (int k = 0; k < n; ++k) {
        Rational sign(k % 2 == 0 ? 1 : -1);
        rhs += row[k] * PolyQT::monomial(sign, 0, n - k);
    }
    out.st2_ok = falling_product(n) == rhs;
    return out;
}

} // namespace qeuler
