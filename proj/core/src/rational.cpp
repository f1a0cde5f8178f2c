#include <qeuler/rational.hpp>

#include <cctype>
#include <sstream>

namespace qeuler {

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Rational r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return r;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { throw RangeError("Rational::parse: malformed rational '" + text + "'"); };
    std::string s = text;
    if (s.empty()) bad();
    std::string num_part = s;
    std::string den_part;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        if (den_part.empty()) bad();
    }
    auto check_digits = [&](const std::string& d, bool allow_sign) {
        if (d.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (d[0] == '-' || d[0] == '+')) i = 1;
        if (i == d.size()) bad();
        for (; i < d.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(d[i]))) bad();
    };
    check_digits(num_part, true);
    if (num_part[0] == '+') num_part.erase(0, 1);
    BigInt n(num_part);
    if (den_part.empty()) return Rational(std::move(n));
    check_digits(den_part, false);
    BigInt d(den_part);
    if (d == 0) throw ZeroDenominator("Rational::parse: zero denominator in '" + text + "'");
    return Rational(std::move(n), std::move(d));
}

} // namespace qeuler
