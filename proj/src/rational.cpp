#include "qtharm/rational.hpp"

#include <cctype>

#include "qtharm/errors.hpp"

namespace qtharm {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DomainError("rational: zero denominator");
    // cpp_rational reduces to lowest terms but insists on den > 0
    if (den < 0)
        value_ = mp::cpp_rational(-num, -den);
    else
        value_ = mp::cpp_rational(num, den);
}

Rational Rational::operator-() const { return Rational(-value_); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_.is_zero()) throw DomainError("rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw ParseError("rational: malformed value '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto is_int = [&](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) bad();
            return Rational(BigInt(std::string(text)), BigInt(1));
        }
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) bad();
        BigInt den{std::string(q)};
        if (den.is_zero()) bad();
        return Rational(BigInt(std::string(p)), den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational();  // unreachable
}

std::string Rational::str() const { return value_.str(); }

std::string Rational::decimal(unsigned digits) const {
    BigInt p = num();
    BigInt q = den();
    bool neg = p < 0;
    if (neg) p = -p;

    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;

    BigInt scaled = p * scale;
    BigInt whole = scaled / q;
    BigInt rem = scaled % q;
    if (rem * 2 >= q) ++whole;  // round half away from zero

    BigInt int_part = whole / scale;
    BigInt frac_part = whole % scale;

    std::string out;
    if (neg && !whole.is_zero()) out += '-';
    out += int_part.str();
    if (digits > 0) {
        std::string frac = frac_part.str();
        out += '.';
        out += std::string(digits - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace qtharm
