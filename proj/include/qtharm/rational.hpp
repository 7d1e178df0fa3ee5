#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace qtharm {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction. Always normalized: lowest terms,
// denominator > 0, zero is 0/1. All arithmetic is exact; decimal output
// exists only for display and is explicitly approximate.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long v) : value_(v) {}  // NOLINT: implicit by design
    Rational(const BigInt& num, const BigInt& den);

    static Rational parse(std::string_view text);  // "p/q" or "p"

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical "p/q" (plain "p" when q = 1).
    std::string str() const;

    // Rounded decimal approximation with the given number of fraction digits.
    std::string decimal(unsigned digits) const;

private:
    boost::multiprecision::cpp_rational value_;

    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
};

inline Rational rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace qtharm
