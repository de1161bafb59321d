#include "leastprime/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace leastprime {
namespace {

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow in multiply");
    return r;
}

Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow in add");
    return r;
}

}  // namespace

std::string to_string(Int128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    // Work in the negative range so INT128_MIN is representable.
    Int128 v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void Rational::assign(Int128 numerator, Int128 denominator) {
    if (denominator == 0) throw std::domain_error("rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    Int128 g = gcd128(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    Int128 g = gcd128(den_, rhs.den_);
    Int128 lhs_scale = rhs.den_ / g;
    Int128 rhs_scale = den_ / g;
    Int128 n = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
    // gcd(n, den_*lhs_scale) divides g * lhs_scale * rhs_scale; reduce by g first to stay in range.
    Int128 g2 = gcd128(n, g);
    *this = Rational(n / g2, checked_mul(den_ / g2, lhs_scale));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    Int128 g1 = gcd128(num_, rhs.den_);
    Int128 g2 = gcd128(rhs.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    Int128 n = checked_mul(num_ / g1, rhs.num_ / g2);
    Int128 d = checked_mul(den_ / g2, rhs.den_ / g1);
    num_ = n;
    den_ = d;
    if (num_ == 0) den_ = 1;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = abs128(rhs.num_);
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    Rational diff = lhs - rhs;
    return diff.num() <=> Int128{0};
}

long double Rational::to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

namespace {

Int128 parse_int128(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty integer");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("rational: malformed integer '" + text + "'");
    Int128 v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("rational: malformed integer '" + text + "'");
        v = checked_add(checked_mul(v, 10), c - '0');
    }
    return negative ? -v : v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int128(text), Int128{1});
    return Rational(parse_int128(text.substr(0, slash)), parse_int128(text.substr(slash + 1)));
}

Rational inverse_power(std::uint64_t p, int k) {
    Int128 d = 1;
    for (int i = 0; i < k; ++i) d = checked_mul(d, static_cast<Int128>(p));
    return Rational(Int128{1}, d);
}

}  // namespace leastprime
