#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <type_traits>

namespace leastprime {

using Int128 = __int128;

std::string to_string(Int128 value);

/// Exact rational over 128-bit integers, always reduced with a positive
/// denominator. Every operation is overflow-checked and throws
/// std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;

    /// Accepts any built-in integer type, including Int128.
    template <typename N, typename D = int>
        requires(std::is_integral_v<N> || std::is_same_v<N, Int128>) &&
                (std::is_integral_v<D> || std::is_same_v<D, Int128>)
    Rational(N numerator, D denominator = 1)  // NOLINT(google-explicit-constructor)
    {
        assign(static_cast<Int128>(numerator), static_cast<Int128>(denominator));
    }

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    /// "n/d", or just "n" for integers.
    std::string str() const;

    /// Parses the str() form.
    static Rational parse(const std::string& text);

private:
    void assign(Int128 numerator, Int128 denominator);

    Int128 num_ = 0;
    Int128 den_ = 1;
};

/// 1/p^k as an exact rational.
Rational inverse_power(std::uint64_t p, int k);

}  // namespace leastprime
