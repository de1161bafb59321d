#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace leastprime {

using BigInt = boost::multiprecision::cpp_int;

/// Discriminant of a monic integer polynomial (coefficients constant term
/// first), computed exactly as (-1)^{n(n-1)/2} Res(f, f'). Throws
/// std::invalid_argument for a non-monic polynomial or degree < 2.
BigInt poly_disc(std::span<const std::int64_t> coeffs);

/// Multiset of irreducible-factor degrees of f mod p, sorted
/// non-increasing, or std::nullopt when f mod p is not squarefree.
/// Uses distinct-degree factorization; p must be prime and below 2^63.
/// Throws std::invalid_argument when p divides the leading coefficient.
std::optional<std::vector<int>> degree_pattern_mod_p(std::span<const std::int64_t> coeffs, std::uint64_t p);

namespace gf {

/// Dense polynomial over the field with p elements, constant term first,
/// no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

Poly reduce(std::span<const std::int64_t> coeffs, std::uint64_t p);
int degree(const Poly& f);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p);

}  // namespace gf
}  // namespace leastprime
