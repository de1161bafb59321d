#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leastprime/rational.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime {

/// A ramified splitting type with mass c(p) = coefficient / p^exponent.
struct RamifiedType {
    std::string label;  // e.g. "1^2 1", "2^2 1", "1^5"
    Rational coefficient;
    int exponent;

    Rational mass(std::uint64_t p) const { return coefficient * inverse_power(p, exponent); }
};

/// Local density model for S_n-fields, n in {3, 4, 5}. At a prime p an
/// unramified class C has density (|C|/n!) / (1 + f(p)) and a ramified
/// type r has density c_r(p) / (1 + f(p)), where f(p) = sum_r c_r(p).
class LocalModel {
public:
    /// Throws std::invalid_argument unless n is 3, 4 or 5.
    static const LocalModel& for_degree(int n);

    int degree() const { return degree_; }
    std::span<const RamifiedType> ramified_types() const { return types_; }

    /// f(p) from its own polynomial in 1/p, independent of the type list.
    Rational f(std::uint64_t p) const;

    Rational unramified_density(std::uint64_t p, const CycleType& ct) const;
    Rational ramified_density_total(std::uint64_t p) const;
    std::vector<std::pair<std::string, Rational>> ramified_densities(std::uint64_t p) const;

private:
    LocalModel(int degree, std::vector<int> f_coefficients, std::vector<RamifiedType> types);

    int degree_;
    std::vector<int> f_coefficients_;  // coefficient of p^-(i+1)
    std::vector<RamifiedType> types_;
};

Rational f(int n, std::uint64_t p);
Rational unramified_density(int n, std::uint64_t p, const CycleType& ct);
Rational ramified_density_total(int n, std::uint64_t p);
std::vector<std::pair<std::string, Rational>> ramified_densities(int n, std::uint64_t p);

}  // namespace leastprime
