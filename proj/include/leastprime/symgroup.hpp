#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leastprime/rational.hpp"

namespace leastprime {

/// A partition of n, naming a conjugacy class of S_n (equivalently, the
/// factorization degree pattern of an unramified prime).
class CycleType {
public:
    /// Sorts `parts` non-increasing. Throws std::invalid_argument on an
    /// empty list or a part < 1.
    explicit CycleType(std::vector<int> parts);

    static CycleType identity(int n);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }

    /// True when the class lies in A_n.
    bool is_even() const;

    /// Comma-separated parts, e.g. "2,1,1".
    std::string to_string() const;

    /// Representative permutation in cycle notation, e.g. "(12)(34)"; "e" for the identity.
    std::string cycle_notation() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType& lhs, const CycleType& rhs) {
        return lhs.parts_ <=> rhs.parts_;
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// |C| / |S_n| as a reduced exact rational.
using ClassDensity = Rational;

std::uint64_t factorial(int n);

/// Every partition of n once, in descending lexicographic order:
/// (n), (n-1,1), ..., (1,...,1). Throws for n < 1 or n > 20.
std::vector<CycleType> cycle_types(int n);

/// n! / prod_k (k^{m_k} m_k!).
std::uint64_t class_size(const CycleType& ct);

ClassDensity class_density(const CycleType& ct);

/// Sorts a factor-degree multiset into a cycle type; throws
/// std::invalid_argument unless the degrees are positive and sum to n.
CycleType class_of_degree_pattern(std::span<const int> degrees, int n);

}  // namespace leastprime
