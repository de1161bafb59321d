#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leastprime/primes.hpp"

namespace leastprime {

/// Kronecker symbol (a/n) for any integers, with the usual 2-adic and
/// sign extensions of the Jacobi symbol.
int kronecker(std::int64_t a, std::int64_t n);

bool is_squarefree(std::uint64_t n);

/// D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree; D != 1.
bool is_fundamental_discriminant(std::int64_t d);

/// Discriminant of a quadratic field.
class FundamentalDiscriminant {
public:
    /// Throws std::invalid_argument when `d` is not fundamental.
    explicit FundamentalDiscriminant(std::int64_t d);

    /// Discriminant of Q(sqrt(n)) for a nonzero non-square integer n.
    static FundamentalDiscriminant of_field_generated_by(std::int64_t n);

    std::int64_t value() const { return value_; }
    friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

private:
    std::int64_t value_;
};

enum class DiscSign { Positive, Negative, Both };

/// Visits every fundamental discriminant with |D| <= x of the requested
/// sign, each once, in ascending |D| (negative before positive on ties).
/// Uses a blockwise squarefree sieve. Throws std::invalid_argument for x < 3.
void for_each_fundamental_discriminant(std::uint64_t x, DiscSign sign, const std::function<void(std::int64_t)>& fn);

std::vector<std::int64_t> fundamental_discriminants(std::uint64_t x, DiscSign sign);

enum class SignTarget { Plus, Minus, NotPlus, NotMinus };

/// Smallest prime p with chi_D(p) meeting the target. Throws
/// InvariantViolation when no prime in the table qualifies.
std::uint64_t first_sign_prime(std::int64_t d, SignTarget target, const PrimeTable& primes = PrimeTable::standard());

enum class QuadQuantity { NPlus, NMinus, nPlus, nMinus, ErdosPrime };

std::string to_string(QuadQuantity q);
QuadQuantity parse_quad_quantity(const std::string& text);
std::string to_string(DiscSign s);
DiscSign parse_disc_sign(const std::string& text);

struct QuadraticAverage {
    QuadQuantity quantity = QuadQuantity::NPlus;
    DiscSign sign = DiscSign::Both;
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    std::optional<double> mean;
    double predicted = 0;

    friend bool operator==(const QuadraticAverage&, const QuadraticAverage&) = default;
};

/// Mean of first_sign_prime over all fundamental discriminants with
/// |D| <= x of the given sign, plus the limiting constant. ErdosPrime
/// ranges over primes 2 < p <= x instead, taking the least quadratic
/// non-residue mod p (sign is ignored).
QuadraticAverage quadratic_averages(std::uint64_t x, DiscSign sign, QuadQuantity quantity, unsigned threads = 0,
                                    const PrimeTable& primes = PrimeTable::standard());

}  // namespace leastprime
