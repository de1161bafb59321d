#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace leastprime {

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;

/// All primes up to `limit` inclusive, by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Rosser–Schoenfeld upper bound for the m-th prime (1-based):
/// p_m < m (ln m + ln ln m) for m >= 6; exact small primes below that.
double nth_prime_upper_bound(std::size_t m);

/// Immutable ascending table of primes, shared read-only between threads.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit);

    /// Process-wide table at kDefaultSieveLimit, built on first use.
    static const PrimeTable& standard();

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

}  // namespace leastprime
