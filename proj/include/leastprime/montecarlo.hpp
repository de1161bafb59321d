#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leastprime/primes.hpp"
#include "leastprime/series.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime {

struct McEstimate {
    double mean = 0;
    double std_error = 0;  // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string model;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// A HitModel with hit(p) converted once to double for every prime the
/// walk can plausibly reach (until the survival mass is below 1e-300, or
/// the whole table).
class CompiledHitModel {
public:
    CompiledHitModel(const HitModel& model, const PrimeTable& primes = PrimeTable::standard());

    const std::string& name() const { return name_; }
    std::size_t size() const { return hits_.size(); }

    /// First prime at which an independent Bernoulli(hit(p)) succeeds, using
    /// the stream for (seed, index). Throws InvariantViolation when the walk
    /// leaves the compiled range.
    std::uint64_t sample(std::uint64_t seed, std::uint64_t index) const;

private:
    std::string name_;
    const PrimeTable* primes_;
    std::vector<double> hits_;
};

std::uint64_t sample_first_hit(const HitModel& model, std::uint64_t seed, std::uint64_t index = 0,
                               const PrimeTable& primes = PrimeTable::standard());

enum class McQuantity { LittleN, BigN, BigNOddUnion };

std::string to_string(McQuantity q);
McQuantity parse_mc_quantity(const std::string& text);

/// Mean and standard error over `samples` walks, sample i keyed by (seed, i).
/// Sums are exact integers, so the result is bit-identical for any thread count.
McEstimate estimate_model(const HitModel& model, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0,
                          const PrimeTable& primes = PrimeTable::standard());

/// `ct` is ignored for BigNOddUnion.
McEstimate estimate(int n, const CycleType& ct, McQuantity quantity, std::uint64_t samples, std::uint64_t seed,
                    unsigned threads = 0, const PrimeTable& primes = PrimeTable::standard());

}  // namespace leastprime
