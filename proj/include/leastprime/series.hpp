#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "leastprime/primes.hpp"
#include "leastprime/rational.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime {

/// Upper bounds on hit(p) and 1 - hit(p) over every prime p > q.
struct TailBounds {
    long double hit_max;
    long double survive_max;
};

/// A per-prime Bernoulli model: at each prime, in increasing order, the
/// scanned quantity is decided with probability hit(p).
///
/// Every series here is E[first prime decided] =
///   sum_q q * hit(q) * prod_{p<q} (1 - hit(p)).
/// The tail-bounds callback lets the evaluator bound the mass it omits.
class HitModel {
public:
    using HitFn = std::function<Rational(std::uint64_t)>;
    using TailFn = std::function<TailBounds(std::uint64_t)>;

    HitModel(std::string name, HitFn hit, TailFn tail_bounds);

    /// hit(p) = r at every prime.
    static HitModel constant(const Rational& r);

    const std::string& name() const { return name_; }

    /// Throws InvariantViolation when hit(p) falls outside [0, 1].
    Rational hit(std::uint64_t p) const;
    Rational survive(std::uint64_t p) const { return Rational(1) - hit(p); }
    TailBounds tail_bounds(std::uint64_t after_prime) const { return tail_(after_prime); }

private:
    std::string name_;
    HitFn hit_;
    TailFn tail_;
};

struct SeriesResult {
    long double value = 0;
    std::size_t terms_used = 0;
    std::uint64_t last_prime = 0;
    long double tail_estimate = 0;  // bound on the omitted mass
    double requested_eps = 0;
    std::string model;

    friend bool operator==(const SeriesResult&, const SeriesResult&) = default;
};

inline constexpr double kDefaultEps = 1e-10;

/// Sums the first-hit series until the tail bound drops to `eps`. At least
/// the q = 2 term is always included. Throws SeriesDivergence when the
/// prime table runs out first, std::invalid_argument for eps <= 0.
SeriesResult first_hit_expectation(const HitModel& model, double eps = kDefaultEps,
                                   const PrimeTable& primes = PrimeTable::standard());

/// Partial sum over primes q <= cutoff, with the tail bound at that cutoff.
SeriesResult truncated_expectation(const HitModel& model, std::uint64_t cutoff,
                                   const PrimeTable& primes = PrimeTable::standard());

/// Bound on sum_{m>k} q_m hit(q_m) prod_{i<m}(1 - hit(q_i)) given the survival
/// product through the k-th prime (1-based index k, prime q_k).
long double tail_bound(const HitModel& model, std::size_t k, long double survival, const PrimeTable& primes);

// Models behind each published constant.

/// n_{K,C}: decided once p ramifies or Frob_p leaves C.
HitModel little_n_model(int n, const CycleType& ct);
/// N_{K,C}: decided once Frob_p lands in C.
HitModel big_N_model(int n, const CycleType& ct);
/// N_{K,C'} for C' the union of the classes outside A_n.
HitModel odd_union_model(int n);
/// n_{F,+-1} over quadratic fields: ramified or the other sign.
HitModel quadratic_little_n_model();
/// N_{D,+-1} over fundamental discriminants.
HitModel pollack_model();
/// hit = 1/2 at every prime.
HitModel erdos_model();

SeriesResult avg_little_n(int n, const CycleType& ct, double eps = kDefaultEps,
                          const PrimeTable& primes = PrimeTable::standard());
SeriesResult avg_big_N(int n, const CycleType& ct, double eps = kDefaultEps,
                       const PrimeTable& primes = PrimeTable::standard());
SeriesResult avg_big_N_union_odd(int n, double eps = kDefaultEps, const PrimeTable& primes = PrimeTable::standard());
SeriesResult quadratic_little_n(double eps = kDefaultEps, const PrimeTable& primes = PrimeTable::standard());
SeriesResult pollack_constant(double eps = kDefaultEps, const PrimeTable& primes = PrimeTable::standard());
SeriesResult erdos_constant(double eps = kDefaultEps, const PrimeTable& primes = PrimeTable::standard());

}  // namespace leastprime
