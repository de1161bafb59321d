#include "leastprime/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "leastprime/errors.hpp"
#include "leastprime/philox.hpp"

namespace leastprime {
namespace {

constexpr double kNegligibleSurvival = 1e-300;
constexpr std::uint64_t kChunk = 8192;

struct Moments {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
};

}  // namespace

CompiledHitModel::CompiledHitModel(const HitModel& model, const PrimeTable& primes)
    : name_(model.name()), primes_(&primes) {
    long double survival = 1;
    for (std::uint64_t p : primes.primes()) {
        Rational h = model.hit(p);
        hits_.push_back(h.to_double());
        survival *= (Rational(1) - h).to_long_double();
        if (survival < kNegligibleSurvival) break;
    }
}

std::uint64_t CompiledHitModel::sample(std::uint64_t seed, std::uint64_t index) const {
    SampleStream stream(seed, index);
    for (std::size_t i = 0; i < hits_.size(); ++i)
        if (stream.next() < hits_[i]) return (*primes_)[i];
    throw InvariantViolation("monte carlo '" + name_ + "': sample " + std::to_string(index) + " walked past prime " +
                             std::to_string((*primes_)[hits_.size() - 1]) + " without a hit");
}

std::uint64_t sample_first_hit(const HitModel& model, std::uint64_t seed, std::uint64_t index,
                               const PrimeTable& primes) {
    return CompiledHitModel(model, primes).sample(seed, index);
}

std::string to_string(McQuantity q) {
    switch (q) {
        case McQuantity::LittleN: return "little-n";
        case McQuantity::BigN: return "big-N";
        case McQuantity::BigNOddUnion: return "big-N-odd-union";
    }
    return "?";
}

McQuantity parse_mc_quantity(const std::string& text) {
    for (McQuantity q : {McQuantity::LittleN, McQuantity::BigN, McQuantity::BigNOddUnion})
        if (to_string(q) == text) return q;
    throw std::invalid_argument("unknown monte carlo quantity '" + text + "'");
}

McEstimate estimate_model(const HitModel& model, std::uint64_t samples, std::uint64_t seed, unsigned threads,
                          const PrimeTable& primes) {
    if (samples == 0) throw std::invalid_argument("monte carlo: samples must be at least 1");
    const CompiledHitModel compiled(model, primes);

    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<Moments> partial(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                Moments m;
                for (std::uint64_t i = c * kChunk; i < std::min(samples, (c + 1) * kChunk); ++i) {
                    std::uint64_t q = compiled.sample(seed, i);
                    ++m.count;
                    m.sum += q;
                    m.sum_sq += static_cast<unsigned __int128>(q) * q;
                }
                partial[c] = m;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    unsigned count = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    count = static_cast<unsigned>(std::min<std::uint64_t>(count, chunks));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    Moments total;
    for (const Moments& m : partial) {
        total.count += m.count;
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
    }

    McEstimate out;
    out.samples = total.count;
    out.seed = seed;
    out.model = compiled.name();
    const auto n = static_cast<long double>(total.count);
    out.mean = static_cast<double>(static_cast<long double>(total.sum) / n);
    if (total.count > 1) {
        // n * sum_sq - sum^2 is computed exactly before any rounding.
        unsigned __int128 centred = static_cast<unsigned __int128>(total.count) * total.sum_sq -
                                    static_cast<unsigned __int128>(total.sum) * total.sum;
        long double variance = static_cast<long double>(centred) / (n * (n - 1));
        out.std_error = static_cast<double>(std::sqrt(variance / n));
    }
    return out;
}

McEstimate estimate(int n, const CycleType& ct, McQuantity quantity, std::uint64_t samples, std::uint64_t seed,
                    unsigned threads, const PrimeTable& primes) {
    switch (quantity) {
        case McQuantity::LittleN: return estimate_model(little_n_model(n, ct), samples, seed, threads, primes);
        case McQuantity::BigN: return estimate_model(big_N_model(n, ct), samples, seed, threads, primes);
        case McQuantity::BigNOddUnion: return estimate_model(odd_union_model(n), samples, seed, threads, primes);
    }
    throw std::invalid_argument("monte carlo: unknown quantity");
}

}  // namespace leastprime
