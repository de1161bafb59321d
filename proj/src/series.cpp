#include "leastprime/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "leastprime/errors.hpp"
#include "leastprime/localmodel.hpp"

namespace leastprime {
namespace {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(long double x) {
        long double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) compensation_ += (sum_ - t) + x;
        else compensation_ += (x - t) + sum_;
        sum_ = t;
    }
    long double value() const { return sum_ + compensation_; }

private:
    long double sum_ = 0;
    long double compensation_ = 0;
};

// The tail bound is re-evaluated at every prime early on, then every
// kTailCheckStride primes; each evaluation costs O(1 / (1 - survive_max)).
constexpr std::size_t kEagerTailChecks = 64;
constexpr std::size_t kTailCheckStride = 32;
constexpr long double kGeometricRelTol = 1e-6L;
constexpr std::size_t kMaxTailTerms = 50'000'000;

HitModel big_N_shape(std::string name, int n, Rational density) {
    const LocalModel& local = LocalModel::for_degree(n);
    auto hit = [&local, density](std::uint64_t p) { return density / (Rational(1) + local.f(p)); };
    // hit rises towards `density` as f(p) falls, so survival falls.
    auto tail = [hit, density](std::uint64_t q) {
        return TailBounds{density.to_long_double(), (Rational(1) - hit(q)).to_long_double()};
    };
    return HitModel(std::move(name), hit, tail);
}

void require_class_of(int n, const CycleType& ct) {
    if (ct.degree() != n)
        throw std::invalid_argument("class " + ct.to_string() + " is not a class of S_" + std::to_string(n));
}

std::string class_tag(int n, const CycleType& ct) {
    return "S" + std::to_string(n) + " " + ct.cycle_notation();
}

}  // namespace

HitModel::HitModel(std::string name, HitFn hit, TailFn tail_bounds)
    : name_(std::move(name)), hit_(std::move(hit)), tail_(std::move(tail_bounds)) {}

HitModel HitModel::constant(const Rational& r) {
    if (r < Rational(0) || r > Rational(1))
        throw std::invalid_argument("hit model: probability " + r.str() + " outside [0, 1]");
    return HitModel(
        "constant " + r.str(), [r](std::uint64_t) { return r; },
        [r](std::uint64_t) {
            return TailBounds{r.to_long_double(), (Rational(1) - r).to_long_double()};
        });
}

Rational HitModel::hit(std::uint64_t p) const {
    Rational h = hit_(p);
    if (h < Rational(0) || h > Rational(1))
        throw InvariantViolation("hit model '" + name_ + "': hit(" + std::to_string(p) + ") = " + h.str() +
                                 " outside [0, 1]");
    return h;
}

long double tail_bound(const HitModel& model, std::size_t k, long double survival, const PrimeTable& primes) {
    constexpr long double kInf = std::numeric_limits<long double>::infinity();
    if (survival == 0) return 0;
    if (k == 0 || k > primes.size()) throw std::out_of_range("tail_bound: prime index outside table");

    TailBounds b = model.tail_bounds(primes[k - 1]);
    if (b.hit_max <= 0 || b.survive_max >= 1) return kInf;
    const long double s = b.survive_max;

    // sum_{j>=1} q_{k+j} s^{j-1}, with q_m from the table or the Rosser bound.
    long double geometric = 0;
    long double power = 1;
    for (std::size_t j = 1; j <= kMaxTailTerms; ++j) {
        std::size_t m = k + j;
        long double qm = m <= primes.size() ? static_cast<long double>(primes[m - 1])
                                            : static_cast<long double>(nth_prime_upper_bound(m));
        geometric += qm * power;
        power *= s;
        // For m >= 6, U(m+1)/U(m) <= 1 + 3/m, so the rest is dominated by a geometric series.
        long double ratio = s * (1.0L + 3.0L / static_cast<long double>(m + 1));
        if (m >= 6 && ratio < 1) {
            long double rest = static_cast<long double>(nth_prime_upper_bound(m + 1)) * power / (1 - ratio);
            if (rest <= kGeometricRelTol * geometric || power == 0) {
                geometric += rest;
                return survival * b.hit_max * geometric;
            }
        }
    }
    return kInf;
}

SeriesResult first_hit_expectation(const HitModel& model, double eps, const PrimeTable& primes) {
    if (!(eps > 0)) throw std::invalid_argument("series: eps must be positive");
    CompensatedSum sum;
    long double survival = 1;
    long double tail = std::numeric_limits<long double>::infinity();
    for (std::size_t k = 1; k <= primes.size(); ++k) {
        std::uint64_t q = primes[k - 1];
        Rational h = model.hit(q);
        sum.add(static_cast<long double>(q) * h.to_long_double() * survival);
        survival *= (Rational(1) - h).to_long_double();
        if (k <= kEagerTailChecks || k % kTailCheckStride == 0 || k == primes.size()) {
            tail = tail_bound(model, k, survival, primes);
            if (tail <= eps) {
                return SeriesResult{sum.value(), k, q, tail, eps, model.name()};
            }
        }
    }
    throw SeriesDivergence("series '" + model.name() + "': survival " + std::to_string(static_cast<double>(survival)) +
                           " and tail bound " + std::to_string(static_cast<double>(tail)) + " after all " +
                           std::to_string(primes.size()) + " primes up to " + std::to_string(primes.limit()));
}

SeriesResult truncated_expectation(const HitModel& model, std::uint64_t cutoff, const PrimeTable& primes) {
    if (cutoff > primes.limit()) throw std::invalid_argument("series: cutoff beyond the prime table");
    CompensatedSum sum;
    long double survival = 1;
    std::size_t k = 0;
    std::uint64_t last = 0;
    while (k < primes.size() && primes[k] <= cutoff) {
        std::uint64_t q = primes[k];
        Rational h = model.hit(q);
        sum.add(static_cast<long double>(q) * h.to_long_double() * survival);
        survival *= (Rational(1) - h).to_long_double();
        last = q;
        ++k;
    }
    long double tail = k == 0 ? std::numeric_limits<long double>::infinity() : tail_bound(model, k, survival, primes);
    return SeriesResult{sum.value(), k, last, tail, 0.0, model.name()};
}

HitModel little_n_model(int n, const CycleType& ct) {
    require_class_of(n, ct);
    const LocalModel& local = LocalModel::for_degree(n);
    Rational density = class_density(ct);
    auto hit = [&local, density](std::uint64_t p) {
        Rational fp = local.f(p);
        return (Rational(1) - density + fp) / (Rational(1) + fp);
    };
    // hit falls towards 1 - density as f(p) falls; survival rises towards density.
    auto tail = [hit, density](std::uint64_t q) {
        return TailBounds{hit(q).to_long_double(), density.to_long_double()};
    };
    return HitModel("little-n " + class_tag(n, ct), hit, tail);
}

HitModel big_N_model(int n, const CycleType& ct) {
    require_class_of(n, ct);
    return big_N_shape("big-N " + class_tag(n, ct), n, class_density(ct));
}

HitModel odd_union_model(int n) {
    Rational density;
    for (const CycleType& ct : cycle_types(n))
        if (!ct.is_even()) density += class_density(ct);
    return big_N_shape("big-N-odd-union S" + std::to_string(n), n, density);
}

HitModel quadratic_little_n_model() {
    auto hit = [](std::uint64_t p) {
        return Rational(static_cast<Int128>(p) + 2, 2 * (static_cast<Int128>(p) + 1));
    };
    auto tail = [hit](std::uint64_t q) { return TailBounds{hit(q).to_long_double(), 0.5L}; };
    return HitModel("quadratic-little-n", hit, tail);
}

HitModel pollack_model() {
    auto hit = [](std::uint64_t p) { return Rational(static_cast<Int128>(p), 2 * (static_cast<Int128>(p) + 1)); };
    auto tail = [hit](std::uint64_t q) { return TailBounds{0.5L, (Rational(1) - hit(q)).to_long_double()}; };
    return HitModel("pollack", hit, tail);
}

HitModel erdos_model() {
    HitModel half = HitModel::constant(Rational(1, 2));
    return HitModel(
        "erdos", [half](std::uint64_t p) { return half.hit(p); },
        [half](std::uint64_t q) { return half.tail_bounds(q); });
}

SeriesResult avg_little_n(int n, const CycleType& ct, double eps, const PrimeTable& primes) {
    return first_hit_expectation(little_n_model(n, ct), eps, primes);
}

SeriesResult avg_big_N(int n, const CycleType& ct, double eps, const PrimeTable& primes) {
    return first_hit_expectation(big_N_model(n, ct), eps, primes);
}

SeriesResult avg_big_N_union_odd(int n, double eps, const PrimeTable& primes) {
    return first_hit_expectation(odd_union_model(n), eps, primes);
}

SeriesResult quadratic_little_n(double eps, const PrimeTable& primes) {
    return first_hit_expectation(quadratic_little_n_model(), eps, primes);
}

SeriesResult pollack_constant(double eps, const PrimeTable& primes) {
    return first_hit_expectation(pollack_model(), eps, primes);
}

SeriesResult erdos_constant(double eps, const PrimeTable& primes) {
    return first_hit_expectation(erdos_model(), eps, primes);
}

}  // namespace leastprime
