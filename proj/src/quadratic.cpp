#include "leastprime/quadratic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>

#include "leastprime/errors.hpp"
#include "leastprime/series.hpp"

namespace leastprime {
namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

constexpr std::uint64_t kBlock = 1 << 16;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

/// flags[i] = 1 iff lo + i is squarefree, for i < hi - lo.
void squarefree_block(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& base,
                      std::vector<char>& flags) {
    flags.assign(hi - lo, 1);
    for (std::uint64_t p : base) {
        std::uint64_t sq = p * p;
        if (sq >= hi) break;
        for (std::uint64_t j = (lo + sq - 1) / sq * sq; j < hi; j += sq) flags[j - lo] = 0;
    }
    if (lo == 0 && hi > 0) flags[0] = 0;
}

/// Visits fundamental discriminants with lo <= |D| < hi in ascending |D|.
template <typename Fn>
void visit_block(std::uint64_t lo, std::uint64_t hi, DiscSign sign, const std::vector<std::uint64_t>& base,
                 std::vector<char>& whole, std::vector<char>& quarter, Fn&& fn) {
    squarefree_block(lo, hi, base, whole);
    std::uint64_t qlo = lo / 4;
    squarefree_block(qlo, hi / 4 + 1, base, quarter);
    const bool want_neg = sign != DiscSign::Positive;
    const bool want_pos = sign != DiscSign::Negative;
    for (std::uint64_t a = lo; a < hi; ++a) {
        bool neg = false, pos = false;
        if (a % 2 == 1) {
            if (whole[a - lo]) {
                pos = a % 4 == 1 && a != 1;
                neg = a % 4 == 3;
            }
        } else if (a % 4 == 0) {
            std::uint64_t m = a / 4;
            if (quarter[m - qlo]) {
                pos = m % 4 == 2 || m % 4 == 3;
                neg = m % 4 == 1 || m % 4 == 2;
            }
        }
        if (neg && want_neg) fn(-static_cast<std::int64_t>(a));
        if (pos && want_pos) fn(static_cast<std::int64_t>(a));
    }
}

/// Runs task(index, count, sum) for index in [0, tasks) on `threads`
/// threads; partials are exact integers so the total is order-free.
template <typename Task>
std::pair<std::uint64_t, std::uint64_t> parallel_sum(std::uint64_t tasks, unsigned threads, Task&& task) {
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> count{0}, sum{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        std::uint64_t c = 0, s = 0;
        try {
            for (std::uint64_t i = next++; i < tasks; i = next++) task(i, c, s);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
        count += c;
        sum += s;
    };
    unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n = static_cast<unsigned>(std::clamp<std::uint64_t>(tasks, 1, n));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return {count.load(), sum.load()};
}

SignTarget target_of(QuadQuantity q) {
    switch (q) {
        case QuadQuantity::NPlus: return SignTarget::Plus;
        case QuadQuantity::NMinus: return SignTarget::Minus;
        case QuadQuantity::nPlus: return SignTarget::NotPlus;
        case QuadQuantity::nMinus: return SignTarget::NotMinus;
        case QuadQuantity::ErdosPrime: return SignTarget::Minus;
    }
    return SignTarget::Minus;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    if (n < 0 && a < 0) k = -k;
    std::uint64_t m = magnitude(n);
    int v = std::countr_zero(m);
    m >>= v;
    if (v % 2 == 1) k *= kTwoTable[static_cast<std::uint64_t>(a) & 7];
    // m is odd and positive; fold in (-1/m).
    if (a < 0 && m % 4 == 3) k = -k;
    std::uint64_t b = magnitude(a) % m;
    while (b != 0) {
        while (b % 2 == 0) {
            b /= 2;
            if (m % 8 == 3 || m % 8 == 5) k = -k;
        }
        std::swap(b, m);
        if (b % 4 == 3 && m % 4 == 3) k = -k;
        b %= m;
    }
    return m == 1 ? k : 0;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(magnitude(d));
    if (r != 0) return false;
    std::int64_t m = d / 4;
    std::int64_t mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && is_squarefree(magnitude(m));
}

FundamentalDiscriminant::FundamentalDiscriminant(std::int64_t d) : value_(d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument(std::to_string(d) + " is not a fundamental discriminant");
}

FundamentalDiscriminant FundamentalDiscriminant::of_field_generated_by(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("Q(sqrt(0)) is not a quadratic field");
    std::uint64_t rest = magnitude(n), core = 1;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e % 2 == 1) core *= p;
    }
    core *= rest;
    auto s = static_cast<std::int64_t>(core) * (n < 0 ? -1 : 1);
    if (s == 1) throw std::invalid_argument(std::to_string(n) + " is a square");
    return FundamentalDiscriminant(((s % 4) + 4) % 4 == 1 ? s : 4 * s);
}

void for_each_fundamental_discriminant(std::uint64_t x, DiscSign sign, const std::function<void(std::int64_t)>& fn) {
    if (x < 3) throw std::invalid_argument("fundamental discriminants: X must be at least 3");
    std::vector<std::uint64_t> base = primes_up_to(isqrt(x) + 1);
    std::vector<char> whole, quarter;
    for (std::uint64_t lo = 1; lo <= x; lo += kBlock)
        visit_block(lo, std::min(x + 1, lo + kBlock), sign, base, whole, quarter, fn);
}

std::vector<std::int64_t> fundamental_discriminants(std::uint64_t x, DiscSign sign) {
    std::vector<std::int64_t> out;
    for_each_fundamental_discriminant(x, sign, [&](std::int64_t d) { out.push_back(d); });
    return out;
}

std::uint64_t first_sign_prime(std::int64_t d, SignTarget target, const PrimeTable& primes) {
    for (std::uint64_t p : primes.primes()) {
        int k = kronecker(d, static_cast<std::int64_t>(p));
        bool hit = false;
        switch (target) {
            case SignTarget::Plus: hit = k == 1; break;
            case SignTarget::Minus: hit = k == -1; break;
            case SignTarget::NotPlus: hit = k != 1; break;
            case SignTarget::NotMinus: hit = k != -1; break;
        }
        if (hit) return p;
    }
    throw InvariantViolation("no prime below " + std::to_string(primes.limit()) + " meets the sign target for D = " +
                             std::to_string(d));
}

std::string to_string(QuadQuantity q) {
    switch (q) {
        case QuadQuantity::NPlus: return "N+1";
        case QuadQuantity::NMinus: return "N-1";
        case QuadQuantity::nPlus: return "n+1";
        case QuadQuantity::nMinus: return "n-1";
        case QuadQuantity::ErdosPrime: return "erdos-prime";
    }
    return "?";
}

QuadQuantity parse_quad_quantity(const std::string& text) {
    for (QuadQuantity q : {QuadQuantity::NPlus, QuadQuantity::NMinus, QuadQuantity::nPlus, QuadQuantity::nMinus,
                           QuadQuantity::ErdosPrime})
        if (to_string(q) == text) return q;
    throw std::invalid_argument("unknown quadratic quantity '" + text + "'");
}

std::string to_string(DiscSign s) {
    switch (s) {
        case DiscSign::Positive: return "+";
        case DiscSign::Negative: return "-";
        case DiscSign::Both: return "both";
    }
    return "?";
}

DiscSign parse_disc_sign(const std::string& text) {
    for (DiscSign s : {DiscSign::Positive, DiscSign::Negative, DiscSign::Both})
        if (to_string(s) == text) return s;
    throw std::invalid_argument("unknown discriminant sign '" + text + "'");
}

QuadraticAverage quadratic_averages(std::uint64_t x, DiscSign sign, QuadQuantity quantity, unsigned threads,
                                    const PrimeTable& primes) {
    if (x < 3) throw std::invalid_argument("quadratic averages: X must be at least 3");
    QuadraticAverage result;
    result.quantity = quantity;
    result.sign = sign;
    result.x = x;
    const SignTarget target = target_of(quantity);
    std::pair<std::uint64_t, std::uint64_t> totals;
    if (quantity == QuadQuantity::ErdosPrime) {
        // For odd p, D = +-p with D = 1 mod 4 is fundamental and chi_D(q) = (q/p),
        // so the least inert prime is the least quadratic non-residue mod p.
        std::vector<std::uint64_t> local;
        std::span<const std::uint64_t> candidates = primes.primes();
        if (x > primes.limit()) {
            local = primes_up_to(x);
            candidates = local;
        }
        constexpr std::uint64_t kChunk = 4096;
        totals = parallel_sum((candidates.size() + kChunk - 1) / kChunk, threads,
                              [&](std::uint64_t chunk, std::uint64_t& c, std::uint64_t& s) {
                                  std::size_t end = std::min<std::size_t>(candidates.size(), (chunk + 1) * kChunk);
                                  for (std::size_t i = chunk * kChunk; i < end; ++i) {
                                      std::uint64_t p = candidates[i];
                                      if (p == 2 || p > x) continue;
                                      auto d = static_cast<std::int64_t>(p);
                                      s += first_sign_prime(p % 4 == 1 ? d : -d, target, primes);
                                      ++c;
                                  }
                              });
        result.predicted = static_cast<double>(erdos_constant(kDefaultEps, primes).value);
    } else {
        std::vector<std::uint64_t> base = primes_up_to(isqrt(x) + 1);
        totals = parallel_sum((x + kBlock - 1) / kBlock, threads,
                              [&](std::uint64_t block, std::uint64_t& c, std::uint64_t& s) {
                                  std::vector<char> whole, quarter;
                                  std::uint64_t lo = block * kBlock + 1;
                                  std::uint64_t hi = std::min(x + 1, lo + kBlock);
                                  visit_block(lo, hi, sign, base, whole, quarter, [&](std::int64_t d) {
                                      s += first_sign_prime(d, target, primes);
                                      ++c;
                                  });
                              });
        bool little = quantity == QuadQuantity::nPlus || quantity == QuadQuantity::nMinus;
        result.predicted = static_cast<double>(
            (little ? quadratic_little_n(kDefaultEps, primes) : pollack_constant(kDefaultEps, primes)).value);
    }

    result.count = totals.first;
    result.sum = totals.second;
    if (result.count > 0) result.mean = static_cast<double>(result.sum) / static_cast<double>(result.count);
    return result;
}

}  // namespace leastprime
