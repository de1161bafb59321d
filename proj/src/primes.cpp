#include "leastprime/primes.hpp"

#include <algorithm>
#include <cmath>

namespace leastprime {
namespace {

constexpr std::uint64_t kSegment = 1 << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;

    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;

    // Base primes up to sqrt(limit) with a plain sieve.
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    std::vector<char> segment(kSegment);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        std::uint64_t hi = std::min(limit + 1, lo + kSegment);
        std::fill(segment.begin(), segment.end(), 1);
        for (std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j < hi; j += p) segment[j - lo] = 0;
        }
        for (std::uint64_t i = lo; i < hi; ++i)
            if (segment[i - lo]) out.push_back(i);
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

double nth_prime_upper_bound(std::size_t m) {
    static constexpr double kSmall[] = {2, 3, 5, 7, 11, 13};
    if (m == 0) return 0;
    if (m <= 6) return kSmall[m - 1];
    double lm = std::log(static_cast<double>(m));
    return static_cast<double>(m) * (lm + std::log(lm));
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit), primes_(primes_up_to(limit)) {}

const PrimeTable& PrimeTable::standard() {
    static const PrimeTable table(kDefaultSieveLimit);
    return table;
}

}  // namespace leastprime
