#include "leastprime/frobscan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "leastprime/errors.hpp"
#include "leastprime/series.hpp"

namespace leastprime {
namespace {

bool divides(std::uint64_t p, const BigInt& n) { return n % p == 0; }

std::string record_name(const FieldRecord& rec) { return rec.label.empty() ? std::string("<unlabelled>") : rec.label; }

FrobOutcome classify_prime(const FieldRecord& rec, const BigInt& disc, std::uint64_t p) {
    if (!divides(p, disc)) {
        auto pattern = degree_pattern_mod_p(rec.coeffs, p);
        if (!pattern)
            throw InvariantViolation("field '" + record_name(rec) + "': reduction mod " + std::to_string(p) +
                                     " is not squarefree although p does not divide the discriminant");
        return FrobOutcome{p, class_of_degree_pattern(*pattern, rec.degree())};
    }
    if (rec.field_disc && divides(p, *rec.field_disc)) return FrobOutcome{p, Ramified{}};
    return FrobOutcome{p, Indeterminate{}};
}

}  // namespace

void validate(const FieldRecord& rec) {
    int n = rec.degree();
    if (n < 3 || n > 5)
        throw InputError("field '" + record_name(rec) + "': degree " + std::to_string(n) + " unsupported (3, 4 or 5)");
    if (rec.coeffs.back() != 1) throw InputError("field '" + record_name(rec) + "': polynomial is not monic");
    BigInt disc = poly_disc(rec.coeffs);
    if (disc == 0) throw InputError("field '" + record_name(rec) + "': polynomial has a repeated root");
    if (rec.field_disc) {
        const BigInt& dk = *rec.field_disc;
        if (dk == 0 || disc % dk != 0)
            throw InputError("field '" + record_name(rec) + "': d_K does not divide the polynomial discriminant");
        BigInt index2 = disc / dk;
        if (index2 < 0 || boost::multiprecision::sqrt(index2) * boost::multiprecision::sqrt(index2) != index2)
            throw InputError("field '" + record_name(rec) + "': disc(f)/d_K is not a perfect square");
    }
}

OutcomeStream::OutcomeStream(const FieldRecord& rec, const PrimeTable& primes)
    : rec_(&rec), primes_(&primes), poly_disc_(poly_disc(rec.coeffs)) {}

FrobOutcome OutcomeStream::classify(std::uint64_t p) const { return classify_prime(*rec_, poly_disc_, p); }

const FrobOutcome& OutcomeStream::at(std::size_t i) {
    if (i >= primes_->size()) throw std::out_of_range("outcome stream: prime index beyond the sieve limit");
    while (cache_.size() <= i) cache_.push_back(classify((*primes_)[cache_.size()]));
    return cache_[i];
}

FrobOutcome frobenius_outcome(const FieldRecord& rec, std::uint64_t p) {
    return classify_prime(rec, poly_disc(rec.coeffs), p);
}

namespace {

void check_bound(const OutcomeStream& stream, std::uint64_t bound) {
    if (bound > stream.primes().limit())
        throw std::invalid_argument("scan bound " + std::to_string(bound) + " exceeds the sieve limit " +
                                    std::to_string(stream.primes().limit()));
}

}  // namespace

ScanValue little_n_from(OutcomeStream& stream, const CycleType& ct, std::uint64_t bound) {
    check_bound(stream, bound);
    const PrimeTable& primes = stream.primes();
    for (std::size_t i = 0; i < primes.size() && primes[i] <= bound; ++i) {
        const FrobOutcome& o = stream.at(i);
        if (std::holds_alternative<Indeterminate>(o.kind)) return Tainted{o.prime};
        if (std::holds_alternative<Ramified>(o.kind)) return o.prime;
        if (std::get<CycleType>(o.kind) != ct) return o.prime;
    }
    return NotFound{bound};
}

ScanValue big_N_from(OutcomeStream& stream, const CycleType& ct, std::uint64_t bound) {
    check_bound(stream, bound);
    const PrimeTable& primes = stream.primes();
    for (std::size_t i = 0; i < primes.size() && primes[i] <= bound; ++i) {
        const FrobOutcome& o = stream.at(i);
        if (std::holds_alternative<Indeterminate>(o.kind)) return Tainted{o.prime};
        if (const auto* c = std::get_if<CycleType>(&o.kind); c && *c == ct) return o.prime;
    }
    return NotFound{bound};
}

ScanValue little_n_of_field(const FieldRecord& rec, const CycleType& ct, std::uint64_t bound, const PrimeTable& primes) {
    OutcomeStream stream(rec, primes);
    return little_n_from(stream, ct, bound);
}

ScanValue big_N_of_field(const FieldRecord& rec, const CycleType& ct, std::uint64_t bound, const PrimeTable& primes) {
    OutcomeStream stream(rec, primes);
    return big_N_from(stream, ct, bound);
}

std::string to_string(ScanQuantity q) { return q == ScanQuantity::LittleN ? "little-n" : "big-N"; }

ScanQuantity parse_scan_quantity(const std::string& text) {
    if (text == "little-n") return ScanQuantity::LittleN;
    if (text == "big-N") return ScanQuantity::BigN;
    throw std::invalid_argument("unknown scan quantity '" + text + "' (expected little-n or big-N)");
}

ScanReport aggregate_scan(std::span<const FieldRecord> records, const CycleType& ct, ScanQuantity quantity,
                          std::uint64_t bound, unsigned threads, const PrimeTable& primes) {
    const int n = ct.degree();
    for (const FieldRecord& rec : records) {
        if (rec.degree() != n)
            throw InputError("field '" + record_name(rec) + "' has degree " + std::to_string(rec.degree()) +
                             " but the class " + ct.to_string() + " belongs to S_" + std::to_string(n));
    }
    if (bound > primes.limit())
        throw std::invalid_argument("scan bound " + std::to_string(bound) + " exceeds the sieve limit");

    ScanReport report;
    report.degree = n;
    report.cls = ct;
    report.quantity = quantity;
    report.bound = bound;
    report.rows.resize(records.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            try {
                OutcomeStream stream(records[i], primes);
                ScanValue v = quantity == ScanQuantity::LittleN ? little_n_from(stream, ct, bound)
                                                                : big_N_from(stream, ct, bound);
                report.rows[i] = ScanRow{records[i].label, v};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned count = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(1, records.size())));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::uint64_t sum = 0;
    for (const ScanRow& row : report.rows) {
        if (const auto* p = std::get_if<std::uint64_t>(&row.value)) {
            sum += *p;
            ++report.decided;
        } else if (std::holds_alternative<Tainted>(row.value)) {
            ++report.tainted;
        } else {
            ++report.not_found;
        }
    }
    SeriesResult prediction = quantity == ScanQuantity::LittleN ? avg_little_n(n, ct, kDefaultEps, primes)
                                                                : avg_big_N(n, ct, kDefaultEps, primes);
    report.predicted = static_cast<double>(prediction.value);
    if (report.decided > 0) {
        report.empirical_mean = static_cast<double>(sum) / static_cast<double>(report.decided);
        report.abs_deviation = std::abs(*report.empirical_mean - report.predicted);
    }
    return report;
}

}  // namespace leastprime
