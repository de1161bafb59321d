#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "leastprime/polymod.hpp"
#include "leastprime/primes.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime {

/// A number field given by a monic defining polynomial.
struct FieldRecord {
    std::vector<std::int64_t> coeffs;  // constant term first, leading 1 included
    std::optional<BigInt> field_disc;
    std::string label;
    std::optional<int> r2;  // number of complex places, when the source records it

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Validates degree, monicity and, when d_K is present, that disc(f)/d_K is
/// a perfect square. Throws InputError.
void validate(const FieldRecord& rec);

struct Ramified {
    friend bool operator==(const Ramified&, const Ramified&) = default;
};
struct Indeterminate {
    friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
};

struct FrobOutcome {
    std::uint64_t prime;
    std::variant<CycleType, Ramified, Indeterminate> kind;

    friend bool operator==(const FrobOutcome&, const FrobOutcome&) = default;
};

/// Classifies p. Primes dividing disc(f) but not d_K (or with d_K unknown)
/// are Indeterminate: the defining order may be non-maximal there.
FrobOutcome frobenius_outcome(const FieldRecord& rec, std::uint64_t p);

/// Lazily computed per-prime outcomes of one field, in increasing prime order.
/// Both first-prime statistics read the same stream.
class OutcomeStream {
public:
    OutcomeStream(const FieldRecord& rec, const PrimeTable& primes);

    /// Outcome at the i-th prime (0-based); throws std::out_of_range past the table.
    const FrobOutcome& at(std::size_t i);
    const PrimeTable& primes() const { return *primes_; }
    const BigInt& polynomial_discriminant() const { return poly_disc_; }

private:
    FrobOutcome classify(std::uint64_t p) const;

    const FieldRecord* rec_;
    const PrimeTable* primes_;
    BigInt poly_disc_;
    std::vector<FrobOutcome> cache_;
};

struct NotFound {
    std::uint64_t bound;
    friend bool operator==(const NotFound&, const NotFound&) = default;
};
struct Tainted {
    std::uint64_t prime;  // the Indeterminate prime met before a decision
    friend bool operator==(const Tainted&, const Tainted&) = default;
};

using ScanValue = std::variant<std::uint64_t, NotFound, Tainted>;

inline constexpr std::uint64_t kDefaultScanBound = 10'000;

/// Smallest p <= bound that is ramified or has Frob_p outside C.
ScanValue little_n_of_field(const FieldRecord& rec, const CycleType& ct, std::uint64_t bound = kDefaultScanBound,
                            const PrimeTable& primes = PrimeTable::standard());
/// Smallest p <= bound with Frob_p in C; ramified primes never qualify.
ScanValue big_N_of_field(const FieldRecord& rec, const CycleType& ct, std::uint64_t bound = kDefaultScanBound,
                         const PrimeTable& primes = PrimeTable::standard());

ScanValue little_n_from(OutcomeStream& stream, const CycleType& ct, std::uint64_t bound);
ScanValue big_N_from(OutcomeStream& stream, const CycleType& ct, std::uint64_t bound);

enum class ScanQuantity { LittleN, BigN };

std::string to_string(ScanQuantity q);
ScanQuantity parse_scan_quantity(const std::string& text);

struct ScanRow {
    std::string label;
    ScanValue value;
    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanReport {
    int degree = 0;
    CycleType cls = CycleType::identity(1);
    ScanQuantity quantity = ScanQuantity::LittleN;
    std::uint64_t bound = kDefaultScanBound;
    std::vector<ScanRow> rows;  // input order
    std::size_t decided = 0;
    std::size_t tainted = 0;
    std::size_t not_found = 0;
    std::optional<double> empirical_mean;
    double predicted = 0;
    std::optional<double> abs_deviation;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Scans every record (in parallel when threads != 1) and attaches the
/// series prediction for (degree, class, quantity). Throws InputError when
/// records mix degrees or disagree with the class degree, InvariantViolation
/// when a prime off the discriminant gives a non-squarefree reduction.
ScanReport aggregate_scan(std::span<const FieldRecord> records, const CycleType& ct, ScanQuantity quantity,
                          std::uint64_t bound = kDefaultScanBound, unsigned threads = 0,
                          const PrimeTable& primes = PrimeTable::standard());

/// JSON lines: {"coeffs":[...], "disc":-23, "label":"..."}; "disc" may be
/// a number or a decimal string. Blank lines are skipped. Throws InputError
/// naming the offending line.
std::vector<FieldRecord> read_jsonl_records(std::istream& in);

/// CSV with a header row naming label, disc and c0..cn (any order);
/// an empty disc cell means unknown.
std::vector<FieldRecord> read_csv_records(std::istream& in);

}  // namespace leastprime
