// One PASS/FAIL line per acceptance criterion. With no arguments every
// criterion runs; otherwise only the numbered ones. Exit status is 1 when
// any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "../support/naive_factor.hpp"
#include "leastprime/cli.hpp"
#include "leastprime/frobscan.hpp"
#include "leastprime/localmodel.hpp"
#include "leastprime/montecarlo.hpp"
#include "leastprime/quadratic.hpp"
#include "leastprime/reference.hpp"
#include "leastprime/series.hpp"

using namespace leastprime;

namespace {

// Pinned tolerances and budgets.
constexpr long double kLittleNTol = 5e-7L;
constexpr long double kBigNTol = 5e-5L;
constexpr double kTableSeconds = 1.0;
constexpr std::uint64_t kNormalizationLimit = 10'000;
constexpr std::uint64_t kMcSamples = 1'000'000;
constexpr double kMcSigmas = 4.0;
constexpr std::uint64_t kMcSeedBase = 0x5eed'2026'0000ULL;
constexpr std::uint64_t kQuadraticX = 1'000'000;
constexpr double kQuadraticNBand = 0.15;
constexpr double kQuadraticLittleBand = 0.05;
constexpr double kErdosBand = 0.05;
constexpr double kQuadraticSeconds = 60.0;
constexpr int kOraclePolynomials = 20;
constexpr std::int64_t kOraclePrimeLimit = 50;

struct Verdict {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string cell(const TableRow& row) {
    return fmt::format("S{} {}", row.n.value_or(0), row.cls ? row.cls->cycle_notation() : "-");
}

// Every printed table value within `tol` and reproduced digit for digit.
Verdict table_criterion(const std::string& quantity, long double tol) {
    auto start = Clock::now();
    TableReport report = cli::constants_table(quantity, std::nullopt, kDefaultEps, 0);
    double elapsed = seconds_since(start);
    std::vector<std::string> failures;
    long double worst = 0;
    for (const TableRow& row : report.rows) {
        if (!row.reference) {
            failures.push_back(cell(row) + " has no reference value");
            continue;
        }
        worst = std::max(worst, *row.abs_diff);
        if (!(*row.abs_diff < tol) || !*row.matches)
            failures.push_back(fmt::format("{} computed {} published {} |diff| {:.3g}", cell(row),
                                           format_sig(row.result.value, 10), *row.reference,
                                           static_cast<double>(*row.abs_diff)));
    }
    bool pass = failures.empty() && report.rows.size() == 15 && elapsed < kTableSeconds;
    std::string detail = fmt::format("{} rows, max |diff| {:.3g}, {:.3f} s", report.rows.size(),
                                     static_cast<double>(worst), elapsed);
    for (const std::string& f : failures) detail += "; " + f;
    return {pass, detail};
}

Verdict criterion_1() { return table_criterion("little-n", kLittleNTol); }

Verdict criterion_2() { return table_criterion("big-N", kBigNTol); }

Verdict criterion_3() {
    TableReport report = cli::constants_table("big-N-odd-union", std::nullopt, kDefaultEps, 0);
    bool pass = report.rows.size() == 3;
    std::string detail;
    for (const TableRow& row : report.rows) {
        bool ok = row.matches.value_or(false);
        pass &= ok;
        detail += fmt::format("{}n={} {} vs {}{}", detail.empty() ? "" : "; ", row.n.value_or(0),
                              format_sig(row.result.value, 10), row.reference.value_or("?"), ok ? "" : " MISMATCH");
    }
    return {pass, detail};
}

Verdict criterion_4() {
    bool pass = true;
    std::string detail;
    for (const char* q : {"erdos", "pollack", "quadratic-little-n"}) {
        TableReport report = cli::constants_table(q, std::nullopt, kDefaultEps, 1);
        const TableRow& row = report.rows.at(0);
        bool ok = row.matches.value_or(false);
        pass &= ok;
        detail += fmt::format("{}{} {} vs {}{}", detail.empty() ? "" : "; ", q, format_sig(row.result.value, 10),
                              row.reference.value_or("?"), ok ? "" : " MISMATCH");
    }
    return {pass, detail};
}

Verdict criterion_5() {
    auto bits_equal = [](long double a, long double b) { return std::memcmp(&a, &b, 10) == 0; };
    struct Pair {
        int n;
        CycleType a, b;
    };
    const std::vector<Pair> pairs = {{4, CycleType({4}), CycleType({2, 1, 1})},
                                     {5, CycleType({3, 1, 1}), CycleType({3, 2})}};
    bool pass = true;
    std::string detail;
    for (const Pair& p : pairs) {
        bool little = bits_equal(avg_little_n(p.n, p.a).value, avg_little_n(p.n, p.b).value);
        bool big = bits_equal(avg_big_N(p.n, p.a).value, avg_big_N(p.n, p.b).value);
        pass &= little && big;
        detail += fmt::format("{}S{} {} vs {}: little-n {}, big-N {}", detail.empty() ? "" : "; ", p.n,
                              p.a.cycle_notation(), p.b.cycle_notation(), little ? "identical" : "DIFFER",
                              big ? "identical" : "DIFFER");
    }
    return {pass, detail};
}

Verdict criterion_6() {
    auto start = Clock::now();
    std::size_t checks = 0;
    std::vector<std::string> failures;
    auto primes = primes_up_to(kNormalizationLimit);
    for (int n = 3; n <= 5; ++n) {
        const LocalModel& model = LocalModel::for_degree(n);
        const auto classes = cycle_types(n);
        for (std::uint64_t p : primes) {
            Rational masses(0);
            for (const RamifiedType& r : model.ramified_types()) masses = masses + r.mass(p);
            Rational total = model.ramified_density_total(p);
            for (const CycleType& ct : classes) total = total + model.unramified_density(p, ct);
            Rational ramified(0);
            for (const auto& entry : model.ramified_densities(p)) ramified = ramified + entry.second;
            checks += 3;
            if (masses != model.f(p)) failures.push_back(fmt::format("S{} p={}: sum c_i != f", n, p));
            if (total != Rational(1)) failures.push_back(fmt::format("S{} p={}: total {}", n, p, total.str()));
            if (ramified != model.ramified_density_total(p))
                failures.push_back(fmt::format("S{} p={}: ramified split", n, p));
        }
    }
    std::string detail = fmt::format("{} exact identities over {} primes <= {}, {:.2f} s", checks, primes.size(),
                                     kNormalizationLimit, seconds_since(start));
    for (std::size_t i = 0; i < std::min<std::size_t>(failures.size(), 5); ++i) detail += "; " + failures[i];
    return {failures.empty(), detail};
}

Verdict criterion_7() {
    auto start = Clock::now();
    struct Cell {
        std::string name;
        HitModel model;
        SeriesResult series;
    };
    std::vector<Cell> cells;
    for (int n = 3; n <= 5; ++n)
        for (const ReferenceValue& ref : reference_table("little-n", n))
            cells.push_back({fmt::format("little-n S{} {}", n, ref.cls->cycle_notation()), little_n_model(n, *ref.cls),
                             avg_little_n(n, *ref.cls)});
    for (int n = 3; n <= 5; ++n)
        for (const ReferenceValue& ref : reference_table("big-N", n))
            cells.push_back({fmt::format("big-N S{} {}", n, ref.cls->cycle_notation()), big_N_model(n, *ref.cls),
                             avg_big_N(n, *ref.cls)});
    for (int n = 3; n <= 5; ++n)
        cells.push_back({fmt::format("big-N-odd-union S{}", n), odd_union_model(n), avg_big_N_union_odd(n)});

    bool pass = true;
    double worst = 0;
    std::string worst_cell, failures;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        McEstimate e = estimate_model(c.model, kMcSamples, kMcSeedBase + i);
        double z = (e.mean - static_cast<double>(c.series.value)) / e.std_error;
        if (std::fabs(z) > worst) {
            worst = std::fabs(z);
            worst_cell = c.name;
        }
        if (!(std::fabs(z) <= kMcSigmas)) {
            pass = false;
            failures += fmt::format("; {} mean {:.6f} +- {:.6f} vs series {:.6f} (z {:.2f})", c.name, e.mean,
                                    e.std_error, static_cast<double>(c.series.value), z);
        }
    }
    return {pass, fmt::format("{} cells x {} samples, max |z| {:.2f} at {}, {:.1f} s{}", cells.size(), kMcSamples,
                              worst, worst_cell, seconds_since(start), failures)};
}

Verdict criterion_8() {
    auto start = Clock::now();
    bool pass = true;
    std::string detail;
    struct Case {
        QuadQuantity q;
        double band;
    };
    for (Case c : {Case{QuadQuantity::NPlus, kQuadraticNBand}, Case{QuadQuantity::NMinus, kQuadraticNBand},
                   Case{QuadQuantity::nPlus, kQuadraticLittleBand}, Case{QuadQuantity::nMinus, kQuadraticLittleBand},
                   Case{QuadQuantity::ErdosPrime, kErdosBand}}) {
        QuadraticAverage r = quadratic_averages(kQuadraticX, DiscSign::Both, c.q);
        double dev = r.mean ? std::fabs(*r.mean - r.predicted) : INFINITY;
        bool ok = dev <= c.band;
        pass &= ok;
        detail += fmt::format("{}{} mean {:.5f} over {} vs {:.5f} (|dev| {:.4f} <= {}){}", detail.empty() ? "" : "; ",
                              to_string(c.q), r.mean.value_or(NAN), r.count, r.predicted, dev, c.band,
                              ok ? "" : " OUT OF BAND");
    }
    double elapsed = seconds_since(start);
    pass &= elapsed < kQuadraticSeconds;
    return {pass, fmt::format("X = {}, {:.2f} s; {}", kQuadraticX, elapsed, detail)};
}

Verdict criterion_9() {
    auto polys = naive::oracle_polynomials(LEASTPRIME_TEST_DATA);
    const auto primes = naive::small_primes(kOraclePrimeLimit);
    std::size_t compared = 0, mismatched = 0;
    for (const auto& f : polys)
        for (std::int64_t p : primes) {
            ++compared;
            if (degree_pattern_mod_p(f, static_cast<std::uint64_t>(p)) != naive::pattern(f, p)) ++mismatched;
        }
    FieldRecord rec{{-1, -1, 0, 1}, BigInt(-23), "x^3-x-1", std::nullopt};
    ScanValue n3 = little_n_of_field(rec, CycleType({3}));
    ScanValue n12 = big_N_of_field(rec, CycleType({2, 1}));
    ScanValue ne = big_N_of_field(rec, CycleType::identity(3));
    bool golden = n3 == ScanValue{std::uint64_t{5}} && n12 == ScanValue{std::uint64_t{5}} &&
                  ne == ScanValue{std::uint64_t{59}};
    auto show = [](const ScanValue& v) {
        return std::holds_alternative<std::uint64_t>(v) ? std::to_string(std::get<std::uint64_t>(v)) : "undecided";
    };
    bool pass = polys.size() >= static_cast<std::size_t>(kOraclePolynomials) && mismatched == 0 && golden;
    return {pass, fmt::format("{} polynomials x {} primes <= {}: {} comparisons, {} mismatches; "
                              "x^3-x-1: n[(123)] = {}, N[(12)] = {}, N[e] = {}",
                              polys.size(), primes.size(), kOraclePrimeLimit, compared, mismatched, show(n3),
                              show(n12), show(ne))};
}

// For C inside A_n Frobenius in C forces chi_F(p) = +1, and for C outside A_n
// it forces -1, so with s the sign of C: n_{K,C} <= n_{F,s} <= N_{F,-s}.
Verdict criterion_10() {
    std::size_t checked = 0, skipped = 0, violations = 0;
    std::string first_violation;
    for (const char* name : {"cubic_fields_100.jsonl", "quartic_fields.jsonl", "quintic_fields.jsonl"}) {
        std::ifstream in(std::string(LEASTPRIME_TEST_DATA) + "/" + name);
        if (!in) return {false, std::string("missing fixture ") + name};
        for (const FieldRecord& rec : read_jsonl_records(in)) {
            const std::int64_t d_k = static_cast<std::int64_t>(*rec.field_disc);
            const std::int64_t d_f = FundamentalDiscriminant::of_field_generated_by(d_k).value();
            for (const CycleType& ct : cycle_types(rec.degree())) {
                ScanValue v = little_n_of_field(rec, ct);
                if (!std::holds_alternative<std::uint64_t>(v)) {
                    ++skipped;
                    continue;
                }
                const std::uint64_t n_kc = std::get<std::uint64_t>(v);
                const std::uint64_t n_f = first_sign_prime(d_f, ct.is_even() ? SignTarget::NotPlus : SignTarget::NotMinus);
                const std::uint64_t big_f = first_sign_prime(d_f, ct.is_even() ? SignTarget::Minus : SignTarget::Plus);
                ++checked;
                if (!(n_kc <= n_f && n_f <= big_f)) {
                    if (violations++ == 0)
                        first_violation = fmt::format("; first violation {} class {}: {} / {} / {}", rec.label,
                                                      ct.cycle_notation(), n_kc, n_f, big_f);
                }
            }
        }
    }
    return {violations == 0 && checked > 0,
            fmt::format("{} (field, class) pairs checked, {} undecided skipped, {} violations{}", checked, skipped,
                        violations, first_violation)};
}

const std::map<int, std::pair<std::string, std::function<Verdict()>>>& criteria() {
    static const std::map<int, std::pair<std::string, std::function<Verdict()>>> table = {
        {1, {"little-n tables to 5e-7 in under 1 s", criterion_1}},
        {2, {"big-N tables to 5e-5, all printed digits, in under 1 s", criterion_2}},
        {3, {"odd-union constants, all printed digits", criterion_3}},
        {4, {"Erdos, Pollack and quadratic little-n constants, all printed digits", criterion_4}},
        {5, {"bit-identical values for classes of equal size", criterion_5}},
        {6, {"exact model normalization for p <= 10^4", criterion_6}},
        {7, {"Monte Carlo within 4 standard errors for every cell", criterion_7}},
        {8, {"quadratic brute force at X = 10^6 within calibrated bands", criterion_8}},
        {9, {"degree patterns match trial division; golden least primes", criterion_9}},
        {10, {"resolvent inequality on the field fixtures", criterion_10}},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        long k = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || !criteria().contains(static_cast<int>(k))) {
            std::cerr << "unknown criterion '" << argv[i] << "'\n";
            return 2;
        }
        selected.push_back(static_cast<int>(k));
    }
    if (selected.empty())
        for (const auto& [k, unused] : criteria()) selected.push_back(k);

    bool all_pass = true;
    for (int k : selected) {
        const auto& [title, check] = criteria().at(k);
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        all_pass &= v.pass;
        std::cout << fmt::format("{} [{}] {} -- {}\n", v.pass ? "PASS" : "FAIL", k, title, v.detail);
    }
    return all_pass ? 0 : 1;
}
