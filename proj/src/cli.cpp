#include "leastprime/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <future>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "leastprime/errors.hpp"
#include "leastprime/frobscan.hpp"
#include "leastprime/localmodel.hpp"
#include "leastprime/montecarlo.hpp"
#include "leastprime/quadratic.hpp"
#include "leastprime/reference.hpp"
#include "leastprime/series.hpp"

namespace leastprime::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kConstantQuantities = {"little-n",           "big-N",   "big-N-odd-union",
                                                      "quadratic-little-n", "pollack", "erdos"};

struct Globals {
    std::string format = "table";
    std::uint64_t sieve_limit = kDefaultSieveLimit;
    unsigned threads = 0;
    int digits = 8;
};

struct ConstantsArgs {
    bool all = false;
    std::optional<int> n;
    std::optional<std::string> cls;
    std::string quantity = "little-n";
    double eps = kDefaultEps;
};

struct ScanArgs {
    std::string input;
    std::string input_format = "auto";
    int n = 0;
    std::string cls;
    std::string quantity = "little-n";
    std::uint64_t bound = kDefaultScanBound;
    std::optional<int> r2;
};

struct QuadraticArgs {
    std::uint64_t x = 1'000'000;
    std::string sign = "both";
    std::string quantity = "N+1";
};

struct MonteCarloArgs {
    int n = 3;
    std::optional<std::string> cls;
    std::string quantity = "little-n";
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
};

struct ModelArgs {
    int n = 3;
    std::uint64_t prime = 2;
};

bool is_degree_quantity(const std::string& q) { return q == "little-n" || q == "big-N"; }

std::string class_label(const std::optional<CycleType>& cls) { return cls ? cls->cycle_notation() : "-"; }

std::string sci(long double v) { return fmt::format("{:.2e}", static_cast<double>(v)); }

SeriesResult compute_constant(const std::string& quantity, std::optional<int> n, const std::optional<CycleType>& cls,
                              double eps, const PrimeTable& primes) {
    if (quantity == "little-n") return avg_little_n(*n, *cls, eps, primes);
    if (quantity == "big-N") return avg_big_N(*n, *cls, eps, primes);
    if (quantity == "big-N-odd-union") return avg_big_N_union_odd(*n, eps, primes);
    if (quantity == "quadratic-little-n") return quadratic_little_n(eps, primes);
    if (quantity == "pollack") return pollack_constant(eps, primes);
    if (quantity == "erdos") return erdos_constant(eps, primes);
    throw UsageError("unknown quantity '" + quantity + "'");
}

TableRow make_row(const std::string& quantity, std::optional<int> n, std::optional<CycleType> cls, double eps,
                  const PrimeTable& primes) {
    TableRow row;
    row.n = n;
    row.cls = std::move(cls);
    row.result = compute_constant(quantity, row.n, row.cls, eps, primes);
    if (const ReferenceValue* ref = find_reference(quantity, row.n, row.cls)) {
        row.reference = ref->printed;
        row.abs_diff = std::fabs(row.result.value - ref->value);
        row.matches = matches_printed(row.result.value, *ref);
        row.source = ref->source;
    }
    return row;
}

/// Classes of S_n in published order; any class missing there follows in cycle_types order.
std::vector<CycleType> table_classes(const std::string& quantity, int n) {
    std::vector<CycleType> out;
    for (const ReferenceValue& ref : reference_table(quantity, n))
        if (ref.cls) out.push_back(*ref.cls);
    for (const CycleType& ct : cycle_types(n))
        if (std::find(out.begin(), out.end(), ct) == out.end()) out.push_back(ct);
    return out;
}

void check_degree(int n) {
    if (n < 3 || n > 5) throw UsageError("--n must be 3, 4 or 5 (got " + std::to_string(n) + ")");
}

std::unique_ptr<PrimeTable> owned_table(const Globals& g) {
    if (g.sieve_limit == kDefaultSieveLimit) return nullptr;
    return std::make_unique<PrimeTable>(g.sieve_limit);
}

// ---- emitters ----

void emit_table_report(const TableReport& report, const Globals& g, std::ostream& out) {
    if (g.format == "json") {
        out << json(report).dump(2) << '\n';
        return;
    }
    if (g.format == "csv") {
        out << "n,class,value,reference,abs_diff,matches,terms_used,last_prime,source\n";
        for (const TableRow& r : report.rows)
            fmt::print(out, "{},{},{},{},{},{},{},{},\"{}\"\n", r.n ? std::to_string(*r.n) : "",
                       r.cls ? "\"" + r.cls->to_string() + "\"" : "", exact_text(r.result.value),
                       r.reference.value_or(""), r.abs_diff ? exact_text(*r.abs_diff) : "",
                       r.matches ? (*r.matches ? "true" : "false") : "", r.result.terms_used, r.result.last_prime,
                       r.source);
        return;
    }
    fmt::print(out, "quantity {}  eps {}\n", report.quantity, report.eps);
    fmt::print(out, "{:>2}  {:<12} {:>16} {:>14} {:>10}  {}\n", "n", "class", "computed", "published", "|diff|",
               "digits");
    for (const TableRow& r : report.rows)
        fmt::print(out, "{:>2}  {:<12} {:>16} {:>14} {:>10}  {}\n", r.n ? std::to_string(*r.n) : "-",
                   class_label(r.cls), format_sig(r.result.value, g.digits), r.reference.value_or("-"),
                   r.abs_diff ? sci(*r.abs_diff) : "-", r.matches ? (*r.matches ? "match" : "MISMATCH") : "-");
}

void emit_single_constant(const TableRow& row, const std::string& quantity, const Globals& g, std::ostream& out) {
    if (g.format == "json") {
        out << json(row.result).dump(2) << '\n';
        return;
    }
    if (g.format == "csv") {
        emit_table_report(TableReport{quantity, row.result.requested_eps, {row}}, g, out);
        return;
    }
    std::string where = row.n ? fmt::format(" S{}", *row.n) : "";
    if (row.cls) where += " " + row.cls->cycle_notation();
    fmt::print(out, "{}{}: {}\n", quantity, where, format_sig(row.result.value, g.digits));
    fmt::print(out, "  terms {}  last prime {}  tail bound {}\n", row.result.terms_used, row.result.last_prime,
               sci(row.result.tail_estimate));
    if (row.reference)
        fmt::print(out, "  published {}  |diff| {}  {}\n", *row.reference, sci(*row.abs_diff),
                   *row.matches ? "match" : "MISMATCH");
}

std::string scan_value_text(const ScanValue& v) {
    if (const auto* p = std::get_if<std::uint64_t>(&v)) return std::to_string(*p);
    if (const auto* nf = std::get_if<NotFound>(&v)) return fmt::format("none <= {}", nf->bound);
    return fmt::format("tainted at {}", std::get<Tainted>(v).prime);
}

void emit_scan(const ScanReport& r, const Globals& g, std::ostream& out) {
    if (g.format == "json") {
        out << json(r).dump(2) << '\n';
        return;
    }
    if (g.format == "csv") {
        out << "label,status,prime\n";
        for (const ScanRow& row : r.rows) {
            if (const auto* p = std::get_if<std::uint64_t>(&row.value))
                fmt::print(out, "\"{}\",found,{}\n", row.label, *p);
            else if (const auto* nf = std::get_if<NotFound>(&row.value))
                fmt::print(out, "\"{}\",not-found,{}\n", row.label, nf->bound);
            else
                fmt::print(out, "\"{}\",tainted,{}\n", row.label, std::get<Tainted>(row.value).prime);
        }
        return;
    }
    fmt::print(out, "{} for class {} of S{}, primes <= {}\n", to_string(r.quantity), r.cls.cycle_notation(), r.degree,
               r.bound);
    for (const ScanRow& row : r.rows) fmt::print(out, "  {:<24} {}\n", row.label, scan_value_text(row.value));
    fmt::print(out, "fields {}  decided {}  tainted {}  not found {}\n", r.rows.size(), r.decided, r.tainted,
               r.not_found);
    fmt::print(out, "empirical mean {}  predicted {}  |deviation| {}\n",
               r.empirical_mean ? format_sig(*r.empirical_mean, g.digits) : "-", format_sig(r.predicted, g.digits),
               r.abs_deviation ? format_sig(*r.abs_deviation, g.digits) : "-");
}

// ---- subcommands ----

int run_constants(const ConstantsArgs& a, const Globals& g, std::ostream& out) {
    const bool degree_quantity = is_degree_quantity(a.quantity);
    const bool union_quantity = a.quantity == "big-N-odd-union";
    if (a.n) check_degree(*a.n);
    if (!degree_quantity && a.cls) throw UsageError("--class does not apply to quantity " + a.quantity);
    if (!degree_quantity && !union_quantity && a.n) throw UsageError("--n does not apply to quantity " + a.quantity);
    if (a.eps <= 0 || !std::isfinite(a.eps)) throw UsageError("--eps must be positive");
    std::optional<CycleType> cls;
    if (a.all) {
        if (a.cls) throw UsageError("--all and --class are exclusive");
    } else if (degree_quantity) {
        if (!a.n || !a.cls) throw UsageError("quantity " + a.quantity + " needs --n and --class (or --all)");
        cls = parse_class_spec(*a.cls, *a.n);
    } else if (union_quantity && !a.n) {
        throw UsageError("quantity big-N-odd-union needs --n (or --all)");
    }

    auto owned = owned_table(g);
    const PrimeTable& primes = owned ? *owned : PrimeTable::standard();
    if (a.all) {
        emit_table_report(constants_table(a.quantity, a.n, a.eps, g.threads, primes), g, out);
    } else {
        emit_single_constant(make_row(a.quantity, a.n, cls, a.eps, primes), a.quantity, g, out);
    }
    return kExitOk;
}

std::vector<FieldRecord> load_records(const ScanArgs& a) {
    std::ifstream in(a.input);
    if (!in) throw InputError("cannot open input file '" + a.input + "'");
    std::string format = a.input_format;
    if (format == "auto") {
        auto ends_with = [&](std::string_view suffix) {
            return a.input.size() >= suffix.size() && a.input.compare(a.input.size() - suffix.size(), suffix.size(),
                                                                      suffix) == 0;
        };
        format = ends_with(".csv") ? "csv" : "jsonl";
    }
    return format == "csv" ? read_csv_records(in) : read_jsonl_records(in);
}

int run_scan(const ScanArgs& a, const Globals& g, std::ostream& out) {
    check_degree(a.n);
    const CycleType cls = parse_class_spec(a.cls, a.n);
    const ScanQuantity quantity = parse_scan_quantity(a.quantity);
    if (a.bound > g.sieve_limit) throw UsageError("--bound exceeds --sieve-limit");
    std::vector<FieldRecord> records = load_records(a);
    if (a.r2) std::erase_if(records, [&](const FieldRecord& rec) { return rec.r2 != a.r2; });

    auto owned = owned_table(g);
    const PrimeTable& primes = owned ? *owned : PrimeTable::standard();
    emit_scan(aggregate_scan(records, cls, quantity, a.bound, g.threads, primes), g, out);
    return kExitOk;
}

int run_quadratic(const QuadraticArgs& a, const Globals& g, std::ostream& out) {
    if (g.format == "csv") throw UsageError("quadratic supports --format table or json");
    if (a.x < 3) throw UsageError("--x must be at least 3");
    const DiscSign sign = parse_disc_sign(a.sign);
    const QuadQuantity quantity = parse_quad_quantity(a.quantity);
    auto owned = owned_table(g);
    const PrimeTable& primes = owned ? *owned : PrimeTable::standard();
    QuadraticAverage r = quadratic_averages(a.x, sign, quantity, g.threads, primes);
    if (g.format == "json") {
        out << json(r).dump(2) << '\n';
        return kExitOk;
    }
    if (quantity == QuadQuantity::ErdosPrime)
        fmt::print(out, "erdos-prime over odd primes p <= {}\n", a.x);
    else
        fmt::print(out, "{} over fundamental discriminants with |D| <= {}, sign {}\n", to_string(quantity), a.x,
                   to_string(sign));
    fmt::print(out, "count {}  mean {}  predicted {}\n", r.count, r.mean ? format_sig(*r.mean, g.digits) : "-",
               format_sig(r.predicted, g.digits));
    return kExitOk;
}

int run_montecarlo(const MonteCarloArgs& a, const Globals& g, std::ostream& out) {
    if (g.format == "csv") throw UsageError("montecarlo supports --format table or json");
    check_degree(a.n);
    const McQuantity quantity = parse_mc_quantity(a.quantity);
    if (a.samples == 0) throw UsageError("--samples must be at least 1");
    CycleType cls = CycleType::identity(a.n);
    if (quantity != McQuantity::BigNOddUnion) {
        if (!a.cls) throw UsageError("quantity " + a.quantity + " needs --class");
        cls = parse_class_spec(*a.cls, a.n);
    } else if (a.cls) {
        throw UsageError("--class does not apply to quantity big-N-odd-union");
    }
    auto owned = owned_table(g);
    const PrimeTable& primes = owned ? *owned : PrimeTable::standard();
    McEstimate e = estimate(a.n, cls, quantity, a.samples, a.seed, g.threads, primes);
    if (g.format == "json") {
        out << json(e).dump(2) << '\n';
        return kExitOk;
    }
    SeriesResult series = quantity == McQuantity::LittleN ? avg_little_n(a.n, cls, kDefaultEps, primes)
                          : quantity == McQuantity::BigN  ? avg_big_N(a.n, cls, kDefaultEps, primes)
                                                          : avg_big_N_union_odd(a.n, kDefaultEps, primes);
    fmt::print(out, "{}: {} samples, seed {}\n", e.model, e.samples, e.seed);
    fmt::print(out, "mean {} +- {}  series {}", format_sig(e.mean, g.digits), format_sig(e.std_error, 3),
               format_sig(series.value, g.digits));
    if (e.std_error > 0)
        fmt::print(out, "  z {:.2f}", static_cast<double>((e.mean - series.value) / e.std_error));
    out << '\n';
    return kExitOk;
}

int run_model_dump(const ModelArgs& a, const Globals& g, std::ostream& out) {
    if (g.format == "csv") throw UsageError("model dump supports --format table or json");
    check_degree(a.n);
    if (!is_prime(a.prime)) throw UsageError("--prime must be prime (got " + std::to_string(a.prime) + ")");
    const LocalModel& model = LocalModel::for_degree(a.n);
    const std::uint64_t p = a.prime;
    Rational total(0);
    json classes = json::array();
    for (const CycleType& ct : table_classes("little-n", a.n)) {
        Rational d = model.unramified_density(p, ct);
        total = total + d;
        classes.push_back({{"class", ct.parts()}, {"label", ct.cycle_notation()}, {"density", d.str()},
                           {"approx", d.to_double()}});
    }
    json ramified = json::array();
    for (const auto& [label, d] : model.ramified_densities(p)) {
        total = total + d;
        ramified.push_back({{"type", label}, {"density", d.str()}, {"approx", d.to_double()}});
    }
    Rational fp = model.f(p);
    if (g.format == "json") {
        out << json{{"n", a.n},
                    {"prime", p},
                    {"f", fp.str()},
                    {"unramified", classes},
                    {"ramified", ramified},
                    {"total", total.str()}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    fmt::print(out, "local model for S{} at p = {}\n", a.n, p);
    fmt::print(out, "f(p) = {}\n", fp.str());
    for (const json& c : classes)
        fmt::print(out, "  unramified {:<12} {:>24}  {}\n", c.at("label").get<std::string>(),
                   c.at("density").get<std::string>(), format_sig(c.at("approx").get<double>(), g.digits));
    for (const json& r : ramified)
        fmt::print(out, "  ramified   {:<12} {:>24}  {}\n", r.at("type").get<std::string>(),
                   r.at("density").get<std::string>(), format_sig(r.at("approx").get<double>(), g.digits));
    fmt::print(out, "total = {}\n", total.str());
    return kExitOk;
}

void report_error(const Globals& g, std::ostream& err, const std::string& kind, const std::string& message, int code) {
    if (g.format == "json")
        err << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
    else
        fmt::print(err, "error ({}): {}\n", kind, message);
}

}  // namespace

CycleType parse_class_spec(const std::string& raw, int n) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty class spec");
    if (n < 1) throw std::invalid_argument("class spec needs a degree");
    if (text == "e" || text == "()") return CycleType::identity(n);

    std::vector<int> parts;
    if (text.front() == '(') {
        std::set<int> seen;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation '" + raw + "'");
            std::size_t close = text.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unclosed cycle in '" + raw + "'");
            std::string body = text.substr(pos + 1, close - pos - 1);
            std::vector<int> points;
            if (body.find(',') != std::string::npos) {
                std::size_t start = 0;
                while (start <= body.size()) {
                    std::size_t comma = std::min(body.find(',', start), body.size());
                    std::string item = body.substr(start, comma - start);
                    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                        throw std::invalid_argument("malformed cycle '" + body + "' in '" + raw + "'");
                    points.push_back(std::stoi(item));
                    start = comma + 1;
                }
            } else {
                for (char c : body) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw std::invalid_argument("malformed cycle '" + body + "' in '" + raw + "'");
                    points.push_back(c - '0');
                }
            }
            if (points.empty()) throw std::invalid_argument("empty cycle in '" + raw + "'");
            for (int x : points) {
                if (x < 1 || x > n)
                    throw std::invalid_argument("point " + std::to_string(x) + " outside 1.." + std::to_string(n) +
                                                " in '" + raw + "'");
                if (!seen.insert(x).second)
                    throw std::invalid_argument("point " + std::to_string(x) + " repeated in '" + raw + "'");
            }
            parts.push_back(static_cast<int>(points.size()));
            pos = close + 1;
        }
        int moved = 0;
        for (int k : parts) moved += k;
        parts.insert(parts.end(), static_cast<std::size_t>(n - moved), 1);
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = std::min(text.find(',', start), text.size());
            std::string item = text.substr(start, comma - start);
            if (item.empty() || item.size() > 3 || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw std::invalid_argument("malformed class spec '" + raw + "'");
            parts.push_back(std::stoi(item));
            start = comma + 1;
        }
        int sum = 0;
        for (int k : parts) {
            if (k < 1) throw std::invalid_argument("parts must be positive in '" + raw + "'");
            sum += k;
        }
        if (sum != n)
            throw std::invalid_argument("parts of '" + raw + "' sum to " + std::to_string(sum) + ", not " +
                                        std::to_string(n));
    }
    return CycleType(std::move(parts));
}

TableReport constants_table(const std::string& quantity, std::optional<int> n, double eps, unsigned threads,
                            const PrimeTable& primes) {
    struct Key {
        std::optional<int> n;
        std::optional<CycleType> cls;
    };
    std::vector<Key> keys;
    std::vector<int> degrees = n ? std::vector<int>{*n} : std::vector<int>{3, 4, 5};
    if (is_degree_quantity(quantity)) {
        for (int d : degrees)
            for (const CycleType& ct : table_classes(quantity, d)) keys.push_back({d, ct});
    } else if (quantity == "big-N-odd-union") {
        for (int d : degrees) keys.push_back({d, std::nullopt});
    } else if (std::find(kConstantQuantities.begin(), kConstantQuantities.end(), quantity) !=
               kConstantQuantities.end()) {
        keys.push_back({std::nullopt, std::nullopt});
    } else {
        throw std::invalid_argument("unknown quantity '" + quantity + "'");
    }

    TableReport report{quantity, eps, {}};
    if (threads == 1) {
        for (const Key& k : keys) report.rows.push_back(make_row(quantity, k.n, k.cls, eps, primes));
        return report;
    }
    std::vector<std::future<TableRow>> pending;
    for (const Key& k : keys)
        pending.push_back(std::async(std::launch::async, make_row, quantity, k.n, k.cls, eps, std::cref(primes)));
    for (auto& f : pending) report.rows.push_back(f.get());
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Average least primes with prescribed Frobenius in S_n-fields", "leastprime"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--sieve-limit", g.sieve_limit, "Largest prime in the prime table")
        ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{4'000'000'000}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--digits", g.digits, "Significant digits in table output")
        ->check(CLI::Range(1, 21))
        ->capture_default_str();

    ConstantsArgs ca;
    auto* constants = app.add_subcommand("constants", "Evaluate a predicted average by its prime-product series");
    constants->add_flag("--all", ca.all, "Every class of the table (every degree unless --n is given)");
    constants->add_option("--n", ca.n, "Degree n of the S_n-fields");
    constants->add_option("--class", ca.cls, "Conjugacy class: parts, cycle notation or e");
    constants->add_option("--quantity", ca.quantity)
        ->check(CLI::IsMember(kConstantQuantities))
        ->capture_default_str();
    constants->add_option("--eps", ca.eps, "Bound on the omitted tail")->capture_default_str();

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "Least primes of fields given by defining polynomials");
    scan->add_option("--input", sa.input, "JSON-lines or CSV field list")->required();
    scan->add_option("--input-format", sa.input_format)
        ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
        ->capture_default_str();
    scan->add_option("--n", sa.n, "Degree of the fields")->required();
    scan->add_option("--class", sa.cls, "Conjugacy class: parts, cycle notation or e")->required();
    scan->add_option("--quantity", sa.quantity)
        ->check(CLI::IsMember({"little-n", "big-N"}))
        ->capture_default_str();
    scan->add_option("--bound", sa.bound, "Largest prime examined")->capture_default_str();
    scan->add_option("--r2", sa.r2, "Keep only records with this many complex places");

    QuadraticArgs qa;
    auto* quadratic = app.add_subcommand("quadratic", "Brute-force averages over quadratic fields");
    quadratic->add_option("--x", qa.x, "Bound on |D| (or on p for erdos-prime)")->capture_default_str();
    quadratic->add_option("--sign", qa.sign)->check(CLI::IsMember({"+", "-", "both"}))->capture_default_str();
    quadratic->add_option("--quantity", qa.quantity)
        ->check(CLI::IsMember({"N+1", "N-1", "n+1", "n-1", "erdos-prime"}))
        ->capture_default_str();

    MonteCarloArgs ma;
    auto* montecarlo = app.add_subcommand("montecarlo", "Sample the local model");
    montecarlo->add_option("--n", ma.n)->capture_default_str();
    montecarlo->add_option("--class", ma.cls, "Conjugacy class: parts, cycle notation or e");
    montecarlo->add_option("--quantity", ma.quantity)
        ->check(CLI::IsMember({"little-n", "big-N", "big-N-odd-union"}))
        ->capture_default_str();
    montecarlo->add_option("--samples", ma.samples)->capture_default_str();
    montecarlo->add_option("--seed", ma.seed)->capture_default_str();

    ModelArgs mda;
    auto* model = app.add_subcommand("model", "Inspect the local density model");
    model->require_subcommand(1);
    auto* dump = model->add_subcommand("dump", "Exact densities at one prime");
    dump->add_option("--n", mda.n)->capture_default_str();
    dump->add_option("--prime", mda.prime)->capture_default_str();

    for (CLI::App* sub : {constants, scan, quadratic, montecarlo, model, dump}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*constants) return run_constants(ca, g, out);
        if (*scan) return run_scan(sa, g, out);
        if (*quadratic) return run_quadratic(qa, g, out);
        if (*montecarlo) return run_montecarlo(ma, g, out);
        return run_model_dump(mda, g, out);
    } catch (const UsageError& e) {
        report_error(g, err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        report_error(g, err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const InputError& e) {
        report_error(g, err, "input", e.what(), kExitInput);
        return kExitInput;
    } catch (const SeriesDivergence& e) {
        report_error(g, err, "input", std::string(e.what()) + " (raise --sieve-limit)", kExitInput);
        return kExitInput;
    } catch (const std::exception& e) {
        report_error(g, err, "invariant", e.what(), kExitInvariant);
        return kExitInvariant;
    }
}

}  // namespace leastprime::cli
