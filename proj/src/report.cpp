#include "leastprime/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace leastprime {
namespace {

using nlohmann::json;

long double parse_exact(const std::string& text) {
    long double v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
        throw std::invalid_argument("malformed number text '" + text + "'");
    return v;
}

void put_long_double(json& j, const std::string& key, long double v) {
    j[key] = static_cast<double>(v);
    j[key + "_text"] = exact_text(v);
}

long double get_long_double(const json& j, const std::string& key) {
    if (auto it = j.find(key + "_text"); it != j.end()) return parse_exact(it->get<std::string>());
    return j.at(key).get<long double>();
}

std::vector<int> parts_from(const json& j) { return j.get<std::vector<int>>(); }

json scan_value_json(const ScanValue& v) {
    if (const auto* p = std::get_if<std::uint64_t>(&v)) return {{"status", "found"}, {"prime", *p}};
    if (const auto* nf = std::get_if<NotFound>(&v)) return {{"status", "not-found"}, {"bound", nf->bound}};
    return {{"status", "tainted"}, {"prime", std::get<Tainted>(v).prime}};
}

ScanValue scan_value_from(const json& j) {
    const auto status = j.at("status").get<std::string>();
    if (status == "found") return j.at("prime").get<std::uint64_t>();
    if (status == "not-found") return NotFound{j.at("bound").get<std::uint64_t>()};
    if (status == "tainted") return Tainted{j.at("prime").get<std::uint64_t>()};
    throw std::invalid_argument("unknown scan status '" + status + "'");
}

template <typename T>
void put_optional(json& j, const std::string& key, const std::optional<T>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
}

template <typename T>
std::optional<T> get_optional(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<T>();
}

}  // namespace

std::string exact_text(long double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::logic_error("long double formatting failed");
    return std::string(buf, end);
}

std::string format_sig(long double v, int digits) {
    if (v == 0 || !std::isfinite(v)) return fmt::format("{}", static_cast<double>(v));
    int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(v))));
    int decimals = std::max(0, digits - 1 - magnitude);
    return fmt::format("{:.{}f}", v, decimals);
}

void to_json(json& j, const SeriesResult& r) {
    j = json::object();
    put_long_double(j, "value", r.value);
    j["terms_used"] = r.terms_used;
    j["last_prime"] = r.last_prime;
    put_long_double(j, "tail_estimate", r.tail_estimate);
    j["requested_eps"] = r.requested_eps;
    j["model"] = r.model;
}

void from_json(const json& j, SeriesResult& r) {
    r.value = get_long_double(j, "value");
    r.terms_used = j.at("terms_used").get<std::size_t>();
    r.last_prime = j.at("last_prime").get<std::uint64_t>();
    r.tail_estimate = get_long_double(j, "tail_estimate");
    r.requested_eps = j.at("requested_eps").get<double>();
    r.model = j.at("model").get<std::string>();
}

void to_json(json& j, const TableRow& r) {
    j = json::object();
    put_optional(j, "n", r.n);
    if (r.cls) {
        j["class"] = r.cls->parts();
        j["label"] = r.cls->cycle_notation();
    } else {
        j["class"] = nullptr;
    }
    j["result"] = r.result;
    put_optional(j, "reference", r.reference);
    if (r.abs_diff) put_long_double(j, "abs_diff", *r.abs_diff);
    else j["abs_diff"] = nullptr;
    put_optional(j, "matches", r.matches);
    j["source"] = r.source;
}

void from_json(const json& j, TableRow& r) {
    r.n = get_optional<int>(j, "n");
    r.cls.reset();
    if (!j.at("class").is_null()) r.cls = CycleType(parts_from(j.at("class")));
    r.result = j.at("result").get<SeriesResult>();
    r.reference = get_optional<std::string>(j, "reference");
    r.abs_diff.reset();
    if (!j.at("abs_diff").is_null()) r.abs_diff = get_long_double(j, "abs_diff");
    r.matches = get_optional<bool>(j, "matches");
    r.source = j.at("source").get<std::string>();
}

void to_json(json& j, const TableReport& r) {
    j = json{{"quantity", r.quantity}, {"eps", r.eps}, {"rows", r.rows}};
}

void from_json(const json& j, TableReport& r) {
    r.quantity = j.at("quantity").get<std::string>();
    r.eps = j.at("eps").get<double>();
    r.rows = j.at("rows").get<std::vector<TableRow>>();
}

void to_json(json& j, const ScanReport& r) {
    json rows = json::array();
    for (const ScanRow& row : r.rows) {
        json entry = scan_value_json(row.value);
        entry["label"] = row.label;
        rows.push_back(std::move(entry));
    }
    j = json{{"degree", r.degree},
             {"class", r.cls.parts()},
             {"quantity", to_string(r.quantity)},
             {"bound", r.bound},
             {"rows", rows},
             {"decided", r.decided},
             {"tainted", r.tainted},
             {"not_found", r.not_found},
             {"predicted", r.predicted}};
    put_optional(j, "empirical_mean", r.empirical_mean);
    put_optional(j, "abs_deviation", r.abs_deviation);
}

void from_json(const json& j, ScanReport& r) {
    r.degree = j.at("degree").get<int>();
    r.cls = CycleType(parts_from(j.at("class")));
    r.quantity = parse_scan_quantity(j.at("quantity").get<std::string>());
    r.bound = j.at("bound").get<std::uint64_t>();
    r.rows.clear();
    for (const json& entry : j.at("rows")) r.rows.push_back({entry.at("label").get<std::string>(), scan_value_from(entry)});
    r.decided = j.at("decided").get<std::size_t>();
    r.tainted = j.at("tainted").get<std::size_t>();
    r.not_found = j.at("not_found").get<std::size_t>();
    r.predicted = j.at("predicted").get<double>();
    r.empirical_mean = get_optional<double>(j, "empirical_mean");
    r.abs_deviation = get_optional<double>(j, "abs_deviation");
}

void to_json(json& j, const McEstimate& r) {
    j = json{{"mean", r.mean}, {"std_error", r.std_error}, {"samples", r.samples}, {"seed", r.seed}, {"model", r.model}};
}

void from_json(const json& j, McEstimate& r) {
    r.mean = j.at("mean").get<double>();
    r.std_error = j.at("std_error").get<double>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.model = j.at("model").get<std::string>();
}

void to_json(json& j, const QuadraticAverage& r) {
    j = json{{"quantity", to_string(r.quantity)}, {"sign", to_string(r.sign)}, {"x", r.x},
             {"count", r.count},                  {"sum", r.sum},              {"predicted", r.predicted}};
    put_optional(j, "mean", r.mean);
}

void from_json(const json& j, QuadraticAverage& r) {
    r.quantity = parse_quad_quantity(j.at("quantity").get<std::string>());
    r.sign = parse_disc_sign(j.at("sign").get<std::string>());
    r.x = j.at("x").get<std::uint64_t>();
    r.count = j.at("count").get<std::uint64_t>();
    r.sum = j.at("sum").get<std::uint64_t>();
    r.predicted = j.at("predicted").get<double>();
    r.mean = get_optional<double>(j, "mean");
}

}  // namespace leastprime
