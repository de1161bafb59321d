#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leastprime/frobscan.hpp"
#include "leastprime/montecarlo.hpp"
#include "leastprime/quadratic.hpp"
#include "leastprime/series.hpp"
#include "leastprime/symgroup.hpp"

namespace leastprime {

struct TableRow {
    std::optional<int> n;
    std::optional<CycleType> cls;
    SeriesResult result;
    std::optional<std::string> reference;  // printed digits
    std::optional<long double> abs_diff;
    std::optional<bool> matches;  // all printed digits reproduced
    std::string source;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows in published table order.
struct TableReport {
    std::string quantity;
    double eps = kDefaultEps;
    std::vector<TableRow> rows;

    friend bool operator==(const TableReport&, const TableReport&) = default;
};

/// long double fields are written twice: as a JSON number for readers and
/// as shortest round-trip text ("*_text"), which from_json prefers.
void to_json(nlohmann::json& j, const SeriesResult& r);
void from_json(const nlohmann::json& j, SeriesResult& r);
void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);
void to_json(nlohmann::json& j, const TableReport& r);
void from_json(const nlohmann::json& j, TableReport& r);
void to_json(nlohmann::json& j, const ScanReport& r);
void from_json(const nlohmann::json& j, ScanReport& r);
void to_json(nlohmann::json& j, const McEstimate& r);
void from_json(const nlohmann::json& j, McEstimate& r);
void to_json(nlohmann::json& j, const QuadraticAverage& r);
void from_json(const nlohmann::json& j, QuadraticAverage& r);

/// Shortest text that parses back to the same long double.
std::string exact_text(long double v);

/// `digits` significant digits, fixed notation, locale-independent.
std::string format_sig(long double v, int digits);

}  // namespace leastprime
