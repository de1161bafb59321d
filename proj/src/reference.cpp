#include "leastprime/reference.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "leastprime/reference_data.hpp"

namespace leastprime {
namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        parts.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return parts;
}

std::vector<ReferenceValue> load() {
    auto doc = nlohmann::json::parse(detail::kReferenceJson);
    std::vector<ReferenceValue> out;
    for (const auto& row : doc.at("values")) {
        ReferenceValue v;
        v.quantity = row.at("quantity").get<std::string>();
        if (!row.at("n").is_null()) v.n = row.at("n").get<int>();
        if (!row.at("class").is_null()) v.cls = CycleType(parse_parts(row.at("class").get<std::string>()));
        v.printed = row.at("printed").get<std::string>();
        v.value = std::stold(v.printed);
        std::size_t dot = v.printed.find('.');
        v.decimals = dot == std::string::npos ? 0 : static_cast<int>(v.printed.size() - dot - 1);
        v.source = row.at("source").get<std::string>();
        if (v.cls && (!v.n || v.cls->degree() != *v.n))
            throw std::logic_error("reference value for class " + v.cls->to_string() + " has a mismatched degree");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::span<const ReferenceValue> reference_values() {
    static const std::vector<ReferenceValue> values = load();
    return values;
}

std::vector<ReferenceValue> reference_table(const std::string& quantity, std::optional<int> n) {
    std::vector<ReferenceValue> out;
    for (const ReferenceValue& v : reference_values())
        if (v.quantity == quantity && (!n || v.n == n)) out.push_back(v);
    return out;
}

const ReferenceValue* find_reference(const std::string& quantity, std::optional<int> n,
                                     const std::optional<CycleType>& cls) {
    for (const ReferenceValue& v : reference_values())
        if (v.quantity == quantity && v.n == n && v.cls == cls) return &v;
    return nullptr;
}

bool matches_printed(long double computed, const ReferenceValue& ref) {
    if (!std::isfinite(computed)) return false;
    std::string rounded = fmt::format("{:.{}f}", computed, ref.decimals);
    // Truncate from a long expansion so that rounding cannot carry into the kept digits.
    std::string wide = fmt::format("{:.{}f}", computed, ref.decimals + 12);
    std::string truncated = wide.substr(0, wide.size() - 12);
    if (ref.decimals == 0 && !truncated.empty() && truncated.back() == '.') truncated.pop_back();
    return rounded == ref.printed || truncated == ref.printed;
}

}  // namespace leastprime
