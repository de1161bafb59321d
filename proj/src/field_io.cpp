#include <istream>
#include <map>
#include <string>

#include <json.hpp>

#include "leastprime/errors.hpp"
#include "leastprime/frobscan.hpp"

namespace leastprime {
namespace {

BigInt parse_big(const std::string& text, std::size_t line) {
    try {
        if (text.empty()) throw std::runtime_error("");
        std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (i == text.size() || text.find_first_not_of("0123456789", i) != std::string::npos)
            throw std::runtime_error("");
        BigInt v(text);
        return v;
    } catch (...) {
        throw InputError("line " + std::to_string(line) + ": malformed integer '" + text + "'");
    }
}

std::int64_t parse_i64(const std::string& text, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw InputError("line " + std::to_string(line) + ": malformed coefficient '" + text + "'");
    }
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(trim(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    out.push_back(trim(cell));
    return out;
}

void validate_at(const FieldRecord& rec, std::size_t line) {
    try {
        validate(rec);
    } catch (const InputError& e) {
        throw InputError("line " + std::to_string(line) + ": " + e.what());
    }
}

}  // namespace

std::vector<FieldRecord> read_jsonl_records(std::istream& in) {
    std::vector<FieldRecord> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (trim(text).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError("line " + std::to_string(line) + ": invalid JSON: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("coeffs") || !obj["coeffs"].is_array())
            throw InputError("line " + std::to_string(line) + ": expected an object with a \"coeffs\" array");
        FieldRecord rec;
        for (const auto& c : obj["coeffs"]) {
            if (!c.is_number_integer())
                throw InputError("line " + std::to_string(line) + ": coefficients must be integers");
            rec.coeffs.push_back(c.get<std::int64_t>());
        }
        if (obj.contains("disc") && !obj["disc"].is_null()) {
            const auto& d = obj["disc"];
            if (d.is_number_integer()) rec.field_disc = BigInt(d.get<std::int64_t>());
            else if (d.is_string()) rec.field_disc = parse_big(d.get<std::string>(), line);
            else throw InputError("line " + std::to_string(line) + ": \"disc\" must be an integer or a string");
        }
        if (obj.contains("label") && obj["label"].is_string()) rec.label = obj["label"].get<std::string>();
        else rec.label = "line " + std::to_string(line);
        if (obj.contains("r2") && obj["r2"].is_number_integer()) rec.r2 = obj["r2"].get<int>();
        validate_at(rec, line);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<FieldRecord> read_csv_records(std::istream& in) {
    std::vector<FieldRecord> out;
    std::string text;
    std::size_t line = 0;
    std::map<std::string, std::size_t> column;
    int max_coeff = -1;
    while (std::getline(in, text)) {
        ++line;
        if (trim(text).empty()) continue;
        auto cells = split_csv(text);
        if (column.empty()) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                column[cells[i]] = i;
                if (cells[i].size() > 1 && cells[i][0] == 'c' &&
                    cells[i].find_first_not_of("0123456789", 1) == std::string::npos)
                    max_coeff = std::max(max_coeff, std::stoi(cells[i].substr(1)));
            }
            if (max_coeff < 0) throw InputError("line 1: CSV header has no c0..cn columns");
            for (int k = 0; k <= max_coeff; ++k)
                if (!column.count("c" + std::to_string(k)))
                    throw InputError("line 1: CSV header is missing column c" + std::to_string(k));
            continue;
        }
        auto cell = [&](const std::string& name) -> std::string {
            auto it = column.find(name);
            if (it == column.end() || it->second >= cells.size()) return "";
            return cells[it->second];
        };
        FieldRecord rec;
        for (int k = 0; k <= max_coeff; ++k) {
            std::string c = cell("c" + std::to_string(k));
            if (c.empty()) throw InputError("line " + std::to_string(line) + ": missing coefficient c" + std::to_string(k));
            rec.coeffs.push_back(parse_i64(c, line));
        }
        // Shorter polynomials may leave high columns as zero padding.
        while (rec.coeffs.size() > 1 && rec.coeffs.back() == 0) rec.coeffs.pop_back();
        if (std::string d = cell("disc"); !d.empty()) rec.field_disc = parse_big(d, line);
        rec.label = cell("label");
        if (rec.label.empty()) rec.label = "line " + std::to_string(line);
        if (std::string r2 = cell("r2"); !r2.empty()) rec.r2 = static_cast<int>(parse_i64(r2, line));
        validate_at(rec, line);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace leastprime
