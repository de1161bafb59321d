#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leastprime/symgroup.hpp"

namespace leastprime {

/// A published constant as printed, truncated or rounded to `decimals` places.
struct ReferenceValue {
    std::string quantity;  // little-n, big-N, big-N-odd-union, erdos, pollack, quadratic-little-n
    std::optional<int> n;
    std::optional<CycleType> cls;
    std::string printed;
    long double value = 0;
    int decimals = 0;
    std::string source;
};

/// All pinned values in published table order (identity first within a degree).
std::span<const ReferenceValue> reference_values();

/// Entries for one quantity, restricted to degree n when given, in table order.
std::vector<ReferenceValue> reference_table(const std::string& quantity, std::optional<int> n = std::nullopt);

const ReferenceValue* find_reference(const std::string& quantity, std::optional<int> n = std::nullopt,
                                     const std::optional<CycleType>& cls = std::nullopt);

/// True when `computed`, truncated or rounded to the printed number of
/// decimals, reproduces every printed digit.
bool matches_printed(long double computed, const ReferenceValue& ref);

}  // namespace leastprime
