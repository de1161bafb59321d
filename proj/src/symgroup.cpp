#include "leastprime/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace leastprime {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("cycle type: empty partition");
    for (int k : parts_) {
        if (k < 1) throw std::invalid_argument("cycle type: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

CycleType CycleType::identity(int n) {
    if (n < 1) throw std::invalid_argument("cycle type: degree must be positive");
    return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1));
}

bool CycleType::is_even() const {
    int transpositions = 0;
    for (int k : parts_) transpositions += k - 1;
    return transpositions % 2 == 0;
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string CycleType::cycle_notation() const {
    // Cycles listed shortest-first, matching how the classes are usually
    // written: (12)(345) rather than (123)(45).
    std::vector<int> cycles;
    for (int k : parts_)
        if (k > 1) cycles.push_back(k);
    if (cycles.empty()) return "e";
    std::sort(cycles.begin(), cycles.end());
    std::string out;
    int next = 1;
    for (int len : cycles) {
        out += '(';
        for (int i = 0; i < len; ++i) {
            int point = next++;
            if (point >= 10) out += '[' + std::to_string(point) + ']';
            else out += static_cast<char>('0' + point);
        }
        out += ')';
    }
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range for 64 bits");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::vector<CycleType> cycle_types(int n) {
    if (n < 1) throw std::invalid_argument("cycle_types: n must be at least 1");
    if (n > 20) throw std::invalid_argument("cycle_types: n must be at most 20");
    std::vector<CycleType> out;
    std::vector<int> current;
    // Parts chosen largest-first with a non-increasing cap gives descending lex order.
    std::function<void(int, int)> extend = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, cap); k >= 1; --k) {
            current.push_back(k);
            extend(remaining - k, k);
            current.pop_back();
        }
    };
    extend(n, n);
    return out;
}

std::uint64_t class_size(const CycleType& ct) {
    std::map<int, int> multiplicity;
    for (int k : ct.parts()) ++multiplicity[k];
    std::uint64_t centralizer = 1;
    for (auto [k, m] : multiplicity) {
        for (int i = 0; i < m; ++i) centralizer *= static_cast<std::uint64_t>(k);
        centralizer *= factorial(m);
    }
    return factorial(ct.degree()) / centralizer;
}

ClassDensity class_density(const CycleType& ct) {
    return Rational(static_cast<Int128>(class_size(ct)), static_cast<Int128>(factorial(ct.degree())));
}

CycleType class_of_degree_pattern(std::span<const int> degrees, int n) {
    long sum = 0;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("degree pattern: degrees must be positive");
        sum += d;
    }
    if (sum != n)
        throw std::invalid_argument("degree pattern: degrees sum to " + std::to_string(sum) + ", expected " +
                                    std::to_string(n));
    return CycleType(std::vector<int>(degrees.begin(), degrees.end()));
}

}  // namespace leastprime
