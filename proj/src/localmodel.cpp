#include "leastprime/localmodel.hpp"

#include <stdexcept>

namespace leastprime {

LocalModel::LocalModel(int degree, std::vector<int> f_coefficients, std::vector<RamifiedType> types)
    : degree_(degree), f_coefficients_(std::move(f_coefficients)), types_(std::move(types)) {}

const LocalModel& LocalModel::for_degree(int n) {
    static const LocalModel cubic(3, {1, 1},
                                  {
                                      {"1^2 1", 1, 1},
                                      {"1^3", 1, 2},
                                  });
    static const LocalModel quartic(4, {1, 2, 1},
                                    {
                                        {"1^2 1 1", Rational(1, 2), 1},
                                        {"1^2 2", Rational(1, 2), 1},
                                        {"1^2 1^2", Rational(1, 2), 2},
                                        {"2^2", Rational(1, 2), 2},
                                        {"1^3 1", 1, 2},
                                        {"1^4", 1, 3},
                                    });
    static const LocalModel quintic(5, {1, 2, 2, 1},
                                    {
                                        {"1^2 1 1 1", Rational(1, 6), 1},
                                        {"1^2 1 2", Rational(1, 2), 1},
                                        {"1^2 3", Rational(1, 3), 1},
                                        {"1^2 1^2 1", Rational(1, 2), 2},
                                        {"2^2 1", Rational(1, 2), 2},
                                        {"1^3 1 1", Rational(1, 2), 2},
                                        {"1^3 2", Rational(1, 2), 2},
                                        {"1^3 1^2", 1, 3},
                                        {"1^4 1", 1, 3},
                                        {"1^5", 1, 4},
                                    });
    switch (n) {
        case 3: return cubic;
        case 4: return quartic;
        case 5: return quintic;
        default:
            throw std::invalid_argument("local model: degree " + std::to_string(n) +
                                        " unsupported (only 3, 4, 5)");
    }
}

Rational LocalModel::f(std::uint64_t p) const {
    Rational total;
    for (std::size_t i = 0; i < f_coefficients_.size(); ++i)
        total += Rational(f_coefficients_[i]) * inverse_power(p, static_cast<int>(i) + 1);
    return total;
}

Rational LocalModel::unramified_density(std::uint64_t p, const CycleType& ct) const {
    if (ct.degree() != degree_)
        throw std::invalid_argument("local model: class " + ct.to_string() + " is not a class of S_" +
                                    std::to_string(degree_));
    return class_density(ct) / (Rational(1) + f(p));
}

Rational LocalModel::ramified_density_total(std::uint64_t p) const {
    Rational fp = f(p);
    return fp / (Rational(1) + fp);
}

std::vector<std::pair<std::string, Rational>> LocalModel::ramified_densities(std::uint64_t p) const {
    Rational norm = Rational(1) + f(p);
    std::vector<std::pair<std::string, Rational>> out;
    out.reserve(types_.size());
    for (const auto& t : types_) out.emplace_back(t.label, t.mass(p) / norm);
    return out;
}

Rational f(int n, std::uint64_t p) { return LocalModel::for_degree(n).f(p); }

Rational unramified_density(int n, std::uint64_t p, const CycleType& ct) {
    return LocalModel::for_degree(n).unramified_density(p, ct);
}

Rational ramified_density_total(int n, std::uint64_t p) { return LocalModel::for_degree(n).ramified_density_total(p); }

std::vector<std::pair<std::string, Rational>> ramified_densities(int n, std::uint64_t p) {
    return LocalModel::for_degree(n).ramified_densities(p);
}

}  // namespace leastprime
