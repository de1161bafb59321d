#include "leastprime/polymod.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace leastprime {
namespace gf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a % p;
    while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("gf: element not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

namespace {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // a, b < p < 2^63, no wrap
    return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

}  // namespace

Poly reduce(std::span<const std::int64_t> coeffs, std::uint64_t p) {
    Poly out(coeffs.size());
    auto sp = static_cast<__int128>(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        __int128 r = static_cast<__int128>(coeffs[i]) % sp;
        if (r < 0) r += sp;
        out[i] = static_cast<std::uint64_t>(r);
    }
    trim(out);
    return out;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = submod(x, y, p);
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
    if (b.empty()) throw std::domain_error("gf: division by the zero polynomial");
    Poly rem = a;
    if (rem.size() < b.size()) return {Poly{}, rem};
    Poly quot(rem.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = inverse(b.back(), p);
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        std::uint64_t c = mulmod(rem[i], lead_inv, p);
        std::size_t shift = i - (b.size() - 1);
        quot[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = submod(rem[shift + j], mulmod(c, b[j], p), p);
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    std::uint64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
    trim(out);
    return out;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result = divmod(Poly{1 % p}, m, p).second;
    Poly b = divmod(base, m, p).second;
    trim(result);
    while (e > 0) {
        if (e & 1) result = divmod(mul(result, b, p), m, p).second;
        e >>= 1;
        if (e > 0) b = divmod(mul(b, b, p), m, p).second;
    }
    return result;
}

}  // namespace gf

BigInt poly_disc(std::span<const std::int64_t> coeffs) {
    if (coeffs.size() < 3) throw std::invalid_argument("poly_disc: degree must be at least 2");
    if (coeffs.back() != 1) throw std::invalid_argument("poly_disc: polynomial must be monic");
    const int n = static_cast<int>(coeffs.size()) - 1;
    const int size = 2 * n - 1;

    // Sylvester matrix of f (n-1 shifted rows) and f' (n shifted rows),
    // coefficients highest degree first.
    std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, 0));
    for (int r = 0; r < n - 1; ++r)
        for (int i = 0; i <= n; ++i) m[r][r + i] = coeffs[n - i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) m[n - 1 + r][r + i] = BigInt(coeffs[n - i]) * (n - i);

    // Fraction-free Bareiss elimination; every division is exact.
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < size; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt resultant = m[size - 1][size - 1] * sign;
    return (n * (n - 1) / 2) % 2 == 0 ? resultant : BigInt(-resultant);
}

std::optional<std::vector<int>> degree_pattern_mod_p(std::span<const std::int64_t> coeffs, std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("degree_pattern_mod_p: p out of range");
    if (coeffs.empty()) throw std::invalid_argument("degree_pattern_mod_p: empty polynomial");
    gf::Poly f = gf::reduce(coeffs, p);
    if (gf::degree(f) != static_cast<int>(coeffs.size()) - 1)
        throw std::invalid_argument("degree_pattern_mod_p: p divides the leading coefficient");

    std::vector<int> degrees;
    if (gf::degree(f) == 0) return degrees;
    if (gf::degree(gf::gcd(f, gf::derivative(f, p), p)) != 0) return std::nullopt;

    const gf::Poly x{0, 1 % p};
    gf::Poly rest = f;
    gf::Poly h = gf::divmod(x, rest, p).second;  // x^{p^(d-1)} mod rest
    for (int d = 1; 2 * d <= gf::degree(rest); ++d) {
        h = gf::powmod(h, p, rest, p);
        gf::Poly g = gf::gcd(rest, gf::sub(h, x, p), p);
        int dg = gf::degree(g);
        if (dg > 0) {
            degrees.insert(degrees.end(), static_cast<std::size_t>(dg / d), d);
            rest = gf::divmod(rest, g, p).first;
            h = gf::divmod(h, rest, p).second;
        }
    }
    if (gf::degree(rest) > 0) degrees.push_back(gf::degree(rest));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

}  // namespace leastprime
