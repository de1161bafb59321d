#pragma once

#include <array>
#include <cstdint>

namespace leastprime {

/// Philox4x32-10 counter-based generator: a keyed
/// bijection of a 128-bit counter. Stateless, so any (key, counter) pair
/// can be evaluated independently on any thread.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

/// Uniform doubles in [0, 1) for one Monte-Carlo sample, keyed by
/// (seed, sample index); the draw number is the low counter half.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)} {}

    /// 53-bit uniform.
    double next() {
        if (slot_ == 2) {
            block_ = Philox4x32::generate({static_cast<std::uint32_t>(draw_), static_cast<std::uint32_t>(draw_ >> 32),
                                           index_[0], index_[1]},
                                          key_);
            ++draw_;
            slot_ = 0;
        }
        std::uint64_t bits = (std::uint64_t{block_[2 * slot_]} << 32) | block_[2 * slot_ + 1];
        ++slot_;
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    Philox4x32::Key key_;
    std::array<std::uint32_t, 2> index_;
    std::uint64_t draw_ = 0;
    Philox4x32::Counter block_{};
    int slot_ = 2;
};

}  // namespace leastprime
