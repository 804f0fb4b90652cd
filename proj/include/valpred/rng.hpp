#pragma once
// Counter-based Philox4x32-10 generator. Each (seed, counter) pair maps to an
// independent block of four 32-bit words, so trial i draws the same numbers
// no matter how trials are split across threads.

#include <array>
#include <cstdint>

namespace valpred {

class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    explicit constexpr Philox4x32(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
    {
    }

    constexpr Block operator()(std::uint64_t counter, std::uint32_t stream = 0) const noexcept
    {
        return block({static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32), stream, 0});
    }

    constexpr Block block(Block ctr) const noexcept
    {
        auto key = key_;
        for (int round = 0; round < 10; ++round) {
            ctr = single_round(ctr, key);
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

    // Two uniforms in [0, 1) with 53 bits each.
    constexpr std::array<double, 2> uniform2(std::uint64_t counter, std::uint32_t stream = 0) const noexcept
    {
        const auto b = (*this)(counter, stream);
        return {to_unit(b[0], b[1]), to_unit(b[2], b[3])};
    }

    static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept
    {
        const std::uint64_t bits = (std::uint64_t{hi >> 5} << 26) | (lo >> 6);
        return static_cast<double>(bits) * 0x1.0p-53;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Block single_round(const Block& c, const std::array<std::uint32_t, 2>& k) noexcept
    {
        const std::uint64_t p0 = std::uint64_t{kMul0} * c[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * c[2];
        return {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    }

    std::array<std::uint32_t, 2> key_;
};

} // namespace valpred
