#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>

namespace oleq {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless: every 128-bit counter maps to an independent 128-bit block,
// so draws are addressable by (path, step, component) and results do not
// depend on evaluation order or worker count.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWey0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWey1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
            key[0] += kWey0;
            key[1] += kWey1;
        }
        return ctr;
    }
};

// splitmix64 finalizer; decorrelates seed/stream combinations.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// FNV-1a over the stream name. Named substreams keep pipelines decoupled:
// adding draws to one stream never shifts another stream's sequence.
inline std::uint64_t stream_id(std::string_view name) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

// Addressable N(0,1) source. A draw cell is identified by two 64-bit
// indices (a, b); each cell yields two independent standard normals via
// Box-Muller on the four Philox output words.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) {
        const std::uint64_t k = mix64(seed ^ mix64(stream));
        key_ = {std::uint32_t(k), std::uint32_t(k >> 32)};
    }

    std::pair<double, double> normal_pair(std::uint64_t a, std::uint64_t b) const {
        const auto w = Philox4x32::block(
            {std::uint32_t(a), std::uint32_t(a >> 32), std::uint32_t(b), std::uint32_t(b >> 32)},
            key_);
        const std::uint64_t u0 = (std::uint64_t(w[0]) << 32) | w[1];
        const std::uint64_t u1 = (std::uint64_t(w[2]) << 32) | w[3];
        const double v0 = double((u0 >> 11) + 1) * 0x1.0p-53;  // (0,1]
        const double v1 = double(u1 >> 11) * 0x1.0p-53;        // [0,1)
        const double rad = std::sqrt(-2.0 * std::log(v0));
        const double ang = 2.0 * std::numbers::pi * v1;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

    double normal(std::uint64_t a, std::uint64_t b) const { return normal_pair(a, b).first; }

    // uniform in [0,1)
    double uniform(std::uint64_t a, std::uint64_t b) const {
        const auto w = Philox4x32::block(
            {std::uint32_t(a), std::uint32_t(a >> 32), std::uint32_t(b), std::uint32_t(b >> 32)},
            key_);
        const std::uint64_t u0 = (std::uint64_t(w[0]) << 32) | w[1];
        return double(u0 >> 11) * 0x1.0p-53;
    }

private:
    std::array<std::uint32_t, 2> key_{};
};

}  // namespace oleq
