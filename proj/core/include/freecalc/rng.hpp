#pragma once

#include <cmath>
#include <cstdint>

namespace freecalc {

/// Stateless counter-based random source. Every variate is a pure function of
/// (seed, stream, a, b), so parallel and serial sampling orders produce
/// bit-identical results and any entry can be regenerated independently.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    /// Uniform in [0, 1).
    double uniform(std::uint64_t a, std::uint64_t b) const {
        return static_cast<double>(word(a, b) >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on two derived uniforms.
    double gaussian(std::uint64_t a, std::uint64_t b) const {
        const double u1 = static_cast<double>((word(a, 2 * b) >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = static_cast<double>(word(a, 2 * b + 1) >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t word(std::uint64_t a, std::uint64_t b) const {
        return mix(mix(mix(mix(seed_ + 0x6a09e667f3bcc909ull) ^ stream_) ^ a) ^ b);
    }

    /// Derived source for an independent substream.
    CounterRng substream(std::uint64_t tag) const { return CounterRng(seed_, mix(stream_ ^ tag)); }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace freecalc
