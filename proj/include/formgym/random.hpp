#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace formgym {

/// Seeded stream with portable sampling. std::mt19937_64 output is fixed by
/// the standard, but std:: distributions are not, so bounded draws are done
/// here by rejection.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 1) with 53 bits.
    double unit();
    bool chance(double p) { return unit() < p; }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(below(items.size()))];
    }

private:
    std::mt19937_64 engine_;
};

/// Stream keyed by (seed, label, index): first 8 bytes of SHA-256 over the key.
RandomStream derive_stream(std::uint64_t seed, std::string_view label, std::uint64_t index);

}  // namespace formgym
