#include "formgym/random.hpp"

#include <string>

#include "formgym/digest.hpp"

namespace formgym {

std::uint64_t RandomStream::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t value = engine_();
    while (value >= limit) value = engine_();
    return value % bound;
}

std::int64_t RandomStream::between(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double RandomStream::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

RandomStream derive_stream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    const std::string key = std::to_string(seed) + "|" + std::string(label) + "|" + std::to_string(index);
    const std::string hex = sha256_hex(key);
    return RandomStream(std::stoull(hex.substr(0, 16), nullptr, 16));
}

}  // namespace formgym
