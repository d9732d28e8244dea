#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace formgym {

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);
/// Digest of the concatenation of `parts`.
std::string sha256_hex(std::initializer_list<std::span<const std::uint8_t>> parts);

/// `byte_count` bytes from the OS CSPRNG, hex-encoded.
std::string random_hex(std::size_t byte_count);

std::string base64_encode(std::span<const std::uint8_t> bytes);

}  // namespace formgym
