#pragma once

#include <filesystem>
#include <optional>

#include "staircase/staircase.hpp"

namespace staircase {

// Stream file layout (little-endian):
//   bytes 0-3   magic "STRC"
//   byte  4     format version (1)
//   byte  5     q
//   byte  6     t
//   byte  7     flags (bit 0: extended)
//   bytes 8-9   shorten (u16)
//   bytes 10-11 m (u16)
//   bytes 12-15 block count (u32)
// followed by the blocks: m rows of ceil(m/8) bytes each, bits packed
// LSB-first within each byte.
inline constexpr char kStreamMagic[4] = {'S', 'T', 'R', 'C'};
inline constexpr std::uint8_t kStreamVersion = 1;

void write_stream(const std::filesystem::path& path, const Stream& stream);

// Rebuilds the code from the header; the primitive polynomial is not stored,
// so callers may override the built-in table.
Stream read_stream(const std::filesystem::path& path,
                   std::optional<std::uint32_t> primitive_poly = std::nullopt);

}  // namespace staircase
