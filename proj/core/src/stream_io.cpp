#include "staircase/stream_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "staircase/gf.hpp"

namespace staircase {

namespace {

void put_u16(std::ofstream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put_u32(std::ofstream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

std::uint16_t get_u16(const unsigned char* p) { return p[0] | (p[1] << 8); }
std::uint32_t get_u32(const unsigned char* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

void write_stream(const std::filesystem::path& path, const Stream& stream) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const BchSpec& code = stream.code();
  out.write(kStreamMagic, 4);
  out.put(static_cast<char>(kStreamVersion));
  out.put(static_cast<char>(code.field.q));
  out.put(static_cast<char>(code.t));
  out.put(static_cast<char>(code.extended ? 1 : 0));
  put_u16(out, static_cast<std::uint16_t>(code.shorten));
  put_u16(out, static_cast<std::uint16_t>(stream.m()));
  put_u32(out, static_cast<std::uint32_t>(stream.block_count()));

  const int m = stream.m();
  const int row_bytes = (m + 7) / 8;
  std::vector<char> row(row_bytes);
  for (const BitMatrix& block : stream.blocks) {
    for (int r = 0; r < m; ++r) {
      std::fill(row.begin(), row.end(), 0);
      for (int c = 0; c < m; ++c) {
        if (block.get(r, c)) row[c >> 3] |= static_cast<char>(1 << (c & 7));
      }
      out.write(row.data(), row_bytes);
    }
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Stream read_stream(const std::filesystem::path& path, std::optional<std::uint32_t> poly) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  unsigned char hdr[16];
  if (!in.read(reinterpret_cast<char*>(hdr), 16)) {
    throw std::runtime_error("truncated stream header in " + path.string());
  }
  if (std::memcmp(hdr, kStreamMagic, 4) != 0) {
    throw std::runtime_error(path.string() + " is not a stream file (bad magic)");
  }
  if (hdr[4] != kStreamVersion) {
    throw std::runtime_error("unsupported stream file version " + std::to_string(hdr[4]));
  }
  const int q = hdr[5];
  const int t = hdr[6];
  const bool extended = (hdr[7] & 1) != 0;
  const int shorten = get_u16(hdr + 8);
  const int m = get_u16(hdr + 10);
  const std::uint32_t blocks = get_u32(hdr + 12);

  BchSpec code = build_bch(build_field(q, poly.value_or(default_primitive_poly(q))), t, extended,
                           shorten);
  if (code.n != 2 * m) {
    throw std::runtime_error("stream header inconsistent: n=" + std::to_string(code.n) +
                             " but m=" + std::to_string(m));
  }
  auto params = std::make_shared<const StaircaseParams>(make_staircase(std::move(code)));
  Stream stream = make_zero_stream(params, static_cast<int>(blocks));

  const int row_bytes = (m + 7) / 8;
  std::vector<unsigned char> row(row_bytes);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    for (int r = 0; r < m; ++r) {
      if (!in.read(reinterpret_cast<char*>(row.data()), row_bytes)) {
        throw std::runtime_error("truncated stream data in " + path.string());
      }
      for (int c = 0; c < m; ++c) {
        if ((row[c >> 3] >> (c & 7)) & 1) stream.blocks[b].set(r, c, true);
      }
    }
  }
  return stream;
}

}  // namespace staircase
