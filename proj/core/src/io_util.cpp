#include "u2u/io_util.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace u2u {

std::vector<uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f.seekg(0, std::ios::end);
  const auto n = f.tellg();
  f.seekg(0, std::ios::beg);
  std::vector<uint8_t> bytes(size_t(n));
  if (n > 0) f.read(reinterpret_cast<char*>(bytes.data()), n);
  if (!f) throw IoError("read failed: " + path);
  return bytes;
}

void atomic_write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename " + tmp + " -> " + path + ": " + ec.message());
}

namespace {

std::array<uint64_t, 256> make_crc64_table() {
  // CRC-64/XZ: reflected ECMA-182 polynomial.
  constexpr uint64_t poly = 0xC96C5795D7870F42ull;
  std::array<uint64_t, 256> table{};
  for (uint64_t i = 0; i < 256; ++i) {
    uint64_t crc = i;
    for (int bit = 0; bit < 8; ++bit)
      crc = (crc & 1) ? (crc >> 1) ^ poly : crc >> 1;
    table[size_t(i)] = crc;
  }
  return table;
}

}  // namespace

uint64_t crc64(const uint8_t* data, size_t n) {
  static const auto table = make_crc64_table();
  uint64_t crc = ~0ull;
  for (size_t i = 0; i < n; ++i)
    crc = table[(crc ^ data[i]) & 0xff] ^ (crc >> 8);
  return ~crc;
}

void expect_magic(ByteReader& r, const char magic[4], const std::string& what) {
  char got[4];
  if (r.pos + 4 > r.size) throw BadMagic(what + ": file too short for magic");
  r.raw(got, 4);
  if (std::memcmp(got, magic, 4) != 0)
    throw BadMagic(what + ": bad magic, expected " + std::string(magic, 4));
}

}  // namespace u2u
