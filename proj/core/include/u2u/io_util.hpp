#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "u2u/errors.hpp"

namespace u2u {

std::vector<uint8_t> read_file_bytes(const std::string& path);

/// Writes to <path>.tmp then renames, so readers never see a partial file.
void atomic_write_file(const std::string& path, const std::vector<uint8_t>& bytes);

/// CRC-64/XZ (ECMA-182 polynomial, reflected).
uint64_t crc64(const uint8_t* data, size_t n);

/// Little-endian append helpers.
struct ByteWriter {
  std::vector<uint8_t> bytes;

  void raw(const void* p, size_t n) {
    const auto* b = static_cast<const uint8_t*>(p);
    bytes.insert(bytes.end(), b, b + n);
  }
  void u8(uint8_t v) { bytes.push_back(v); }
  void u16(uint16_t v) { raw(&v, 2); }
  void u32(uint32_t v) { raw(&v, 4); }
  void u64(uint64_t v) { raw(&v, 8); }
  void f32(float v) { raw(&v, 4); }
  void f64(double v) { raw(&v, 8); }
  void str(const std::string& s) {
    u32(uint32_t(s.size()));
    raw(s.data(), s.size());
  }
};

/// Cursor over a byte buffer; throws TruncatedFile when reads run past the end.
struct ByteReader {
  const uint8_t* data = nullptr;
  size_t size = 0;
  size_t pos = 0;

  explicit ByteReader(const std::vector<uint8_t>& b) : data(b.data()), size(b.size()) {}

  void raw(void* out, size_t n) {
    if (pos + n > size) throw TruncatedFile("file ends mid-record");
    std::memcpy(out, data + pos, n);
    pos += n;
  }
  uint8_t u8() { uint8_t v; raw(&v, 1); return v; }
  uint16_t u16() { uint16_t v; raw(&v, 2); return v; }
  uint32_t u32() { uint32_t v; raw(&v, 4); return v; }
  uint64_t u64() { uint64_t v; raw(&v, 8); return v; }
  float f32() { float v; raw(&v, 4); return v; }
  double f64() { double v; raw(&v, 8); return v; }
  std::string str() {
    const uint32_t n = u32();
    if (pos + n > size) throw TruncatedFile("file ends mid-string");
    std::string s(reinterpret_cast<const char*>(data + pos), n);
    pos += n;
    return s;
  }
  bool done() const { return pos >= size; }
};

void expect_magic(ByteReader& r, const char magic[4], const std::string& what);

}  // namespace u2u
