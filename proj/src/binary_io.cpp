// Copyright 2026 The tdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdm/binary_io.hpp"

#include <array>
#include <bit>

namespace tdm {

namespace {

std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) {
      c = (c & 1) ? (0xedb88320u ^ (c >> 1)) : (c >> 1);
    }
    table[i] = c;
  }
  return table;
}

const std::array<std::uint32_t, 256>& crc_table() {
  static const auto table = make_crc_table();
  return table;
}

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

}  // namespace

std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint32_t c = seed ^ 0xffffffffu;
  for (std::size_t i = 0; i < len; ++i) {
    c = crc_table()[(c ^ p[i]) & 0xffu] ^ (c >> 8);
  }
  return c ^ 0xffffffffu;
}

BinaryWriter::BinaryWriter(const std::string& path)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
  require(out_.good(), "cannot open for writing: ", path);
}

BinaryWriter::~BinaryWriter() = default;

void BinaryWriter::write_bytes(const void* data, std::size_t len) {
  out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  require(out_.good(), "write failed: ", path_);
  crc_ = crc32(data, len, crc_);
}

void BinaryWriter::write_u32(std::uint32_t v) { write_bytes(&v, sizeof v); }
void BinaryWriter::write_u64(std::uint64_t v) { write_bytes(&v, sizeof v); }
void BinaryWriter::write_f64(double v) { write_bytes(&v, sizeof v); }

void BinaryWriter::write_f64_array(std::span<const double> v) {
  write_u64(v.size());
  if (!v.empty()) write_bytes(v.data(), v.size() * sizeof(double));
}

void BinaryWriter::finish_with_checksum() {
  std::uint32_t crc = crc_;
  out_.write(reinterpret_cast<const char*>(&crc), sizeof crc);
  out_.close();
  require(out_.good(), "close failed: ", path_);
  finished_ = true;
}

BinaryReader::BinaryReader(const std::string& path)
    : in_(path, std::ios::binary), path_(path) {
  require(in_.good(), "cannot open for reading: ", path);
}

void BinaryReader::read_bytes(void* data, std::size_t len) {
  in_.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
  require(in_.gcount() == static_cast<std::streamsize>(len),
          "truncated file: ", path_);
  crc_ = crc32(data, len, crc_);
}

std::uint32_t BinaryReader::read_u32() {
  std::uint32_t v = 0;
  read_bytes(&v, sizeof v);
  return v;
}

std::uint64_t BinaryReader::read_u64() {
  std::uint64_t v = 0;
  read_bytes(&v, sizeof v);
  return v;
}

double BinaryReader::read_f64() {
  double v = 0;
  read_bytes(&v, sizeof v);
  return v;
}

std::vector<double> BinaryReader::read_f64_array(std::size_t n) {
  std::vector<double> v(n);
  if (n > 0) read_bytes(v.data(), n * sizeof(double));
  return v;
}

void BinaryReader::expect_magic(const char magic[4], const std::string& what) {
  char got[4] = {};
  read_bytes(got, 4);
  require(std::memcmp(got, magic, 4) == 0, what, ": bad magic in ", path_);
}

void BinaryReader::verify_checksum(const std::string& what) {
  std::uint32_t expected = crc_;
  std::uint32_t stored = 0;
  in_.read(reinterpret_cast<char*>(&stored), sizeof stored);
  require(in_.gcount() == sizeof stored, what, ": missing checksum in ", path_);
  require(stored == expected, what, ": checksum mismatch in ", path_,
          " (stored ", stored, ", computed ", expected, ")");
  char extra = 0;
  in_.read(&extra, 1);
  require(in_.gcount() == 0, what, ": trailing bytes after checksum in ", path_);
}

}  // namespace tdm
