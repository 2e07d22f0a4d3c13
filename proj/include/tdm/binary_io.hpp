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

#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "tdm/errors.hpp"

namespace tdm {

std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed = 0);

/// Little-endian binary writer with a running CRC32 over everything written.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path);
  ~BinaryWriter();

  void write_bytes(const void* data, std::size_t len);
  void write_u32(std::uint32_t v);
  void write_u64(std::uint64_t v);
  void write_f64(double v);
  void write_f64_array(std::span<const double> v);
  void write_magic(const char magic[4]) { write_bytes(magic, 4); }

  /// Appends the CRC32 of all preceding bytes and closes the file.
  void finish_with_checksum();

  std::uint32_t checksum() const { return crc_; }

 private:
  std::ofstream out_;
  std::string path_;
  std::uint32_t crc_ = 0;
  bool finished_ = false;
};

/// Reader counterpart; verify_checksum() checks the trailing CRC32.
class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path);

  void read_bytes(void* data, std::size_t len);
  std::uint32_t read_u32();
  std::uint64_t read_u64();
  double read_f64();
  std::vector<double> read_f64_array(std::size_t n);
  void expect_magic(const char magic[4], const std::string& what);

  /// Reads the trailing u32 and compares it with the CRC of everything
  /// consumed so far. Throws on mismatch or trailing garbage.
  void verify_checksum(const std::string& what);

 private:
  std::ifstream in_;
  std::string path_;
  std::uint32_t crc_ = 0;
};

}  // namespace tdm
