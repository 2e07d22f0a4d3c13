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

#include "tdm/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tdm/errors.hpp"

namespace tdm {

namespace {

std::string trim(const std::string& s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  auto b = std::find_if_not(s.begin(), s.end(), is_space);
  auto e = std::find_if_not(s.rbegin(), s.rend(), is_space).base();
  return b < e ? std::string(b, e) : std::string();
}

}  // namespace

KvConfig KvConfig::parse(const std::string& text) {
  KvConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    require(eq != std::string::npos, "config line ", lineno,
            ": expected key=value, got \"", t, "\"");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    require(!key.empty(), "config line ", lineno, ": empty key");
    cfg.entries_[key] = value;
  }
  return cfg;
}

KvConfig KvConfig::load(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open config file: ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void KvConfig::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

bool KvConfig::has(const std::string& key) const {
  return entries_.count(key) > 0;
}

std::optional<std::string> KvConfig::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string KvConfig::get_string(const std::string& key,
                                 const std::string& dflt) const {
  return find(key).value_or(dflt);
}

std::int64_t KvConfig::get_int(const std::string& key, std::int64_t dflt) const {
  auto v = find(key);
  if (!v) return dflt;
  try {
    return std::stoll(*v);
  } catch (const std::exception&) {
    fail("config key ", key, ": not an integer: \"", *v, "\"");
  }
}

std::uint64_t KvConfig::get_u64(const std::string& key,
                                std::uint64_t dflt) const {
  auto v = find(key);
  if (!v) return dflt;
  try {
    return std::stoull(*v);
  } catch (const std::exception&) {
    fail("config key ", key, ": not an unsigned integer: \"", *v, "\"");
  }
}

double KvConfig::get_double(const std::string& key, double dflt) const {
  auto v = find(key);
  if (!v) return dflt;
  try {
    return std::stod(*v);
  } catch (const std::exception&) {
    fail("config key ", key, ": not a number: \"", *v, "\"");
  }
}

bool KvConfig::get_bool(const std::string& key, bool dflt) const {
  auto v = find(key);
  if (!v) return dflt;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  fail("config key ", key, ": not a boolean: \"", *v, "\"");
}

}  // namespace tdm
