/*
   Copyright 2026 The Streamfold Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Reader for the known-answer vector file. Header-only and independent of
// the library so the CLI and the tests can share it.
//
//   <alg> <key-hex | -> <message> <digest-hex>
//   message: "-" (empty), "hex:<bytes>" or "rep:<count>:<byte>"
//
// Blank lines and lines starting with '#' are skipped.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamfold::kat {

struct Vector {
  std::size_t line = 0;
  std::string alg;
  std::vector<std::uint8_t> key;
  std::vector<std::uint8_t> message;
  std::vector<std::uint8_t> digest;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::optional<std::vector<std::uint8_t>> decode_hex(const std::string& s) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (s.size() % 2 != 0) return std::nullopt;
  std::vector<std::uint8_t> out(s.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(s[2 * i]), lo = nibble(s[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

inline constexpr std::uint64_t kMaxRepeat = 1u << 26;

inline std::vector<std::uint8_t> parse_message(std::size_t line, const std::string& field) {
  if (field == "-") return {};
  if (field.rfind("hex:", 0) == 0) {
    auto bytes = decode_hex(field.substr(4));
    if (!bytes || bytes->empty()) throw ParseError(line, "bad hex message");
    return *bytes;
  }
  if (field.rfind("rep:", 0) == 0) {
    const auto colon = field.find(':', 4);
    if (colon == std::string::npos) throw ParseError(line, "bad repeated message");
    const std::string count_text = field.substr(4, colon - 4);
    auto byte = decode_hex(field.substr(colon + 1));
    if (count_text.empty() || count_text.size() > 9 ||
        count_text.find_first_not_of("0123456789") != std::string::npos || !byte ||
        byte->size() != 1)
      throw ParseError(line, "bad repeated message");
    const std::uint64_t count = std::stoull(count_text);
    if (count > kMaxRepeat) throw ParseError(line, "repeat count too large");
    return std::vector<std::uint8_t>(count, (*byte)[0]);
  }
  throw ParseError(line, "unknown message encoding");
}

/// Throws ParseError on the first malformed line.
inline std::vector<Vector> parse(std::istream& in) {
  std::vector<Vector> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream fields(text);
    std::string alg, key, msg, digest, extra;
    if (!(fields >> alg >> key >> msg >> digest) || (fields >> extra))
      throw ParseError(line, "expected 4 fields");
    Vector v;
    v.line = line;
    v.alg = alg;
    if (key != "-") {
      auto k = decode_hex(key);
      if (!k || k->empty()) throw ParseError(line, "bad hex key");
      v.key = *k;
    }
    v.message = parse_message(line, msg);
    auto d = decode_hex(digest);
    if (!d || d->empty()) throw ParseError(line, "bad hex digest");
    v.digest = *d;
    out.push_back(std::move(v));
  }
  if (in.bad()) throw ParseError(line, "read error");
  return out;
}

}  // namespace streamfold::kat
