#pragma once

// Small line/token helpers shared by the file format code.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lkts::textio {

inline std::string strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  return std::string(line);
}

inline std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep, bool keep_empty = false) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::string piece = trim(s.substr(start, i - start));
      if (keep_empty || !piece.empty()) out.push_back(std::move(piece));
      start = i + 1;
    }
  }
  return out;
}

struct ParseError : std::runtime_error {
  ParseError(const std::string& where, size_t line, const std::string& what)
      : std::runtime_error(where + ":" + std::to_string(line) + ": " + what) {}
};

inline uint32_t parse_uint(const std::string& tok, const std::string& where, size_t line) {
  if (tok.empty()) throw ParseError(where, line, "empty integer token");
  uint64_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') throw ParseError(where, line, "bad integer '" + tok + "'");
    v = v * 10 + static_cast<uint64_t>(ch - '0');
    if (v > 0xFFFFFFFFull) throw ParseError(where, line, "integer overflow in '" + tok + "'");
  }
  return static_cast<uint32_t>(v);
}

// "key=value" pairs on a header line after the leading magic token.
inline std::vector<std::pair<std::string, std::string>> parse_kv(
    const std::vector<std::string>& toks) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& t : toks) {
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    out.emplace_back(t.substr(0, eq), t.substr(eq + 1));
  }
  return out;
}

}  // namespace lkts::textio
