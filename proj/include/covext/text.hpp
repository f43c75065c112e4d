#pragma once

// Small helpers shared by the line-oriented text formats.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "covext/error.hpp"
#include "covext/surface.hpp"

namespace covext::text {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t from = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > from) out.push_back(s.substr(from, i - from));
  }
  return out;
}

/// First word and the trimmed remainder.
inline std::pair<std::string_view, std::string_view> head_rest(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(0, i), trim(s.substr(i))};
}

inline std::vector<std::string_view> lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      std::string_view l = s.substr(from, i - from);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      if (i < s.size() || !l.empty()) out.push_back(l);
      from = i + 1;
    }
  }
  return out;
}

inline std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

inline std::uint64_t parse_u64(std::string_view s, std::string_view what, std::uint64_t max = 1'000'000'000'000ULL) {
  s = trim(s);
  if (s.empty()) throw input_error(std::string(what) + ": expected a nonnegative integer");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw input_error(std::string(what) + ": expected a nonnegative integer, got \"" + std::string(s) + "\"");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > max) throw input_error(std::string(what) + ": value exceeds " + std::to_string(max));
  }
  return v;
}

/// "orientable g=1 k=2" or "nonorientable g=3 k=1".
inline SurfaceSpec parse_surface(std::string_view s) {
  const auto w = split_ws(s);
  if (w.size() != 3) throw input_error("surface: expected \"<orientable|nonorientable> g=<int> k=<int>\"");
  SurfaceSpec spec;
  if (w[0] == "orientable") spec.orientable = true;
  else if (w[0] == "nonorientable" || w[0] == "non-orientable") spec.orientable = false;
  else throw input_error("surface: unknown orientability \"" + std::string(w[0]) + "\"");
  if (w[1].substr(0, 2) != "g=" || w[2].substr(0, 2) != "k=") {
    throw input_error("surface: expected g=<int> k=<int>");
  }
  spec.genus = static_cast<std::uint32_t>(parse_u64(w[1].substr(2), "surface genus", 1000));
  spec.boundary_count = static_cast<std::uint32_t>(parse_u64(w[2].substr(2), "surface boundary count", 1000));
  spec.validate();
  return spec;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace covext::text
