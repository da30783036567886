#pragma once

// Plain-text point files:
//
//   # d=2 n=3          (optional header)
//   0.25 0.5
//   0.5 0.75
//   1 0
//
// One point per line, coordinates separated by spaces. Doubles are written in
// shortest round-trip form, so write -> read reproduces every bit.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "point_set.hpp"

namespace stardisc {

inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline void write_points(std::ostream& os, const PointSet& ps, bool header = false) {
  if (header) os << "# d=" << ps.dim() << " n=" << ps.size() << '\n';
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto p = ps.point(k);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) os << ' ';
      os << format_double(p[j]);
    }
    os << '\n';
  }
}

namespace detail {

inline std::optional<std::size_t> header_field(std::string_view line, std::string_view key) {
  const auto pos = line.find(key);
  if (pos == std::string_view::npos) return std::nullopt;
  const char* first = line.data() + pos + key.size();
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), value);
  if (ec != std::errc{} || ptr == first)
    throw parse_error("malformed header field '" + std::string(key) + "'");
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline PointSet parse_points(std::string_view text) {
  std::optional<std::size_t> dim, count;
  std::vector<double> coords;
  std::size_t rows = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (rows == 0 && line.find("d=") != std::string_view::npos) {
        dim = detail::header_field(line, "d=");
        count = detail::header_field(line, "n=");
        if (dim == 0) throw parse_error("header declares d=0");
      }
      continue;
    }

    std::size_t fields = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || (ptr < end && *ptr != ' ' && *ptr != '\t'))
        throw parse_error("line " + std::to_string(line_no) + ": bad number");
      if (!(value >= 0.0 && value <= 1.0))
        throw parse_error("line " + std::to_string(line_no) + ": coordinate outside [0,1]");
      coords.push_back(value);
      ++fields;
      p = ptr;
    }
    if (!dim) dim = fields;
    if (fields != *dim)
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(*dim) + " coordinates, found " + std::to_string(fields));
    ++rows;
  }

  if (!dim) throw parse_error("no points and no header");
  if (count && *count != rows)
    throw parse_error("header declares n=" + std::to_string(*count) + " but file has " +
                      std::to_string(rows) + " points");
  return PointSet(*dim, std::move(coords));
}

inline PointSet read_points(std::istream& is) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return parse_points(text);
}

/// 64-bit FNV-1a, used as a stable digest of input bytes in reports.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace stardisc
