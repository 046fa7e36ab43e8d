#pragma once
// Small output helpers shared by the subcommands.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "rlu/errors.hpp"

namespace rlu::cli::detail {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips.
inline std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Finite doubles as numbers; infinities and NaN as null.
inline Json json_number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  q.push_back('"');
  return q;
}

/// Writes `text` to `path`, or to `fallback` when no path is given.
inline void emit(const std::string& text, const std::optional<std::filesystem::path>& path, std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw IoError("cannot write " + path->string());
  f << text;
  if (!f) throw IoError("write failed for " + path->string());
}

}  // namespace rlu::cli::detail
