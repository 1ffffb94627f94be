#pragma once

/// \file io.hpp
/// Text and JSON formats.
///
/// Sedenion text is a signed sum of terms, each a decimal literal, a basis
/// token e0..e15, or a literal followed by a basis token (optionally with
/// `*`): `e1-e10`, `0.5+2e4`, `-1.5*e3 + 2`. A literal is never read in
/// scientific notation, so `2e4` is 2 times e4. A JSON array of 16 numbers is
/// accepted as well.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sedenion/cd_core.hpp"
#include "sedenion/errors.hpp"
#include "sedenion/star_series.hpp"

namespace sedenion {

using json = nlohmann::json;

namespace detail {

inline void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool read_decimal(std::string_view s, std::size_t& i, double& out) {
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  }
  if (i == start || (i == start + 1 && s[start] == '.')) {
    i = start;
    return false;
  }
  out = std::stod(std::string(s.substr(start, i - start)));
  return true;
}

inline element parse_json_array(const json& j) {
  if (!j.is_array() || j.size() != 16) throw parse_error("expected a JSON array of 16 numbers");
  element x;
  for (std::size_t m = 0; m < 16; ++m) {
    if (!j[m].is_number()) throw parse_error("non-numeric entry in sedenion array");
    x[m] = j[m].get<double>();
  }
  return x;
}

}  // namespace detail

inline element parse_sedenion(std::string_view text) {
  std::size_t i = 0;
  detail::skip_space(text, i);
  if (i < text.size() && text[i] == '[') {
    try {
      return detail::parse_json_array(json::parse(text));
    } catch (const json::exception& ex) {
      throw parse_error(std::string("bad sedenion array: ") + ex.what());
    }
  }

  element x;
  bool first = true;
  for (;;) {
    detail::skip_space(text, i);
    if (i >= text.size()) break;
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
      detail::skip_space(text, i);
    } else if (!first) {
      throw parse_error("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;

    double coeff = 1.0;
    const bool has_number = detail::read_decimal(text, i, coeff);
    detail::skip_space(text, i);
    if (has_number && i < text.size() && text[i] == '*') {
      ++i;
      detail::skip_space(text, i);
      if (i >= text.size() || text[i] != 'e') throw parse_error("expected basis token after '*'");
    }
    std::size_t index = 0;
    if (i < text.size() && text[i] == 'e') {
      ++i;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw parse_error("basis token 'e' needs an index");
      index = std::stoul(std::string(text.substr(start, i - start)));
      if (index > 15) throw parse_error("basis index e" + std::to_string(index) + " out of range");
    } else if (!has_number) {
      throw parse_error("expected a number or basis token at offset " + std::to_string(i));
    }
    x[index] += sign * coeff;
  }
  if (first) throw parse_error("empty sedenion");
  return x;
}

/// %.12g
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_number(const extended_real& r) {
  return r.is_infinite() ? std::string("inf") : format_number(r.value());
}

/// Inverse of parse_sedenion for the text form, with 12 significant digits.
/// Coefficients below 1e-14 of the largest one are rounding noise and are left out.
inline std::string format_sedenion(const element& x) {
  double largest = 0.0;
  for (std::size_t m = 0; m < x.dim(); ++m) largest = std::max(largest, std::abs(x[m]));
  std::string out;
  for (std::size_t m = 0; m < x.dim(); ++m) {
    const double c = x[m];
    if (c == 0.0 || std::abs(c) < 1e-14 * largest) continue;
    const std::string mag = format_number(std::abs(c));
    if (mag == "0") continue;
    if (c < 0.0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (m == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "e" + std::to_string(m);
    }
  }
  return out.empty() ? std::string("0") : out;
}

inline json to_json(const element& x) {
  json j = json::array();
  const element s = x.promoted(max_level);
  for (std::size_t m = 0; m < 16; ++m) j.push_back(s[m]);
  return j;
}

inline element element_from_json(const json& j) {
  if (j.is_string()) return parse_sedenion(j.get<std::string>());
  return detail::parse_json_array(j);
}

/// Sequence spec JSON:
///   {"kind":"geometric","terms":[{"coeff":<sedenion>,"ratio":r},...]}
///   {"kind":"lacunary","coeff":<sedenion>,"ratio":r}
///   {"kind":"table","values":[<sedenion>,...],"candidates":[<sedenion>,...]}
/// where <sedenion> is sedenion text or a 16-array.
inline seq_spec seq_spec_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "geometric") {
      std::vector<geometric_term> terms;
      for (const auto& t : j.at("terms")) {
        terms.push_back({element_from_json(t.at("coeff")), t.at("ratio").get<double>()});
      }
      return seq_spec::geometric(std::move(terms));
    }
    if (kind == "lacunary") {
      return seq_spec::lacunary(element_from_json(j.at("coeff")), j.at("ratio").get<double>());
    }
    if (kind == "table") {
      std::vector<element> values;
      for (const auto& v : j.at("values")) values.push_back(element_from_json(v));
      seq_spec s = seq_spec::tabulated(std::move(values));
      if (j.contains("candidates")) {
        for (const auto& c : j.at("candidates")) s.candidates.emplace_back(element_from_json(c));
      }
      return s;
    }
    throw parse_error("unknown sequence kind '" + kind + "'");
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad sequence spec: ") + ex.what());
  } catch (const argument_error& ex) {
    throw parse_error(std::string("bad sequence spec: ") + ex.what());
  }
}

inline seq_spec parse_seq_spec(std::string_view text) {
  try {
    return seq_spec_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw parse_error(std::string("bad sequence spec: ") + ex.what());
  }
}

}  // namespace sedenion
