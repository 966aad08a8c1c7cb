#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "framecheck.hpp"
#include "holo_function.hpp"
#include "operators.hpp"
#include "sequence_rule.hpp"
#include "spectral.hpp"

namespace framespec {

// A scenario document is a small INI-style text: four sections, key = value
// lines, full-line comments starting with # or ;. It fully determines one
// analysis run. Complex values read as a+bi (also plain reals, "2i", "-i");
// lists are comma separated. The parser validates everything it can and
// reports every problem it finds in one go, not just the first.
//
//   [operator]
//   kind = right_shift | left_shift | toeplitz | diagonal |
//          weighted_shift | backward_weighted_shift
//   entries = 0:1, 1:1            (toeplitz; offset k is the k-th subdiagonal,
//                                  negative k the |k|-th superdiagonal)
//   prefix = 1, 0.5               (diagonal / shifts: leading values)
//   tail = constant | geometric | reciprocal
//   value = 0.5                   (constant tail)
//   first = 0.5                   (geometric tail start)
//   ratio = 0.5                   (geometric tail ratio, modulus below one)
//   offset = 1                    (reciprocal tail: values 1/(n+offset))
//
//   [function]
//   kind = polynomial | exp | geometric | custom_series
//   coefficients = 1, 1           (polynomial / custom_series)
//   series_eps = 1e-12            (series truncation tolerance)
//   radius = 2.0                  (custom_series convergence radius)
//   tail_coefficient = 1.0        (custom_series envelope |a_j| <= c * q^j)
//   tail_ratio = 0.5              (the q of that envelope)
//
//   [analysis]
//   sizes = 50, 100, 200, 500, 1000, 2000
//   tol = 1e-9
//   decay_threshold = 1e-4
//   probe_tol = 0.05
//   max_probe_size = 1600
//   probe_boundary_points = 16
//   probe_interior_points = 8
//
//   [output]
//   format = text | json
//   csv = bounds.csv              (optional; empty means no csv)
//   report = report.txt           (optional; empty means stdout)
//   verbose = false
struct Scenario {
  // operator
  std::string operator_kind;
  std::map<int, cx> toeplitz_entries;
  std::vector<cx> prefix;
  std::string tail_kind;
  cx tail_value{0.0};
  cx tail_first{0.0};
  cx tail_ratio{0.0};
  long tail_offset = 1;
  // function
  std::string function_kind;
  std::vector<cx> coefficients;
  double series_eps = 1e-12;
  double series_radius = 0.0;
  double series_tail_coefficient = 0.0;
  double series_tail_ratio = 0.0;
  // analysis
  std::vector<std::size_t> sizes = default_sweep_sizes();
  double tol = 1e-9;
  double decay_threshold = kDefaultDecayThreshold;
  double probe_tol = 0.05;
  std::size_t max_probe_size = 1600;
  std::size_t probe_boundary_points = 16;
  std::size_t probe_interior_points = 8;
  // output
  std::string format = "text";
  std::string csv_path;
  std::string report_path;
  bool verbose = false;

  bool operator==(const Scenario&) const = default;
};

namespace detail_sc {

inline std::string trim(std::string_view v) {
  const char* ws = " \t\r\n";
  const auto a = v.find_first_not_of(ws);
  if (a == std::string_view::npos) return "";
  const auto b = v.find_last_not_of(ws);
  return std::string(v.substr(a, b - a + 1));
}

inline bool parse_real_token(std::string_view t, double& out) {
  if (t.empty()) return false;
  if (t.front() == '+') t.remove_prefix(1);
  if (t.empty()) return false;
  double v = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v)) return false;
  out = v;
  return true;
}

inline std::optional<cx> parse_complex(const std::string& raw) {
  std::string token;
  for (char c : raw) {
    if (c != ' ' && c != '\t') token.push_back(c);
  }
  if (token.empty()) return std::nullopt;
  const char last = static_cast<char>(token.back() | 0x20);
  if (last != 'i') {
    double re = 0.0;
    if (!parse_real_token(token, re)) return std::nullopt;
    return cx(re, 0.0);
  }
  const std::string body = token.substr(0, token.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](const std::string& part, double& im) {
    if (part.empty() || part == "+") {
      im = 1.0;
      return true;
    }
    if (part == "-") {
      im = -1.0;
      return true;
    }
    return parse_real_token(part, im);
  };
  if (split == std::string::npos) {
    double im = 0.0;
    if (!imag_of(body, im)) return std::nullopt;
    return cx(0.0, im);
  }
  double re = 0.0, im = 0.0;
  if (!parse_real_token(body.substr(0, split), re)) return std::nullopt;
  if (!imag_of(body.substr(split), im)) return std::nullopt;
  return cx(re, im);
}

inline std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(std::string_view(v).substr(start)));
      break;
    }
    out.push_back(trim(std::string_view(v).substr(start, comma - start)));
    start = comma + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

struct KeyTable {
  std::map<std::string, std::set<std::string>> keys = {
      {"operator", {"kind", "entries", "prefix", "tail", "value", "first", "ratio", "offset"}},
      {"function",
       {"kind", "coefficients", "series_eps", "radius", "tail_coefficient", "tail_ratio"}},
      {"analysis",
       {"sizes", "tol", "decay_threshold", "probe_tol", "max_probe_size",
        "probe_boundary_points", "probe_interior_points"}},
      {"output", {"format", "csv", "report", "verbose"}},
  };
};

}  // namespace detail_sc

inline Scenario parse_scenario(const std::string& text) {
  using detail_sc::trim;
  Scenario s;
  std::vector<std::string> problems;
  static const detail_sc::KeyTable table;

  std::map<std::string, std::string> kv;
  {
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      const std::string line = trim(raw);
      if (line.empty() || line.front() == '#' || line.front() == ';') continue;
      if (line.front() == '[') {
        if (line.back() != ']' || line.size() < 3) {
          problems.push_back("line " + std::to_string(lineno) + ": malformed section header");
          section.clear();
          continue;
        }
        section = trim(std::string_view(line).substr(1, line.size() - 2));
        if (table.keys.find(section) == table.keys.end()) {
          problems.push_back("unknown section [" + section + "]");
          section.clear();
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        problems.push_back("line " + std::to_string(lineno) +
                           ": expected a section header or key = value");
        continue;
      }
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string val = trim(std::string_view(line).substr(eq + 1));
      if (section.empty()) {
        problems.push_back("line " + std::to_string(lineno) + ": key \"" + key +
                           "\" appears before any section");
        continue;
      }
      const auto& known = table.keys.at(section);
      if (known.find(key) == known.end()) {
        problems.push_back("unknown key " + section + "." + key);
        continue;
      }
      if (!kv.emplace(section + "." + key, val).second) {
        problems.push_back("duplicate key " + section + "." + key);
      }
    }
  }

  auto has = [&](const char* full) { return kv.find(full) != kv.end(); };
  auto get = [&](const char* full) { return kv.at(full); };

  auto want_complex = [&](const char* full, cx& out) {
    if (!has(full)) return false;
    const auto v = detail_sc::parse_complex(get(full));
    if (!v) {
      problems.push_back(std::string(full) + ": cannot parse \"" + get(full) +
                         "\" as a complex number");
      return false;
    }
    out = *v;
    return true;
  };
  auto want_real = [&](const char* full, double& out) {
    if (!has(full)) return false;
    double v = 0.0;
    if (!detail_sc::parse_real_token(get(full), v)) {
      problems.push_back(std::string(full) + ": cannot parse \"" + get(full) +
                         "\" as a real number");
      return false;
    }
    out = v;
    return true;
  };
  auto want_count = [&](const char* full, std::size_t& out) {
    if (!has(full)) return false;
    const std::string& t = get(full);
    unsigned long long v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) {
      problems.push_back(std::string(full) + ": cannot parse \"" + t + "\" as a count");
      return false;
    }
    out = static_cast<std::size_t>(v);
    return true;
  };
  auto want_complex_list = [&](const char* full, std::vector<cx>& out) {
    if (!has(full)) return false;
    out.clear();
    bool ok = true;
    for (const auto& item : detail_sc::split_list(get(full))) {
      const auto v = detail_sc::parse_complex(item);
      if (!v) {
        problems.push_back(std::string(full) + ": cannot parse \"" + item +
                           "\" as a complex number");
        ok = false;
        continue;
      }
      out.push_back(*v);
    }
    return ok;
  };

  // ---- operator section ----
  if (has("operator.kind")) {
    s.operator_kind = get("operator.kind");
  } else {
    problems.push_back("operator.kind is required");
  }
  static const std::set<std::string> op_kinds = {
      "right_shift", "left_shift",    "toeplitz",
      "diagonal",    "weighted_shift", "backward_weighted_shift"};
  const bool op_known = op_kinds.count(s.operator_kind) > 0;
  if (!s.operator_kind.empty() && !op_known) {
    problems.push_back("operator.kind \"" + s.operator_kind + "\" is not supported");
  }
  const bool is_toeplitz = s.operator_kind == "toeplitz";
  const bool uses_rule = s.operator_kind == "diagonal" || s.operator_kind == "weighted_shift" ||
                         s.operator_kind == "backward_weighted_shift";

  if (has("operator.entries")) {
    if (!is_toeplitz) {
      problems.push_back("operator.entries only applies to toeplitz operators");
    } else {
      for (const auto& item : detail_sc::split_list(get("operator.entries"))) {
        const auto colon = item.find(':');
        bool ok = colon != std::string::npos;
        int offset = 0;
        cx value(0.0);
        if (ok) {
          const std::string ks = trim(std::string_view(item).substr(0, colon));
          const auto [p, ec] = std::from_chars(ks.data(), ks.data() + ks.size(), offset);
          ok = ec == std::errc() && p == ks.data() + ks.size();
          if (ok) {
            const auto v = detail_sc::parse_complex(trim(std::string_view(item).substr(colon + 1)));
            ok = v.has_value();
            if (ok) value = *v;
          }
        }
        if (!ok) {
          problems.push_back("operator.entries: cannot parse \"" + item +
                             "\" as offset:value");
        } else if (!s.toeplitz_entries.emplace(offset, value).second) {
          problems.push_back("operator.entries: duplicate offset " + std::to_string(offset));
        }
      }
      if (s.toeplitz_entries.empty()) {
        problems.push_back("operator.entries must hold at least one offset:value pair");
      }
    }
  } else if (is_toeplitz) {
    problems.push_back("operator.entries is required for toeplitz operators");
  }

  for (const char* key : {"operator.prefix", "operator.tail", "operator.value", "operator.first",
                          "operator.ratio", "operator.offset"}) {
    if (has(key) && op_known && !uses_rule) {
      problems.push_back(std::string(key) + " only applies to diagonal or weighted shift operators");
    }
  }
  if (uses_rule) {
    want_complex_list("operator.prefix", s.prefix);
    if (has("operator.tail")) {
      s.tail_kind = get("operator.tail");
      if (s.tail_kind != "constant" && s.tail_kind != "geometric" && s.tail_kind != "reciprocal") {
        problems.push_back("operator.tail \"" + s.tail_kind + "\" is not supported");
        s.tail_kind.clear();
      }
    } else {
      problems.push_back("operator.tail is required for " + s.operator_kind + " operators");
    }
    auto only_for = [&](const char* key, const char* tail) {
      if (has(key) && !s.tail_kind.empty() && s.tail_kind != tail) {
        problems.push_back(std::string(key) + " requires tail = " + tail);
      }
    };
    only_for("operator.value", "constant");
    only_for("operator.first", "geometric");
    only_for("operator.ratio", "geometric");
    only_for("operator.offset", "reciprocal");
    if (s.tail_kind == "constant" && !want_complex("operator.value", s.tail_value)) {
      if (!has("operator.value")) problems.push_back("operator.value is required for a constant tail");
    }
    if (s.tail_kind == "geometric") {
      const bool have_first = want_complex("operator.first", s.tail_first);
      const bool have_ratio = want_complex("operator.ratio", s.tail_ratio);
      if (!has("operator.first")) problems.push_back("operator.first is required for a geometric tail");
      if (!has("operator.ratio")) problems.push_back("operator.ratio is required for a geometric tail");
      if (have_first && have_ratio && !(std::abs(s.tail_ratio) < 1.0)) {
        problems.push_back("operator.ratio must have modulus below one");
      }
    }
    if (s.tail_kind == "reciprocal") {
      if (has("operator.offset")) {
        double off = 0.0;
        if (want_real("operator.offset", off)) {
          if (off != std::floor(off) || off < -1e9 || off > 1e9) {
            problems.push_back("operator.offset must be an integer");
          } else {
            s.tail_offset = static_cast<long>(off);
          }
        }
      }
      if (static_cast<long>(s.prefix.size()) + s.tail_offset < 1) {
        problems.push_back("operator.offset: the first reciprocal denominator must be positive");
      }
    }
  }

  // ---- function section ----
  if (has("function.kind")) {
    s.function_kind = get("function.kind");
  } else {
    problems.push_back("function.kind is required");
  }
  static const std::set<std::string> fn_kinds = {"polynomial", "exp", "geometric",
                                                "custom_series"};
  const bool fn_known = fn_kinds.count(s.function_kind) > 0;
  if (!s.function_kind.empty() && !fn_known) {
    problems.push_back("function.kind \"" + s.function_kind + "\" is not supported");
  }
  const bool wants_coeffs = s.function_kind == "polynomial" || s.function_kind == "custom_series";
  const bool is_custom = s.function_kind == "custom_series";

  if (has("function.coefficients")) {
    if (fn_known && !wants_coeffs) {
      problems.push_back("function.coefficients only applies to polynomial or custom_series");
    } else if (want_complex_list("function.coefficients", s.coefficients) &&
               s.coefficients.empty()) {
      problems.push_back("function.coefficients must hold at least one value");
    }
  } else if (wants_coeffs) {
    problems.push_back("function.coefficients is required for " + s.function_kind);
  }
  for (const char* key : {"function.radius", "function.tail_coefficient", "function.tail_ratio"}) {
    if (has(key) && fn_known && !is_custom) {
      problems.push_back(std::string(key) + " only applies to custom_series");
    }
  }
  if (is_custom) {
    if (!has("function.radius")) {
      problems.push_back("function.radius is required for a custom series");
    } else if (want_real("function.radius", s.series_radius) && !(s.series_radius > 0.0)) {
      problems.push_back("function.radius must be positive");
    }
    if (!has("function.tail_coefficient") || !has("function.tail_ratio")) {
      problems.push_back(
          "tail bound required: a custom series needs function.tail_coefficient and "
          "function.tail_ratio declaring |a_j| <= c * q^j");
    } else {
      const bool have_c = want_real("function.tail_coefficient", s.series_tail_coefficient);
      const bool have_q = want_real("function.tail_ratio", s.series_tail_ratio);
      if (have_c && !(s.series_tail_coefficient >= 0.0)) {
        problems.push_back("function.tail_coefficient must be nonnegative");
      }
      if (have_q && !(s.series_tail_ratio > 0.0)) {
        problems.push_back("function.tail_ratio must be positive");
      }
      if (have_c && have_q && s.series_radius > 0.0 &&
          s.series_radius * s.series_tail_ratio > 1.0) {
        problems.push_back(
            "function.radius exceeds 1 / tail_ratio, where the declared tail envelope diverges");
      }
      if (have_c && have_q) {
        for (std::size_t j = 0; j < s.coefficients.size(); ++j) {
          const double envelope =
              s.series_tail_coefficient * std::pow(s.series_tail_ratio, static_cast<double>(j));
          if (std::abs(s.coefficients[j]) > envelope * (1.0 + 1e-12)) {
            problems.push_back("function.coefficients: entry " + std::to_string(j) +
                               " exceeds the declared tail envelope");
            break;
          }
        }
      }
    }
  }
  if (want_real("function.series_eps", s.series_eps) && !(s.series_eps > 0.0)) {
    problems.push_back("function.series_eps must be positive");
  }

  // ---- analysis section ----
  if (has("analysis.sizes")) {
    const auto items = detail_sc::split_list(get("analysis.sizes"));
    std::vector<std::size_t> sizes;
    bool ok = !items.empty();
    if (items.empty()) problems.push_back("analysis.sizes must hold at least one size");
    for (const auto& item : items) {
      unsigned long long v = 0;
      const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || p != item.data() + item.size() || v == 0) {
        problems.push_back("analysis.sizes: cannot parse \"" + item + "\" as a positive count");
        ok = false;
        continue;
      }
      sizes.push_back(static_cast<std::size_t>(v));
    }
    for (std::size_t i = 1; ok && i < sizes.size(); ++i) {
      if (sizes[i] <= sizes[i - 1]) {
        problems.push_back("analysis.sizes not increasing");
        ok = false;
      }
    }
    if (ok) s.sizes = std::move(sizes);
  }
  if (want_real("analysis.tol", s.tol) && !(s.tol > 0.0)) {
    problems.push_back("analysis.tol must be positive");
  }
  if (want_real("analysis.decay_threshold", s.decay_threshold) && !(s.decay_threshold > 0.0)) {
    problems.push_back("analysis.decay_threshold must be positive");
  }
  if (want_real("analysis.probe_tol", s.probe_tol) && !(s.probe_tol > 0.0)) {
    problems.push_back("analysis.probe_tol must be positive");
  }
  if (want_count("analysis.max_probe_size", s.max_probe_size) && s.max_probe_size == 0) {
    problems.push_back("analysis.max_probe_size must be positive");
  }
  if (want_count("analysis.probe_boundary_points", s.probe_boundary_points) &&
      s.probe_boundary_points == 0) {
    problems.push_back("analysis.probe_boundary_points must be positive");
  }
  want_count("analysis.probe_interior_points", s.probe_interior_points);

  // ---- output section ----
  if (has("output.format")) {
    s.format = get("output.format");
    if (s.format != "text" && s.format != "json") {
      problems.push_back("output.format must be text or json");
    }
  }
  if (has("output.csv")) s.csv_path = get("output.csv");
  if (has("output.report")) s.report_path = get("output.report");
  if (has("output.verbose")) {
    const std::string& v = get("output.verbose");
    if (v == "true") {
      s.verbose = true;
    } else if (v == "false") {
      s.verbose = false;
    } else {
      problems.push_back("output.verbose must be true or false");
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return s;
}

namespace detail_sc {

inline SequenceRule scenario_rule(const Scenario& s) {
  if (s.tail_kind == "constant") return SequenceRule::constant_tail(s.prefix, s.tail_value);
  if (s.tail_kind == "geometric") {
    return SequenceRule::geometric_tail(s.prefix, s.tail_first, s.tail_ratio);
  }
  return SequenceRule::reciprocal_tail(s.prefix, s.tail_offset);
}

}  // namespace detail_sc

inline OperatorModel make_operator(const Scenario& s) {
  if (s.operator_kind == "right_shift") return OperatorModel::right_shift();
  if (s.operator_kind == "left_shift") return OperatorModel::left_shift();
  if (s.operator_kind == "toeplitz") return OperatorModel::toeplitz(s.toeplitz_entries);
  if (s.operator_kind == "diagonal") return OperatorModel::diagonal(detail_sc::scenario_rule(s));
  if (s.operator_kind == "weighted_shift") {
    return OperatorModel::weighted_shift(detail_sc::scenario_rule(s));
  }
  if (s.operator_kind == "backward_weighted_shift") {
    return OperatorModel::backward_weighted_shift(detail_sc::scenario_rule(s));
  }
  throw ValidationError("operator.kind \"" + s.operator_kind + "\" is not supported");
}

inline HoloFunction make_function(const Scenario& s) {
  if (s.function_kind == "polynomial") return HoloFunction::polynomial(s.coefficients);
  if (s.function_kind == "exp") return HoloFunction::exp_series();
  if (s.function_kind == "geometric") return HoloFunction::geometric_series();
  if (s.function_kind == "custom_series") {
    const auto coeffs = s.coefficients;
    const double c = s.series_tail_coefficient;
    const double q = s.series_tail_ratio;
    return HoloFunction::power_series(
        [coeffs](std::size_t j) { return j < coeffs.size() ? coeffs[j] : cx(0.0); },
        [c, q](std::size_t d, double r) {
          const double x = q * r;
          if (!(x < 1.0)) return std::numeric_limits<double>::infinity();
          return c * std::pow(x, static_cast<double>(d) + 1.0) / (1.0 - x);
        },
        s.series_radius, "custom series");
  }
  throw ValidationError("function.kind \"" + s.function_kind + "\" is not supported");
}

struct ShippedScenario {
  std::string name;
  std::string summary;
  std::string text;
};

// The four scenarios shipped with the tool, also present as files under
// scenarios/. They cover the classic window-sum family, whose zero on the
// spectral circle sinks the frame property, and the invertible contrast case.
inline const std::vector<ShippedScenario>& shipped_scenarios() {
  static const std::vector<ShippedScenario> list = {
      {"one_plus_shift",
       "images e_n + e_(n+1) of the basis: not a frame, zero on the boundary",
       "# Window sums of two consecutive basis vectors: (e_n + e_(n+1)).\n"
       "# The transfer function 1 + z vanishes at -1, on the spectral circle,\n"
       "# so the image sequence fails to be a frame; the truncated lower\n"
       "# frame bounds collapse toward zero in lockstep.\n"
       "\n"
       "[operator]\n"
       "kind = right_shift\n"
       "\n"
       "[function]\n"
       "kind = polynomial\n"
       "coefficients = 1, 1\n"
       "\n"
       "[analysis]\n"
       "sizes = 50, 100, 200, 500, 1000, 2000\n"
       "\n"
       "[output]\n"
       "format = text\n"},
      {"running_sum_two",
       "window sums of three consecutive basis vectors: not a frame",
       "# Window sums of three consecutive basis vectors.\n"
       "# 1 + z + z^2 vanishes at the primitive cube roots of unity, again on\n"
       "# the spectral circle: no frame, for the same boundary-zero reason.\n"
       "\n"
       "[operator]\n"
       "kind = right_shift\n"
       "\n"
       "[function]\n"
       "kind = polynomial\n"
       "coefficients = 1, 1, 1\n"
       "\n"
       "[analysis]\n"
       "sizes = 50, 100, 200, 500, 1000, 2000\n"
       "\n"
       "[output]\n"
       "format = text\n"},
      {"running_sum_three",
       "window sums of four consecutive basis vectors: not a frame",
       "# Window sums of four consecutive basis vectors.\n"
       "# 1 + z + z^2 + z^3 vanishes at -1 and at +-i, all on the spectral\n"
       "# circle; the window-sum family misses the frame property at every\n"
       "# window length.\n"
       "\n"
       "[operator]\n"
       "kind = right_shift\n"
       "\n"
       "[function]\n"
       "kind = polynomial\n"
       "coefficients = 1, 1, 1, 1\n"
       "\n"
       "[analysis]\n"
       "sizes = 50, 100, 200, 500, 1000, 2000\n"
       "\n"
       "[output]\n"
       "format = text\n"},
      {"shift_minus_two",
       "images under the shift minus twice the identity: a Riesz basis",
       "# The contrast case: z - 2 keeps its only zero well outside the\n"
       "# spectral disk, so the image sequence is a Riesz basis; the lower\n"
       "# frame bound plateaus near 1 and the upper near 9.\n"
       "\n"
       "[operator]\n"
       "kind = right_shift\n"
       "\n"
       "[function]\n"
       "kind = polynomial\n"
       "coefficients = -2, 1\n"
       "\n"
       "[analysis]\n"
       "sizes = 50, 100, 200, 500, 1000, 2000\n"
       "\n"
       "[output]\n"
       "format = text\n"},
  };
  return list;
}

}  // namespace framespec
