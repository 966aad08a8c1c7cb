#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "framecheck.hpp"
#include "functional_calculus.hpp"
#include "scenario.hpp"
#include "spectral.hpp"

namespace framespec {

// The polynomial that was actually applied to the operator, as recorded in
// the report: for a series this is the certified truncation.
struct AppliedFunction {
  std::vector<cx> coefficients;
  bool truncated = false;
  double tail_bound = 0.0;
  double truncation_radius = 0.0;

  bool operator==(const AppliedFunction&) const = default;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

// Everything one run produces. The report is self-contained: the scenario
// echo carries every tolerance and default in effect, so re-running the
// echoed scenario reproduces the run. Wall-clock timings are advisory and
// never serialized to machine formats, which must stay byte-reproducible;
// equality ignores them for the same reason.
struct Report {
  std::string tool_version;
  Scenario scenario;
  std::string operator_description;
  std::string function_description;
  std::optional<AppliedFunction> applied;
  std::optional<FrameVerdict> verdict;
  std::optional<FrameBoundEstimates> bounds;
  std::optional<SurjectivityProbe> surjectivity;
  std::optional<ProbeReport> spectrum_probe;
  std::optional<CrossValidation> cross_validation;
  double stabilization_tol = kDefaultStabilizationTol;
  std::string error;         // empty when every stage completed
  std::string failed_stage;  // empty when every stage completed
  std::vector<StageTiming> timings;

  bool operator==(const Report& o) const {
    return tool_version == o.tool_version && scenario == o.scenario &&
           operator_description == o.operator_description &&
           function_description == o.function_description && applied == o.applied &&
           verdict == o.verdict && bounds == o.bounds && surjectivity == o.surjectivity &&
           spectrum_probe == o.spectrum_probe && cross_validation == o.cross_validation &&
           stabilization_tol == o.stabilization_tol && error == o.error &&
           failed_stage == o.failed_stage;
  }
};

// 0 when a definite verdict was delivered, 2 for an inconclusive verdict,
// 1 when any stage failed.
inline int exit_code_for(const Report& r) {
  if (!r.error.empty() || !r.verdict) return 1;
  return r.verdict->verdict == Verdict::Inconclusive ? 2 : 0;
}

inline Report run_scenario(const Scenario& s) {
  Report r;
  r.tool_version = kVersion;
  r.scenario = s;
  r.stabilization_tol = kDefaultStabilizationTol;

  KernelOptions kernel;
  std::optional<OperatorModel> op;
  std::optional<HoloFunction> fn;
  std::optional<CalculusResult> calc;

  auto stage = [&](const char* name, auto&& body) -> bool {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      r.error = e.what();
      r.failed_stage = name;
      ok = false;
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    r.timings.push_back({name, dt.count()});
    return ok;
  };

  if (!stage("make_operator", [&] {
        op = make_operator(s);
        r.operator_description = op->describe();
      })) {
    return r;
  }
  if (!stage("functional_calculus", [&] {
        fn = make_function(s);
        r.function_description = fn->describe();
        calc = apply_function(*fn, *op, s.series_eps);
        r.applied = AppliedFunction{calc->coefficients, calc->truncated, calc->tail_bound,
                                    calc->truncation_radius};
      })) {
    return r;
  }
  if (!stage("criterion_verdict", [&] {
        r.verdict = criterion_verdict(*op, *fn, s.tol, kernel, s.series_eps);
      })) {
    return r;
  }
  if (!stage("estimate_frame_bounds", [&] {
        r.bounds = estimate_frame_bounds(*calc, s.sizes, kernel);
      })) {
    return r;
  }
  if (!stage("surjectivity_probe", [&] {
        r.surjectivity = surjectivity_probe(calc->op, s.sizes, kDefaultStabilizationTol, kernel);
      })) {
    return r;
  }
  if (!stage("spectrum_probe", [&] {
        ProbeOptions popts;
        popts.probe_tol = s.probe_tol;
        popts.max_size = s.max_probe_size;
        popts.boundary_points = s.probe_boundary_points;
        popts.interior_points = s.probe_interior_points;
        popts.kernel = kernel;
        r.spectrum_probe = probe_ap_equals_spectrum(*op, popts);
      })) {
    return r;
  }
  stage("cross_validate", [&] {
    r.cross_validation =
        cross_validate(*r.verdict, *r.bounds, s.decay_threshold, kDefaultStabilizationTol);
  });
  return r;
}

namespace detail_rp {

// 17 significant digits round-trip every binary double exactly, and
// std::to_chars never consults the locale.
inline std::string fmt_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "1e999" : (v < 0 ? "-1e999" : "0");
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, p);
}

// Deterministic pretty JSON writer with explicit key ordering.
class JsonWriter {
 public:
  void begin_object() {
    value_prefix();
    out_ += '{';
    open_.push_back(false);
  }
  void end_object() { close('}'); }
  void begin_array() {
    value_prefix();
    out_ += '[';
    open_.push_back(false);
  }
  void end_array() { close(']'); }
  void key(std::string_view k) {
    item_prefix();
    quote(k);
    out_ += ": ";
    pending_ = true;
  }
  void value(std::string_view s) {
    value_prefix();
    quote(s);
  }
  void value(const char* s) { value(std::string_view(s)); }
  void value(double v) {
    value_prefix();
    out_ += fmt_double(v);
  }
  void value(std::size_t v) {
    value_prefix();
    out_ += std::to_string(v);
  }
  void value(int v) {
    value_prefix();
    out_ += std::to_string(v);
  }
  void value(bool b) {
    value_prefix();
    out_ += b ? "true" : "false";
  }
  void value(const cx& z) {
    begin_array();
    value(z.real());
    value(z.imag());
    end_array();
  }
  void null() {
    value_prefix();
    out_ += "null";
  }
  std::string take() { return std::move(out_); }

 private:
  void indent() { out_.append(2 * open_.size(), ' '); }
  void item_prefix() {
    if (!open_.empty()) {
      if (open_.back()) out_ += ',';
      open_.back() = true;
      out_ += '\n';
      indent();
    }
  }
  void value_prefix() {
    if (pending_) {
      pending_ = false;
      return;
    }
    item_prefix();
  }
  void close(char c) {
    const bool had_items = !open_.empty() && open_.back();
    if (!open_.empty()) open_.pop_back();
    if (had_items) {
      out_ += '\n';
      indent();
    }
    out_ += c;
  }
  void quote(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"':
          out_ += "\\\"";
          break;
        case '\\':
          out_ += "\\\\";
          break;
        case '\n':
          out_ += "\\n";
          break;
        case '\r':
          out_ += "\\r";
          break;
        case '\t':
          out_ += "\\t";
          break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> open_;
  bool pending_ = false;
};

inline void emit_complex_list(JsonWriter& w, const std::vector<cx>& v) {
  w.begin_array();
  for (const cx& z : v) w.value(z);
  w.end_array();
}

inline void emit_size_list(JsonWriter& w, const std::vector<std::size_t>& v) {
  w.begin_array();
  for (std::size_t n : v) w.value(n);
  w.end_array();
}

inline void emit_double_list(JsonWriter& w, const std::vector<double>& v) {
  w.begin_array();
  for (double x : v) w.value(x);
  w.end_array();
}

inline void emit_scenario(JsonWriter& w, const Scenario& s) {
  w.begin_object();
  w.key("operator");
  w.begin_object();
  w.key("kind");
  w.value(s.operator_kind);
  w.key("entries");
  w.begin_array();
  for (const auto& [offset, v] : s.toeplitz_entries) {
    w.begin_object();
    w.key("offset");
    w.value(offset);
    w.key("value");
    w.value(v);
    w.end_object();
  }
  w.end_array();
  w.key("prefix");
  emit_complex_list(w, s.prefix);
  w.key("tail");
  w.begin_object();
  w.key("kind");
  w.value(s.tail_kind);
  w.key("value");
  w.value(s.tail_value);
  w.key("first");
  w.value(s.tail_first);
  w.key("ratio");
  w.value(s.tail_ratio);
  w.key("offset");
  w.value(static_cast<int>(s.tail_offset));
  w.end_object();
  w.end_object();

  w.key("function");
  w.begin_object();
  w.key("kind");
  w.value(s.function_kind);
  w.key("coefficients");
  emit_complex_list(w, s.coefficients);
  w.key("series_eps");
  w.value(s.series_eps);
  w.key("radius");
  w.value(s.series_radius);
  w.key("tail_coefficient");
  w.value(s.series_tail_coefficient);
  w.key("tail_ratio");
  w.value(s.series_tail_ratio);
  w.end_object();

  w.key("analysis");
  w.begin_object();
  w.key("sizes");
  emit_size_list(w, s.sizes);
  w.key("tol");
  w.value(s.tol);
  w.key("decay_threshold");
  w.value(s.decay_threshold);
  w.key("probe_tol");
  w.value(s.probe_tol);
  w.key("max_probe_size");
  w.value(s.max_probe_size);
  w.key("probe_boundary_points");
  w.value(s.probe_boundary_points);
  w.key("probe_interior_points");
  w.value(s.probe_interior_points);
  w.end_object();

  w.key("output");
  w.begin_object();
  w.key("format");
  w.value(s.format);
  w.key("csv");
  w.value(s.csv_path);
  w.key("report");
  w.value(s.report_path);
  w.key("verbose");
  w.value(s.verbose);
  w.end_object();
  w.end_object();
}

inline std::string emit_json(const Report& r) {
  JsonWriter w;
  w.begin_object();
  w.key("tool_version");
  w.value(r.tool_version);
  w.key("scenario");
  emit_scenario(w, r.scenario);
  w.key("operator_description");
  w.value(r.operator_description);
  w.key("function_description");
  w.value(r.function_description);

  w.key("applied_function");
  if (r.applied) {
    w.begin_object();
    w.key("coefficients");
    emit_complex_list(w, r.applied->coefficients);
    w.key("truncated");
    w.value(r.applied->truncated);
    w.key("tail_bound");
    w.value(r.applied->tail_bound);
    w.key("truncation_radius");
    w.value(r.applied->truncation_radius);
    w.end_object();
  } else {
    w.null();
  }

  w.key("verdict");
  if (r.verdict) {
    const FrameVerdict& v = *r.verdict;
    w.begin_object();
    w.key("verdict");
    w.value(to_string(v.verdict));
    w.key("criterion_applicable");
    w.value(v.criterion_applicable);
    w.key("zero_location");
    w.value(to_string(v.zero_location));
    w.key("witness");
    if (v.witness) {
      w.value(*v.witness);
    } else {
      w.null();
    }
    w.key("band");
    w.value(v.band);
    w.key("notes");
    w.value(v.notes);
    w.key("provenance");
    w.value(v.provenance);
    w.end_object();
  } else {
    w.null();
  }

  w.key("bounds");
  if (r.bounds) {
    const FrameBoundEstimates& b = *r.bounds;
    w.begin_object();
    w.key("sizes");
    emit_size_list(w, b.sizes);
    w.key("lower");
    emit_double_list(w, b.lower);
    w.key("upper");
    emit_double_list(w, b.upper);
    w.key("final_lower");
    w.value(b.final_lower);
    w.key("final_upper");
    w.value(b.final_upper);
    w.key("lower_nonincreasing");
    w.value(b.lower_nonincreasing);
    w.key("upper_nondecreasing");
    w.value(b.upper_nondecreasing);
    w.key("provenance");
    w.value(b.provenance);
    w.end_object();
  } else {
    w.null();
  }

  w.key("surjectivity");
  if (r.surjectivity) {
    w.begin_object();
    w.key("sizes");
    emit_size_list(w, r.surjectivity->sizes);
    w.key("distances");
    emit_double_list(w, r.surjectivity->distances);
    w.key("evidence");
    w.value(to_string(r.surjectivity->evidence));
    w.end_object();
  } else {
    w.null();
  }

  w.key("spectrum_probe");
  if (r.spectrum_probe) {
    const ProbeReport& p = *r.spectrum_probe;
    w.begin_object();
    w.key("overall");
    w.value(to_string(p.overall));
    w.key("sizes");
    emit_size_list(w, p.sizes);
    w.key("points");
    w.begin_array();
    for (const ProbePointResult& pt : p.points) {
      w.begin_object();
      w.key("lambda");
      w.value(pt.lambda);
      w.key("distances");
      emit_double_list(w, pt.distances);
      w.key("outcome");
      w.value(to_string(pt.outcome));
      w.end_object();
    }
    w.end_array();
    w.end_object();
  } else {
    w.null();
  }

  w.key("cross_validation");
  if (r.cross_validation) {
    w.begin_object();
    w.key("consistent");
    w.value(r.cross_validation->consistent);
    w.key("description");
    w.value(r.cross_validation->description);
    w.end_object();
  } else {
    w.null();
  }

  w.key("stabilization_tol");
  w.value(r.stabilization_tol);
  w.key("error");
  w.value(r.error);
  w.key("failed_stage");
  w.value(r.failed_stage);
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

inline std::string fmt_complex_text(const cx& z) {
  std::string out = fmt_double(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

inline std::string fmt_fixed(double v, int width) {
  std::ostringstream os;
  os << std::setw(width) << std::setprecision(9) << std::scientific << v;
  return os.str();
}

inline std::string emit_text(const Report& r) {
  std::ostringstream os;

  if (!r.error.empty()) {
    os << "RUN FAILED during stage " << r.failed_stage << "\n";
    os << "error: " << r.error << "\n\n";
  } else if (r.verdict) {
    switch (r.verdict->verdict) {
      case Verdict::NotFrame:
        os << "VERDICT: NOT A FRAME - the image of the basis fails the frame property\n\n";
        break;
      case Verdict::RieszBasis:
        os << "VERDICT: RIESZ BASIS - the image of the basis is a Riesz basis, hence a frame\n\n";
        break;
      case Verdict::Inconclusive:
        os << "VERDICT: INCONCLUSIVE - the symbolic criterion does not apply here\n\n";
        break;
    }
  }

  os << "tool version " << r.tool_version << "\n";
  if (!r.operator_description.empty()) os << "operator: " << r.operator_description << "\n";
  if (!r.function_description.empty()) os << "function: " << r.function_description << "\n";

  if (r.applied) {
    os << "\napplied polynomial\n";
    os << "  degree: " << (r.applied->coefficients.empty() ? 0 : r.applied->coefficients.size() - 1)
       << "\n";
    if (r.applied->truncated) {
      os << "  series truncated at radius " << fmt_double(r.applied->truncation_radius)
         << " with certified tail bound " << fmt_double(r.applied->tail_bound) << "\n";
    }
  }

  if (r.verdict) {
    const FrameVerdict& v = *r.verdict;
    os << "\nsymbolic criterion\n";
    os << "  applicable:     " << (v.criterion_applicable ? "yes" : "no") << "\n";
    os << "  zero location:  " << to_string(v.zero_location) << "\n";
    os << "  witness:        " << (v.witness ? fmt_complex_text(*v.witness) : "none") << "\n";
    os << "  band half-width: " << fmt_double(v.band) << "\n";
    os << "  notes: " << v.notes << "\n";
  }

  if (r.bounds) {
    const FrameBoundEstimates& b = *r.bounds;
    os << "\nframe bound estimates (squared extreme singular values of the sections)\n";
    os << "        N      lower estimate      upper estimate\n";
    for (std::size_t i = 0; i < b.sizes.size(); ++i) {
      os << std::setw(9) << b.sizes[i] << "  " << fmt_fixed(b.lower[i], 18) << "  "
         << fmt_fixed(b.upper[i], 18) << "\n";
    }
    os << "  lower estimates nonincreasing: " << (b.lower_nonincreasing ? "yes" : "no") << "\n";
    os << "  upper estimates nondecreasing: " << (b.upper_nondecreasing ? "yes" : "no") << "\n";
  }

  if (r.surjectivity) {
    os << "\nsurjectivity evidence: " << to_string(r.surjectivity->evidence) << "\n";
    os << "        N      adjoint section distance at zero\n";
    for (std::size_t i = 0; i < r.surjectivity->sizes.size(); ++i) {
      os << std::setw(9) << r.surjectivity->sizes[i] << "  "
         << fmt_fixed(r.surjectivity->distances[i], 18) << "\n";
    }
  }

  if (r.spectrum_probe) {
    const ProbeReport& p = *r.spectrum_probe;
    os << "\nadjoint spectrum probe: " << to_string(p.overall) << " (" << p.points.size()
       << " sample points, sections up to N = " << (p.sizes.empty() ? 0 : p.sizes.back())
       << ")\n";
    if (r.scenario.verbose) {
      for (const ProbePointResult& pt : p.points) {
        os << "  at " << fmt_complex_text(pt.lambda) << ": " << to_string(pt.outcome)
           << ", final distance "
           << fmt_double(pt.distances.empty() ? 0.0 : pt.distances.back()) << "\n";
      }
    }
  }

  if (r.cross_validation) {
    if (r.cross_validation->consistent) {
      os << "\ncross-validation: consistent - " << r.cross_validation->description << "\n";
    } else {
      os << "\nCROSS-VALIDATION TENSION: " << r.cross_validation->description << "\n";
    }
  }

  os << "\ntolerances in effect\n";
  os << "  tol = " << fmt_double(r.scenario.tol)
     << ", decay_threshold = " << fmt_double(r.scenario.decay_threshold)
     << ", probe_tol = " << fmt_double(r.scenario.probe_tol)
     << ", series_eps = " << fmt_double(r.scenario.series_eps)
     << ", stabilization_tol = " << fmt_double(r.stabilization_tol) << "\n";

  if (!r.timings.empty()) {
    os << "\ntimings (wall clock, advisory)\n";
    for (const StageTiming& t : r.timings) {
      std::ostringstream sec;
      sec << std::fixed << std::setprecision(3) << t.seconds;
      os << "  " << std::setw(22) << std::left << t.stage << std::right << sec.str() << " s\n";
    }
  }
  return os.str();
}

}  // namespace detail_rp

inline std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return detail_rp::emit_json(r);
  if (format == "text") return detail_rp::emit_text(r);
  throw ValidationError("report format must be text or json, got \"" + format + "\"");
}

// One row per sweep size: both frame bound estimates and the adjoint section
// distance at zero, comma separated with a decimal point and no locale
// dependence anywhere.
inline std::string emit_csv(const Report& r) {
  if (!r.bounds) throw ValidationError("csv output needs the frame bound sweep");
  if (!r.surjectivity || r.surjectivity->sizes != r.bounds->sizes) {
    throw ValidationError("csv output needs the surjectivity sweep on the same sizes");
  }
  std::string out = "N,lower_bound_estimate,upper_bound_estimate,ap_distance_at_zero\n";
  for (std::size_t i = 0; i < r.bounds->sizes.size(); ++i) {
    out += std::to_string(r.bounds->sizes[i]);
    out += ',';
    out += detail_rp::fmt_double(r.bounds->lower[i]);
    out += ',';
    out += detail_rp::fmt_double(r.bounds->upper[i]);
    out += ',';
    out += detail_rp::fmt_double(r.surjectivity->distances[i]);
    out += '\n';
  }
  return out;
}

}  // namespace framespec
