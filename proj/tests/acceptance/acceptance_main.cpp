// Acceptance sweep: each numbered criterion prints exactly one PASS/FAIL
// line with its pinned tolerances spelled out in code. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <framespec/detail/polyops.hpp>
#include <framespec/framecheck.hpp>
#include <framespec/functional_calculus.hpp>
#include <framespec/scenario.hpp>
#include <framespec/spectral.hpp>

#include "../support/oracles.hpp"

using namespace framespec;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(bool ok, int idx, const char* label, const std::string& detail) {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, label,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<cx> ones(std::size_t count) { return std::vector<cx>(count, cx(1.0)); }

// 1. The window-sum family (images of the basis under 1 + z + ... + z^k) is
// never a frame; for k = 1 the boundary witness sits within 1e-8 of -1.
// Each symbolic run finishes in under a second.
void criterion_1() {
  const OperatorModel s = OperatorModel::right_shift();
  bool ok = true;
  double witness_err = -1.0;
  double slowest = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto t0 = Clock::now();
    const FrameVerdict v = criterion_verdict(s, HoloFunction::polynomial(ones(k + 1)));
    slowest = std::max(slowest, seconds_since(t0));
    ok = ok && v.verdict == Verdict::NotFrame && v.zero_location == ZeroLocation::Boundary;
    if (k == 1) {
      ok = ok && v.witness.has_value();
      if (v.witness) {
        witness_err = std::abs(*v.witness - cx(-1.0));
        ok = ok && witness_err <= 1e-8;
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "witness error %.3e (tol 1e-8), slowest symbolic run %.3f s (limit 1 s)",
                witness_err, slowest);
  report(ok && slowest < 1.0, 1, "window-sum family is never a frame, witness at -1", detail);
}

// 2. For the sum of the basis vector and its shift, the lower frame bound
// estimate follows the closed form 4cos^2(N pi/(2N+1)) within 1e-8 at
// N = 50, 500, 2000, hence falls below 1e-5 at N = 2000; whole sweep < 30 s.
void criterion_2() {
  const auto t0 = Clock::now();
  const OperatorModel s = OperatorModel::right_shift();
  const CalculusResult calc = apply_function(HoloFunction::polynomial({cx(1.0), cx(1.0)}), s);
  const std::vector<std::size_t> sizes = {50, 500, 2000};
  const FrameBoundEstimates b = estimate_frame_bounds(calc, sizes);
  bool ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double n = static_cast<double>(sizes[i]);
    const double c = std::cos(n * M_PI / (2.0 * n + 1.0));
    const double expected = 4.0 * c * c;
    worst = std::max(worst, std::abs(b.lower[i] - expected));
  }
  ok = ok && worst <= 1e-8 && b.final_lower < 1e-5;
  const double elapsed = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "max deviation from closed form %.3e (tol 1e-8), final lower %.3e (< 1e-5), "
                "%.2f s (limit 30 s)",
                worst, b.final_lower, elapsed);
  report(ok && elapsed < 30.0, 2, "lower bound estimates match the closed-form collapse", detail);
}

// 3. The contrast case z - 2: lower estimate in [0.99, 1.01] and upper in
// [8.9, 9.0] at N = 2000, verdict RieszBasis, cross-validation consistent.
void criterion_3() {
  const OperatorModel s = OperatorModel::right_shift();
  const HoloFunction f = HoloFunction::polynomial({cx(-2.0), cx(1.0)});
  const CalculusResult calc = apply_function(f, s);
  const FrameBoundEstimates b = estimate_frame_bounds(calc, default_sweep_sizes());
  const FrameVerdict v = criterion_verdict(s, f);
  const CrossValidation cv = cross_validate(v, b);
  const bool ok = b.final_lower >= 0.99 && b.final_lower <= 1.01 && b.final_upper >= 8.9 &&
                  b.final_upper <= 9.0 && v.verdict == Verdict::RieszBasis && cv.consistent;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "lower %.6f in [0.99, 1.01], upper %.6f in [8.9, 9.0], verdict %s, "
                "cross-validation %s",
                b.final_lower, b.final_upper, to_string(v.verdict),
                cv.consistent ? "consistent" : "tension");
  report(ok, 3, "shift minus twice the identity is a Riesz basis with the predicted bounds",
         detail);
}

// 4. The adjoint spectrum probe on the shift is consistent with the default
// grid up to N = 2000, and the same section machinery pointed at the shift
// itself (bounded below) stabilizes at exactly 1 within 1e-6 at lambda = 0.
void criterion_4() {
  const OperatorModel s = OperatorModel::right_shift();
  ProbeOptions popts;
  popts.max_size = 2000;
  const ProbeReport pr = probe_ap_equals_spectrum(s, popts);
  const double d_800 = ap_distance(s, cx(0.0), 800);
  const double d_1600 = ap_distance(s, cx(0.0), 1600);
  const bool stabilized = std::abs(d_1600 - d_800) <= 1e-9;
  const bool ok =
      pr.overall == ProbeOutcome::Consistent && std::abs(d_1600 - 1.0) <= 1e-6 && stabilized;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "probe %s over %zu points, forward section distance at zero %.9f "
                "(1.0 +- 1e-6, stabilized)",
                to_string(pr.overall), pr.points.size(), d_1600);
  report(ok, 4, "adjoint spectrum probe is consistent and detects bounded-below directions",
         detail);
}

// 5. On the diagonal operator with entries 1/(n+1), for 25 random polynomials
// of degree <= 5 the section distance vanishes (< 1e-8) at mapped diagonal
// values with index <= 50, and exceeds 1e-3 at 10 points outside the image.
// Whole suite < 60 s.
void criterion_5() {
  const auto t0 = Clock::now();
  const OperatorModel t = OperatorModel::diagonal(SequenceRule::reciprocal_tail({}, 1));
  auto rng = oracles::fixed_rng(505);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::vector<std::size_t> sampled_indices = {0, 5, 17, 31, 50};
  bool ok = true;
  double worst_inside = 0.0;
  double best_outside = 1e300;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t deg = 1 + static_cast<std::size_t>(rng() % 5);
    std::vector<cx> coeffs(deg + 1);
    for (auto& a : coeffs) a = cx(unit(rng), unit(rng));
    if (std::abs(coeffs.back()) < 0.05) coeffs.back() += cx(0.5, 0.0);
    const CalculusResult calc = apply_function(HoloFunction::polynomial(coeffs), t);
    for (std::size_t n : sampled_indices) {
      const cx lambda_n = cx(1.0 / (static_cast<double>(n) + 1.0), 0.0);
      const cx image = detail::poly_eval(calc.coefficients, lambda_n);
      const double d = ap_distance(calc.op, image, 64);
      worst_inside = std::max(worst_inside, d);
      ok = ok && d < 1e-8;
    }
    double scale = 0.0;
    for (const cx& a : coeffs) scale += std::abs(a);
    for (int k = 0; k < 10; ++k) {
      const double angle = 2.0 * M_PI * k / 10.0;
      const cx far = (scale + 1.0) * cx(std::cos(angle), std::sin(angle));
      const double d = ap_distance(calc.op, far, 64);
      best_outside = std::min(best_outside, d);
      ok = ok && d > 1e-3;
    }
  }
  const double elapsed = seconds_since(t0);
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "largest distance at image points %.3e (< 1e-8), smallest distance at outside "
                "points %.3e (> 1e-3), %.2f s (limit 60 s)",
                worst_inside, best_outside, elapsed);
  report(ok && elapsed < 60.0, 5, "diagonal image suite separates image from non-image points",
         detail);
}

// 6. Verdicts agree with a brute-force root oracle on 50 random polynomials
// of degree <= 6 over the shift; cases whose minimal root modulus lies inside
// the reported uncertainty band count as matches, everything else must agree
// exactly. Zero mismatches allowed.
void criterion_6() {
  const OperatorModel s = OperatorModel::right_shift();
  auto rng = oracles::fixed_rng(77);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int mismatches = 0;
  int band_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t deg = 1 + static_cast<std::size_t>(rng() % 6);
    std::vector<cx> coeffs(deg + 1);
    for (auto& a : coeffs) a = cx(unit(rng), unit(rng));
    if (std::abs(coeffs.back()) < 0.05) coeffs.back() += cx(0.5, 0.0);
    try {
      const FrameVerdict v = criterion_verdict(s, HoloFunction::polynomial(coeffs));
      const auto roots = oracles::durand_kerner_roots(coeffs);
      double min_mod = 1e300;
      for (const cx& r : roots) min_mod = std::min(min_mod, std::abs(r));
      const bool in_band = std::abs(min_mod - 1.0) <= v.band + 1e-9;
      if (in_band) {
        ++band_cases;
        continue;  // the oracle itself cannot call the side; counts as a match
      }
      const bool agree = (v.verdict == Verdict::NotFrame && min_mod < 1.0) ||
                         (v.verdict == Verdict::RieszBasis && min_mod > 1.0);
      if (!agree) ++mismatches;
    } catch (const std::exception&) {
      ++mismatches;  // a non-delivery is a mismatch for this criterion
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof detail, "%d mismatches over 50 polynomials (%d band cases)",
                mismatches, band_cases);
  report(mismatches == 0, 6, "verdicts match the independent root oracle", detail);
}

// 7. Kernel property suite: bound monotonicity across all shipped scenarios,
// winding/root interior-count agreement on 200 random polynomials kept clear
// of the unit circle, and exact adjoint entries on structured operators.
// Whole suite < 120 s.
void criterion_7() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  for (const auto& sc : shipped_scenarios()) {
    const Scenario s = parse_scenario(sc.text);
    const CalculusResult calc = apply_function(make_function(s), make_operator(s), s.series_eps);
    const FrameBoundEstimates b = estimate_frame_bounds(calc, s.sizes);
    if (!b.lower_nonincreasing || !b.upper_nondecreasing) {
      ok = false;
      why = "bound monotonicity failed for " + sc.name;
    }
  }

  auto rng = oracles::fixed_rng(7007);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int checked = 0;
  int attempts = 0;
  while (checked < 200 && attempts < 4000) {
    ++attempts;
    const std::size_t deg = 1 + static_cast<std::size_t>(rng() % 8);
    std::vector<cx> coeffs(deg + 1);
    for (auto& a : coeffs) a = cx(unit(rng), unit(rng));
    if (std::abs(coeffs.back()) < 0.05) coeffs.back() += cx(0.5, 0.0);
    const auto roots = oracles::durand_kerner_roots(coeffs);
    bool near_circle = false;
    int inside_oracle = 0;
    for (const cx& r : roots) {
      if (std::abs(std::abs(r) - 1.0) < 0.02) near_circle = true;
      if (std::abs(r) < 1.0) ++inside_oracle;
    }
    if (near_circle) continue;  // deterministic rejection keeps the count exact
    ++checked;
    const auto rep = zero_in_unit_disk(coeffs, 1e-9);
    const bool counts_agree = rep.interior_count == inside_oracle && rep.annulus_count == 0;
    const bool location_agrees =
        (inside_oracle > 0) == (rep.location == Location::Inside);
    if (!counts_agree || !location_agrees) {
      ok = false;
      why = "winding/root disagreement on a random polynomial";
    }
  }
  if (checked < 200) {
    ok = false;
    why = "could not collect 200 circle-free polynomials";
  }

  const std::vector<OperatorModel> structured = {
      OperatorModel::right_shift(),
      OperatorModel::toeplitz({{0, cx(1.0)}, {1, cx(2.0)}, {3, cx(0.0, 0.5)}}),
      OperatorModel::diagonal(SequenceRule::reciprocal_tail({}, 1)),
      OperatorModel::weighted_shift(SequenceRule::geometric_tail({}, cx(0.5), cx(0.5)))};
  for (const OperatorModel& op : structured) {
    const auto m = op.truncate_columns(32);
    const auto madj = op.adjoint().truncate_columns(32);
    for (std::size_t i = 0; i < 20 && ok; ++i) {
      for (std::size_t j = 0; j < 20; ++j) {
        if (madj.at(j, i) != std::conj(m.at(i, j))) {
          ok = false;
          why = "adjoint entry mismatch on " + op.describe();
          break;
        }
      }
    }
  }

  const double elapsed = seconds_since(t0);
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%d circle-free polynomials agreed, shipped sweeps monotone, adjoint entries "
                "exact, %.2f s (limit 120 s)%s%s",
                checked, elapsed, why.empty() ? "" : "; ", why.c_str());
  report(ok && elapsed < 120.0, 7, "kernel property suite", detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
