#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include <framespec/operators.hpp>

#include "support/oracles.hpp"

using framespec::cx;
using framespec::OperatorModel;
using framespec::RegionKind;
using framespec::SequenceRule;
using framespec::ValidationError;
using Catch::Matchers::WithinAbs;

namespace {

cx inner(const std::vector<cx>& a, const std::vector<cx>& b) {
  cx s(0.0);
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm2(const std::vector<cx>& a) {
  double s = 0.0;
  for (const cx& v : a) s += std::norm(v);
  return std::sqrt(s);
}

std::vector<cx> sub(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(std::max(a.size(), b.size()), cx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace

TEST_CASE("shift actions and truncations") {
  auto s = OperatorModel::right_shift();
  auto y = s.apply({cx(1.0), cx(2.0)});
  REQUIRE(y.size() == 3);
  CHECK(y[0] == cx(0.0));
  CHECK(y[1] == cx(1.0));
  CHECK(y[2] == cx(2.0));

  auto m = s.truncate_columns(4);
  CHECK(m.rows() == 5);
  CHECK(m.cols() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(m.at(j + 1, j) == cx(1.0));
    CHECK(m.at(j, j) == cx(0.0));
  }

  auto st = s.adjoint();
  CHECK(st.describe() == "left shift");
  auto mt = st.truncate_columns(4);
  CHECK(mt.rows() == 4);
  CHECK(mt.cols() == 4);
  for (std::size_t j = 1; j < 4; ++j) CHECK(mt.at(j - 1, j) == cx(1.0));
  CHECK(st.apply({cx(1.0), cx(2.0), cx(3.0)}) == std::vector<cx>{cx(2.0), cx(3.0), cx(0.0)});
}

TEST_CASE("adjoint identity holds exactly on dyadic data") {
  const std::vector<OperatorModel> ops = {
      OperatorModel::toeplitz({{0, cx(0.5, -0.25)}, {2, cx(-0.25)}}),
      OperatorModel::toeplitz({{-1, cx(0.5)}, {-3, cx(0.75, 0.5)}}),
      OperatorModel::diagonal(
          SequenceRule::constant_tail({cx(0.5), cx(-0.75, 0.25)}, cx(0.25))),
      OperatorModel::weighted_shift(SequenceRule::geometric_tail({cx(1.5)}, cx(0.5), cx(0.5))),
      OperatorModel::backward_weighted_shift(
          SequenceRule::constant_tail({cx(0.25, 0.5)}, cx(-0.5))),
      OperatorModel::polynomial_of({cx(0.25), cx(-0.5), cx(1.0)}, OperatorModel::right_shift()),
      OperatorModel::polynomial_of(
          {cx(0.5), cx(0.0), cx(-0.25)},
          OperatorModel::weighted_shift(SequenceRule::constant_tail({cx(0.5)}, cx(-0.25)))),
  };
  const std::vector<cx> x = {cx(1.0), cx(-0.5, 0.25), cx(0.0), cx(0.75)};
  const std::vector<cx> yv = {cx(0.5), cx(0.25, -0.25), cx(-1.0), cx(0.5), cx(0.125), cx(2.0)};
  for (const auto& op : ops) {
    const cx lhs = inner(op.apply(x), yv);
    const cx rhs = inner(x, op.adjoint().apply(yv));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the right shift is an isometry but not normal") {
  auto s = OperatorModel::right_shift();
  auto rng = oracles::fixed_rng(0x15a7e11eULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cx> x(64);
  for (auto& v : x) v = cx(u(rng), u(rng));
  CHECK_THAT(norm2(s.apply(x)), WithinAbs(norm2(x), 1e-12));

  // commutator applied to the first basis vector has norm one
  auto st = s.adjoint();
  const std::vector<cx> e0 = {cx(1.0)};
  const auto c = sub(s.apply(st.apply(e0)), st.apply(s.apply(e0)));
  CHECK_THAT(norm2(c), WithinAbs(1.0, 0.0));
}

TEST_CASE("two-sided Toeplitz input is rejected") {
  CHECK_THROWS_AS(OperatorModel::toeplitz({{-1, cx(1.0)}, {1, cx(1.0)}}), ValidationError);
  // zero entries on one side do not count
  CHECK_NOTHROW(OperatorModel::toeplitz({{-1, cx(0.0)}, {1, cx(1.0)}}));
}

TEST_CASE("truncations nest") {
  const std::vector<OperatorModel> ops = {
      OperatorModel::polynomial_of({cx(1.0), cx(1.0), cx(1.0)}, OperatorModel::right_shift()),
      OperatorModel::weighted_shift(SequenceRule::reciprocal_tail({}, 1)),
      OperatorModel::toeplitz({{-2, cx(0.5)}, {0, cx(1.0)}}),
  };
  for (const auto& op : ops) {
    auto big = op.truncate_columns(7);
    auto small = op.truncate_columns(5);
    for (std::size_t j = 0; j < small.cols(); ++j) {
      for (std::size_t r = 0; r < small.rows(); ++r) {
        CHECK(small.at(r, j) == big.at(r, j));
      }
    }
  }
}

TEST_CASE("polynomial wrapper acts like the explicit Toeplitz form") {
  const std::vector<cx> coeffs = {cx(1.0, 0.5), cx(-2.0), cx(0.0), cx(0.5)};
  auto wrapped = OperatorModel::polynomial_of(coeffs, OperatorModel::right_shift());
  auto direct = OperatorModel::toeplitz(
      {{0, coeffs[0]}, {1, coeffs[1]}, {2, coeffs[2]}, {3, coeffs[3]}});
  auto rng = oracles::fixed_rng(0xfeedULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cx> x(20);
  for (auto& v : x) v = cx(u(rng), u(rng));
  const auto a = wrapped.apply(x);
  const auto b = direct.apply(x);
  REQUIRE(a.size() >= b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const cx want = i < b.size() ? b[i] : cx(0.0);
    CHECK_THAT(std::abs(a[i] - want), WithinAbs(0.0, 1e-13));
  }
  CHECK(wrapped.lower_bandwidth() == 3);
  CHECK(wrapped.upper_bandwidth() == 0);
}

TEST_CASE("polynomial of a weighted shift runs the lazy wrapper") {
  auto w = OperatorModel::weighted_shift(SequenceRule::reciprocal_tail({}, 1));
  // 1 + 2 W + W^2, applied by hand
  auto p = OperatorModel::polynomial_of({cx(1.0), cx(2.0), cx(1.0)}, w);
  const std::vector<cx> x = {cx(1.0), cx(0.0), cx(-2.0)};
  const auto wx = w.apply(x);
  const auto wwx = w.apply(wx);
  std::vector<cx> want(wwx.size(), cx(0.0));
  for (std::size_t i = 0; i < x.size(); ++i) want[i] += x[i];
  for (std::size_t i = 0; i < wx.size(); ++i) want[i] += 2.0 * wx[i];
  for (std::size_t i = 0; i < wwx.size(); ++i) want[i] += wwx[i];
  const auto got = p.apply(x);
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
  CHECK(p.lower_bandwidth() == 2);

  // nesting collapses to one wrapper with composed coefficients
  auto nested = OperatorModel::polynomial_of({cx(0.0), cx(1.0), cx(1.0)},
                                             OperatorModel::polynomial_of({cx(1.0), cx(1.0)}, w));
  // q(z) = z + z^2 over 1 + W: q(1 + W) = (1 + W) + (1 + W)^2 = 2 + 3W + W^2
  const auto ny = nested.apply({cx(1.0)});
  REQUIRE(ny.size() >= 3);
  CHECK_THAT(std::abs(ny[0] - cx(2.0)), WithinAbs(0.0, 1e-15));
  CHECK_THAT(std::abs(ny[1] - cx(3.0)), WithinAbs(0.0, 1e-15));
  CHECK_THAT(std::abs(ny[2] - cx(0.5)), WithinAbs(0.0, 1e-15));  // W^2 e_0 = (1)(1/2) e_2
}

TEST_CASE("spectra come out in closed form") {
  auto s = OperatorModel::right_shift();
  auto disk = s.spectrum();
  REQUIRE(disk.kind() == RegionKind::ClosedDisk);
  CHECK(disk.center() == cx(0.0));
  CHECK(disk.radius() == 1.0);
  CHECK(s.adjoint().spectrum().kind() == RegionKind::ClosedDisk);

  auto shifted = OperatorModel::polynomial_of({cx(-2.0), cx(1.0)}, s).spectrum();
  REQUIRE(shifted.kind() == RegionKind::ClosedDisk);
  CHECK(shifted.center() == cx(-2.0));

  auto cubic = OperatorModel::polynomial_of({cx(1.0), cx(1.0), cx(1.0), cx(1.0)}, s).spectrum();
  CHECK(cubic.kind() == RegionKind::PolynomialImageOfUnitDisk);

  auto diag = OperatorModel::diagonal(SequenceRule::reciprocal_tail({}, 1));
  CHECK(diag.spectrum().kind() == RegionKind::SequenceClosure);

  auto compact = OperatorModel::weighted_shift(SequenceRule::geometric_tail({}, cx(1.0), cx(0.5)));
  auto compact_spec = compact.spectrum();
  REQUIRE(compact_spec.kind() == RegionKind::FinitePointSet);
  CHECK(compact_spec.points().front() == cx(0.0));

  auto fat = OperatorModel::weighted_shift(SequenceRule::constant_tail({cx(0.0)}, cx(-2.0)));
  auto fat_spec = fat.spectrum();
  REQUIRE(fat_spec.kind() == RegionKind::ClosedDisk);
  CHECK(fat_spec.radius() == 2.0);

  auto band = OperatorModel::toeplitz({{0, cx(3.0)}, {1, cx(-2.0)}}).spectrum();
  REQUIRE(band.kind() == RegionKind::ClosedDisk);
  CHECK(band.center() == cx(3.0));
  CHECK(band.radius() == 2.0);
}

TEST_CASE("the certified adjoint property follows construction, not action") {
  auto s = OperatorModel::right_shift();
  CHECK(s.adjoint_ap_fills_spectrum());
  CHECK_FALSE(OperatorModel::left_shift().adjoint_ap_fills_spectrum());
  CHECK(OperatorModel::left_shift().adjoint().adjoint_ap_fills_spectrum());
  // same action as the right shift, but built as a generic band: no certificate
  CHECK_FALSE(OperatorModel::toeplitz({{1, cx(1.0)}}).adjoint_ap_fills_spectrum());

  CHECK(OperatorModel::diagonal(SequenceRule::reciprocal_tail({}, 1)).adjoint_ap_fills_spectrum());
  CHECK(OperatorModel::diagonal(SequenceRule::reciprocal_tail({}, 1))
            .adjoint()
            .adjoint_ap_fills_spectrum());

  auto compact = OperatorModel::weighted_shift(SequenceRule::geometric_tail({}, cx(1.0), cx(0.5)));
  CHECK(compact.adjoint_ap_fills_spectrum());
  auto fat = OperatorModel::weighted_shift(SequenceRule::constant_tail({}, cx(2.0)));
  CHECK_FALSE(fat.adjoint_ap_fills_spectrum());

  CHECK(OperatorModel::polynomial_of({cx(1.0), cx(1.0)}, s).adjoint_ap_fills_spectrum());
  CHECK_FALSE(OperatorModel::polynomial_of({cx(1.0), cx(1.0)}, s)
                  .adjoint()
                  .adjoint_ap_fills_spectrum());
}

TEST_CASE("norm bounds dominate the truncated column norms") {
  const std::vector<OperatorModel> ops = {
      OperatorModel::right_shift(),
      OperatorModel::toeplitz({{0, cx(1.0)}, {1, cx(1.0)}}),
      OperatorModel::weighted_shift(SequenceRule::constant_tail({cx(3.0)}, cx(0.5))),
      OperatorModel::polynomial_of({cx(1.0), cx(1.0), cx(1.0)}, OperatorModel::right_shift()),
  };
  for (const auto& op : ops) {
    const double bound = op.norm_bound();
    const double top = oracles::dense_singular_value(op.truncate_columns(30), false);
    CHECK(top <= bound + 1e-10);
  }
}
