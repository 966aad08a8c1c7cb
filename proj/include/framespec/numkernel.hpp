#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/hermband.hpp"

namespace framespec::numkernel {

// Rectangular complex matrix. Either dense (row-major) or banded, in which case
// only entries with -upper <= row - col <= lower are stored and everything
// outside the band is exactly zero.
class ComplexMatrix {
 public:
  static ComplexMatrix dense(std::size_t rows, std::size_t cols, std::vector<cx> row_major) {
    validate_dims(rows, cols);
    if (row_major.size() != rows * cols) {
      throw ValidationError("dense entries length does not match rows*cols");
    }
    ComplexMatrix m(rows, cols);
    m.dense_ = std::move(row_major);
    return m;
  }

  static ComplexMatrix banded(std::size_t rows, std::size_t cols, int lower, int upper) {
    validate_dims(rows, cols);
    std::vector<std::string> problems;
    if (lower < 0 || static_cast<std::size_t>(lower) >= rows) {
      problems.push_back("lower bandwidth outside matrix dimensions");
    }
    if (upper < 0 || static_cast<std::size_t>(upper) >= cols) {
      problems.push_back("upper bandwidth outside matrix dimensions");
    }
    if (!problems.empty()) throw ValidationError(problems);
    ComplexMatrix m(rows, cols);
    m.lower_ = lower;
    m.upper_ = upper;
    m.is_banded_ = true;
    m.band_.assign(cols * static_cast<std::size_t>(lower + upper + 1), cx(0.0));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_banded() const { return is_banded_; }
  int lower_bandwidth() const { return lower_; }
  int upper_bandwidth() const { return upper_; }

  cx at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    if (!is_banded_) return dense_[r * cols_ + c];
    const long k = static_cast<long>(r) - static_cast<long>(c);
    if (k < -upper_ || k > lower_) return cx(0.0);
    return band_[band_index(r, c)];
  }

  void set(std::size_t r, std::size_t c, cx v) {
    check_index(r, c);
    if (!is_banded_) {
      dense_[r * cols_ + c] = v;
      return;
    }
    const long k = static_cast<long>(r) - static_cast<long>(c);
    if (k < -upper_ || k > lower_) {
      if (v == cx(0.0)) return;
      throw ValidationError("assignment outside the declared band");
    }
    band_[band_index(r, c)] = v;
  }

  Eigen::MatrixXcd to_eigen() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows_),
                                                static_cast<Eigen::Index>(cols_));
    if (is_banded_) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto [r0, r1] = column_span(c);
        for (std::size_t r = r0; r < r1; ++r) {
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = band_[band_index(r, c)];
        }
      }
    } else {
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = dense_[r * cols_ + c];
        }
      }
    }
    return m;
  }

  // Rows [first, last) that may be nonzero in column c.
  std::pair<std::size_t, std::size_t> column_span(std::size_t c) const {
    if (!is_banded_) return {0, rows_};
    const long lo = std::max<long>(0, static_cast<long>(c) - upper_);
    const long hi = std::min<long>(static_cast<long>(rows_), static_cast<long>(c) + lower_ + 1);
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(std::max<long>(lo, hi))};
  }

 private:
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (!is_banded_) dense_.assign(rows * cols, cx(0.0));
  }

  static void validate_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be at least 1x1");
  }

  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
  }

  std::size_t band_index(std::size_t r, std::size_t c) const {
    const long off = static_cast<long>(r) - static_cast<long>(c) + upper_;
    return c * static_cast<std::size_t>(lower_ + upper_ + 1) + static_cast<std::size_t>(off);
  }

  std::size_t rows_;
  std::size_t cols_;
  bool is_banded_ = false;
  int lower_ = 0;
  int upper_ = 0;
  std::vector<cx> dense_;
  std::vector<cx> band_;  // column-major bands
};

enum class Which { Smallest, Largest };

struct SingularValueResult {
  double value = 0.0;
  double residual = 0.0;  // certificate from the polishing step (banded path only)
};

namespace detail_nk {

// Gram matrix of the narrow side: M^H M when cols <= rows, else M M^H, so its
// eigenvalues are exactly the squared singular values of M.
inline framespec::detail::HermBand gram_small_side(const ComplexMatrix& m) {
  using framespec::detail::HermBand;
  const bool left = m.cols() > m.rows();  // use M M^H
  const std::size_t n = left ? m.rows() : m.cols();
  const int bw = std::min(static_cast<int>(n) - 1, m.lower_bandwidth() + m.upper_bandwidth());
  HermBand g(static_cast<int>(n), bw);
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = 0; k <= g.bw && j + static_cast<std::size_t>(k) < n; ++k) {
      const std::size_t i = j + static_cast<std::size_t>(k);
      cx acc(0.0);
      if (!left) {
        const auto [a0, a1] = m.column_span(i);
        const auto [b0, b1] = m.column_span(j);
        const std::size_t r0 = std::max(a0, b0);
        const std::size_t r1 = std::min(a1, b1);
        for (std::size_t r = r0; r < r1; ++r) acc += std::conj(m.at(r, i)) * m.at(r, j);
      } else {
        // rows i and j of M against each other: entry (i, j) of M M^H
        const long lo = std::max<long>({0, static_cast<long>(i) - m.lower_bandwidth(),
                                        static_cast<long>(j) - m.lower_bandwidth()});
        const long hi = std::min<long>({static_cast<long>(m.cols()) - 1,
                                        static_cast<long>(i) + m.upper_bandwidth(),
                                        static_cast<long>(j) + m.upper_bandwidth()});
        for (long c = lo; c <= hi; ++c) {
          acc += m.at(i, static_cast<std::size_t>(c)) *
                 std::conj(m.at(j, static_cast<std::size_t>(c)));
        }
      }
      g.at(static_cast<int>(i), static_cast<int>(j)) = k == 0 ? cx(acc.real()) : acc;
    }
  }
  return g;
}

}  // namespace detail_nk

// Extremal singular value of m. Banded matrices take the Gram/tridiagonal path
// (exact band arithmetic, Sturm bisection, inverse-iteration polish); dense
// matrices fall back to a full SVD. Accuracy note: the Gram step squares the
// condition number, so the smallest value carries an absolute error on the
// order of eps * sigma_max^2 / sigma; every tolerance in this project sits far
// above that envelope.
inline SingularValueResult extremal_singular_value(const ComplexMatrix& m, Which which,
                                                   const KernelOptions& opts = {}) {
  if (!(opts.tol > 0.0)) throw ValidationError("tolerance must be positive");
  SingularValueResult out;
  if (m.is_banded()) {
    auto g = detail_nk::gram_small_side(m);
    auto t = framespec::detail::band_to_tridiag(std::move(g));
    bool all_diag = true;
    for (double v : t.esq) {
      if (v != 0.0) {
        all_diag = false;
        break;
      }
    }
    if (all_diag) {
      // exact for diagonal Gram matrices
      double lam = t.d[0];
      for (double v : t.d) lam = which == Which::Smallest ? std::min(lam, v) : std::max(lam, v);
      out.value = std::sqrt(std::max(lam, 0.0));
      return out;
    }
    const auto r = framespec::detail::tridiag_extremal_eigenvalue(
        t, which == Which::Smallest ? framespec::detail::Extremal::Smallest
                                    : framespec::detail::Extremal::Largest,
        opts);
    out.value = std::sqrt(std::max(r.lambda, 0.0));
    out.residual = r.residual;
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.to_eigen());
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) throw ValidationError("matrix has no singular values");
  out.value = which == Which::Smallest ? sv(sv.size() - 1) : sv(0);
  return out;
}

// Horner evaluation of p and p' at z; coeffs are a_0..a_k ascending.
inline std::pair<cx, cx> horner(const std::vector<cx>& coeffs, cx z) {
  cx p(0.0), dp(0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[i];
  }
  return {p, dp};
}

namespace detail_nk {

// Parlett-Reinsch balancing restricted to exact powers of two.
inline void balance_in_place(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  const double gamma = 0.9;
  bool scaling_active = true;
  int rounds = 0;
  while (scaling_active && rounds++ < 100) {
    scaling_active = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row_norm = 0.0, col_norm = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        row_norm += std::abs(a(i, j));
        col_norm += std::abs(a(j, i));
      }
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double scaled_col = std::ldexp(col_norm, 2 * exponent);
        if (scaled_col < gamma * (row_norm + col_norm)) {
          scaling_active = true;
          const double t = std::ldexp(1.0, exponent);
          a.col(i) *= t;
          a.row(i) /= t;
        }
      }
    }
  }
}

}  // namespace detail_nk

// Roots of a_0 + a_1 z + ... + a_k z^k, with multiplicity, sorted by real part
// then imaginary part. Balanced companion-matrix eigenvalues followed by one
// guarded Newton step per root.
inline std::vector<cx> polynomial_roots(const std::vector<cx>& coeffs,
                                        const KernelOptions& opts = {}) {
  if (coeffs.empty()) throw ValidationError("empty coefficient list");
  for (const cx& a : coeffs) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("coefficients must be finite");
    }
  }
  if (coeffs.size() == 1) throw ValidationError("constant polynomial has no roots");
  const cx lead = coeffs.back();
  if (std::abs(lead) <= opts.leading_underflow) {
    throw ValidationError("leading coefficient underflow");
  }
  const std::size_t deg = coeffs.size() - 1;
  std::vector<cx> roots;
  roots.reserve(deg);
  if (deg == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
  } else {
    Eigen::MatrixXcd companion =
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
    for (std::size_t i = 0; i + 1 < deg; ++i) {
      companion(static_cast<Eigen::Index>(i) + 1, static_cast<Eigen::Index>(i)) = 1.0;
    }
    for (std::size_t i = 0; i < deg; ++i) {
      companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg) - 1) =
          -coeffs[i] / lead;
    }
    detail_nk::balance_in_place(companion);
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(companion, /*computeU=*/false);
    if (schur.info() != Eigen::Success) {
      throw ConvergenceError("companion eigenvalue iteration failed", 0.0, 0.0);
    }
    for (std::size_t i = 0; i < deg; ++i) {
      roots.push_back(schur.matrixT()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
    }
    // one Newton polish per root, kept only when it helps
    for (cx& z : roots) {
      const auto [p, dp] = horner(coeffs, z);
      if (std::abs(dp) > 0.0) {
        const cx z1 = z - p / dp;
        if (std::isfinite(z1.real()) && std::isfinite(z1.imag())) {
          const auto [p1, dp1] = horner(coeffs, z1);
          (void)dp1;
          if (std::abs(p1) < std::abs(p)) z = z1;
        }
      }
    }
  }
  // residual certificate, scaled by coefficient magnitudes at the root
  for (const cx& z : roots) {
    const auto [p, dp] = horner(coeffs, z);
    (void)dp;
    double scale = 0.0;
    double zp = 1.0;
    const double az = std::abs(z);
    for (const cx& a : coeffs) {
      scale += std::abs(a) * zp;
      zp *= az;
    }
    scale = std::max(scale, std::numeric_limits<double>::min());
    if (std::abs(p) > opts.root_residual_factor * scale) {
      throw ConvergenceError("root residual exceeds the configured bound", std::abs(p),
                             std::abs(p) / scale);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const cx& a, const cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace framespec::numkernel
