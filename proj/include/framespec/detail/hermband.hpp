#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "../core.hpp"

namespace framespec::detail {

// Hermitian matrix held by its lower diagonals: diag[k][i] = A(i+k, i).
// Allocated one diagonal wider than the declared bandwidth so the reduction
// below has a slot for the transient bulge.
struct HermBand {
  int n = 0;
  int bw = 0;
  std::vector<std::vector<cx>> diag;

  HermBand(int n_, int bw_) : n(n_), bw(std::min(bw_, n_ - 1)) {
    const int alloc = std::min(n - 1, bw + 1);
    diag.resize(static_cast<std::size_t>(alloc) + 1);
    for (int k = 0; k <= alloc; ++k) diag[k].assign(static_cast<std::size_t>(n - k), cx(0.0));
  }

  cx& at(int r, int c) { return diag[static_cast<std::size_t>(r - c)][static_cast<std::size_t>(c)]; }
  cx get(int r, int c) const {
    const int k = r - c;
    if (k < 0 || k >= static_cast<int>(diag.size())) return cx(0.0);
    return diag[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
  }
};

struct SymTridiag {
  std::vector<double> d;    // diagonal
  std::vector<double> esq;  // squared moduli of the subdiagonal
};

// One step of the two-sided unitary similarity A <- Q^H A Q where Q differs
// from the identity only in the plane (p, q), q = p + 1:
//   Q([p q],[p q]) = [[cth, s], [-conj(s), cth]],  cth real.
// ext bounds how far below the main diagonal entries may currently live.
inline void apply_plane_rotation(HermBand& A, int p, int q, double cth, cx s, int ext) {
  // rows p, q against columns left of p
  for (int jc = std::max(0, q - ext); jc < p; ++jc) {
    const cx xp = A.at(p, jc);
    const cx xq = A.at(q, jc);
    A.at(p, jc) = cth * xp - s * xq;
    A.at(q, jc) = std::conj(s) * xp + cth * xq;
  }
  // the 2x2 diagonal block
  {
    const double app = A.at(p, p).real();
    const double aqq = A.at(q, q).real();
    const cx aqp = A.at(q, p);
    const cx t_pp = cth * app - std::conj(s) * std::conj(aqp);
    const cx t_qp = cth * aqp - std::conj(s) * aqq;
    const cx t_pq = s * app + cth * std::conj(aqp);
    const cx t_qq = s * aqp + cth * aqq;
    A.at(p, p) = cx((cth * t_pp - s * t_qp).real());
    A.at(q, p) = std::conj(s) * t_pp + cth * t_qp;
    A.at(q, q) = cx((std::conj(s) * t_pq + cth * t_qq).real());
  }
  // columns p, q against rows below q
  const int last = std::min(A.n - 1, p + ext);
  for (int rr = q + 1; rr <= last; ++rr) {
    const cx xp = A.at(rr, p);
    const cx xq = A.at(rr, q);
    A.at(rr, p) = cth * xp - std::conj(s) * xq;
    A.at(rr, q) = s * xp + cth * xq;
  }
}

// Rotation parameters that zero y against x: conj(s)*x + cth*y = 0.
inline void make_rotation(cx x, cx y, double& cth, cx& s) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) {
    cth = 1.0;
    s = cx(0.0);
    return;
  }
  if (ax == 0.0) {
    cth = 0.0;
    s = cx(1.0);
    return;
  }
  const double r0 = std::hypot(ax, ay);
  cth = ax / r0;
  s = -(x / ax) * std::conj(y) / r0;
}

// Givens bulge-chasing reduction of a Hermitian band matrix to real symmetric
// tridiagonal form (eigenvalues preserved; the subdiagonal enters only through
// its modulus). Peels one outer diagonal at a time, left to right, chasing each
// bulge off the bottom of the matrix.
inline SymTridiag band_to_tridiag(HermBand A) {
  const int n = A.n;
  for (int b = A.bw; b >= 2; --b) {
    const int ext = b + 1;
    for (int j = 0; j + b <= n - 1; ++j) {
      int r = j + b;
      int c = j;
      while (true) {
        const int p = r - 1;
        const int q = r;
        const cx y = A.at(q, c);
        if (std::abs(y) == 0.0) break;
        double cth;
        cx s;
        make_rotation(A.at(p, c), y, cth, s);
        apply_plane_rotation(A, p, q, cth, s, ext);
        A.at(q, c) = cx(0.0);  // annihilated by construction; clear roundoff
        if (q + b > n - 1) break;
        c = p;
        r = q + b;
      }
    }
  }
  SymTridiag T;
  T.d.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) T.d[static_cast<std::size_t>(i)] = A.at(i, i).real();
  if (n > 1) {
    T.esq.resize(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
      if (A.bw >= 1) {
        T.esq[static_cast<std::size_t>(i)] = std::norm(A.at(i + 1, i));
      } else {
        T.esq[static_cast<std::size_t>(i)] = 0.0;
      }
    }
  }
  return T;
}

// Number of eigenvalues of T strictly below x, by the classic clamped-pivot
// Sturm recurrence (robust without pivoting for symmetric tridiagonals).
inline int sturm_count_below(const SymTridiag& T, double x, double pivmin) {
  const std::size_t n = T.d.size();
  double q = T.d[0] - x;
  int cnt = 0;
  for (std::size_t i = 1; i < n; ++i) {
    // clamp first, then read the sign, so the count matches the pivot the
    // recurrence actually divides by
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++cnt;
    q = (T.d[i] - x) - T.esq[i - 1] / q;
  }
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++cnt;
  return cnt;
}

enum class Extremal { Smallest, Largest };

struct TridiagEigenResult {
  double lambda = 0.0;
  double residual = 0.0;  // ||T v - lambda v|| / ||v|| from the polishing step
};

// Deterministic start vector for inverse iteration.
inline std::vector<double> iteration_start(std::size_t n) {
  std::vector<double> v(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    v[i] = static_cast<double>(static_cast<std::int64_t>(state >> 11)) / 9.007199254740992e15 - 0.5;
    if (v[i] == 0.0) v[i] = 0.5;
  }
  return v;
}

// Solve (T - mu) z = rhs for tridiagonal T via LU with partial pivoting,
// clamping exactly singular pivots.
inline void shifted_tridiag_solve(const SymTridiag& T, double mu, std::vector<double>& z,
                                  const std::vector<double>& rhs, double pivmin) {
  const std::size_t n = T.d.size();
  std::vector<double> e(n > 1 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::sqrt(T.esq[i]);
  // rows: lower = e[i-1], diag = d[i]-mu, upper = e[i]
  std::vector<double> du(n, 0.0), dm(n, 0.0), du2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) dm[i] = T.d[i] - mu;
  for (std::size_t i = 0; i + 1 < n; ++i) du[i] = e[i];
  z = rhs;
  std::vector<double> dl = du;  // symmetric
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(dm[i]) >= std::abs(dl[i])) {
      if (std::abs(dm[i]) < pivmin) dm[i] = dm[i] < 0.0 ? -pivmin : pivmin;
      const double m = dl[i] / dm[i];
      dm[i + 1] -= m * du[i];
      z[i + 1] -= m * z[i];
      du2[i] = 0.0;
    } else {
      // swap rows i, i+1
      const double m = dm[i] / dl[i];
      std::swap(dm[i], dl[i]);  // dm[i] now the pivot (old subdiagonal)
      const double old_upper = du[i];
      du[i] = dm[i + 1];
      du2[i] = i + 2 < n ? du[i + 1] : 0.0;
      dm[i + 1] = old_upper - m * du[i];
      if (i + 2 < n) {
        du[i + 1] = -m * du2[i];
      }
      std::swap(z[i], z[i + 1]);
      z[i + 1] -= m * z[i];
    }
  }
  if (std::abs(dm[n - 1]) < pivmin) dm[n - 1] = dm[n - 1] < 0.0 ? -pivmin : pivmin;
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = z[ii];
    if (ii + 1 < n) acc -= du[ii] * z[ii + 1];
    if (ii + 2 < n) acc -= du2[ii] * z[ii + 2];
    z[ii] = acc / dm[ii];
  }
}

// Extremal eigenvalue of a real symmetric tridiagonal matrix: Sturm bisection
// to a machine-width bracket, then a short shifted inverse iteration whose
// Rayleigh quotient polishes the value and certifies a residual.
inline TridiagEigenResult tridiag_extremal_eigenvalue(const SymTridiag& T, Extremal which,
                                                      const KernelOptions& opts) {
  const std::size_t n = T.d.size();
  TridiagEigenResult out;
  double max_esq = 0.0;
  for (double v : T.esq) max_esq = std::max(max_esq, v);
  const double pivmin =
      std::max(1.0, max_esq) * (std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon());

  if (n == 1) {
    out.lambda = T.d[0];
    return out;
  }
  // Gershgorin interval
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::sqrt(T.esq[i - 1]);
    if (i + 1 < n) r += std::sqrt(T.esq[i]);
    lo = std::min(lo, T.d[i] - r);
    hi = std::max(hi, T.d[i] + r);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * scale;
  lo -= pad;
  hi += pad;

  const int need = which == Extremal::Smallest ? 1 : static_cast<int>(n);
  const double width_target = 4.0 * std::numeric_limits<double>::epsilon() * scale;
  int iters = 0;
  while (hi - lo > width_target) {
    if (++iters > opts.max_iter) {
      throw ConvergenceError("tridiagonal bisection did not reach target width", 0.5 * (lo + hi),
                             hi - lo);
    }
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(T, mid, pivmin) >= need) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double bracket = hi - lo;
  double lambda = 0.5 * (lo + hi);

  // polish
  std::vector<double> v = iteration_start(n);
  std::vector<double> z;
  for (int it = 0; it < 3; ++it) {
    shifted_tridiag_solve(T, lambda, z, v, pivmin);
    // the clamped pivots can make z enormous; rescale by the largest entry
    // before forming the norm so it cannot overflow
    double amax = 0.0;
    for (double x : z) amax = std::max(amax, std::abs(x));
    if (!(amax > 0.0) || !std::isfinite(amax)) break;
    for (double& x : z) x /= amax;
    double nz = 0.0;
    for (double x : z) nz += x * x;
    nz = std::sqrt(nz);
    if (!(nz > 0.0)) break;
    for (double& x : z) x /= nz;
    v = z;
  }
  // Rayleigh quotient and residual of v
  std::vector<double> e(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::sqrt(T.esq[i]);
  double vv = 0.0, vtv = 0.0, res = 0.0;
  std::vector<double> tv(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = T.d[i] * v[i];
    if (i > 0) acc += e[i - 1] * v[i - 1];
    if (i + 1 < n) acc += e[i] * v[i + 1];
    tv[i] = acc;
    vv += v[i] * v[i];
    vtv += v[i] * acc;
  }
  if (vv > 0.0) {
    const double rho = vtv / vv;
    for (std::size_t i = 0; i < n; ++i) {
      const double ri = tv[i] - rho * v[i];
      res += ri * ri;
    }
    res = std::sqrt(res / vv);
    // the bisection bracket is already certified, so the Rayleigh quotient may
    // only refine within a machine-width neighbourhood of it
    const double eps_scale = std::numeric_limits<double>::epsilon() * scale;
    if (std::abs(rho - lambda) <= 4.0 * (bracket + eps_scale)) {
      lambda = rho;
      out.residual = res;
    } else {
      out.residual = bracket;
    }
  } else {
    out.residual = bracket;
  }
  out.lambda = lambda;
  return out;
}

}  // namespace framespec::detail
