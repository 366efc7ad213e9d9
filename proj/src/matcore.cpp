#include "crx/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crx {

namespace {

// Jacobi rotation parameters (c real, t = tan(theta)) diagonalizing the
// Hermitian 2x2 [[app, b],[conj(b), aqq]] with b = beta * e^{i phi}.
struct JacobiRot {
  double c;
  double s;
  cx phase;  // e^{i phi}
};

JacobiRot jacobi_rot(double app, double aqq, cx b) {
  const double beta = std::abs(b);
  JacobiRot r{1.0, 0.0, cx(1.0, 0.0)};
  if (beta == 0.0) return r;
  r.phase = b / beta;
  const double tau = (aqq - app) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  r.c = 1.0 / std::sqrt(1.0 + t * t);
  r.s = t * r.c;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// one-sided Jacobi SVD
// ---------------------------------------------------------------------------

std::vector<double> singular_values(const CMatrix& a) {
  require_finite(a, "singular_values");
  const int n = a.n();
  if (n == 0) return {};

  // columns of g are rotated until pairwise orthogonal
  CMatrix g = a;
  const double scale = g.max_abs();
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const double tol = 1e-14;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0;
        cx apq = 0.0;
        for (int i = 0; i < n; ++i) {
          app += std::norm(g(i, p));
          aqq += std::norm(g(i, q));
          apq += std::conj(g(i, p)) * g(i, q);
        }
        if (std::abs(apq) <= tol * std::sqrt(app * aqq)) continue;
        rotated = true;
        const JacobiRot r = jacobi_rot(app, aqq, apq);
        // [u, v] <- [u, v] * [[c, s*phase],[-s*conj(phase), c]]
        for (int i = 0; i < n; ++i) {
          const cx u = g(i, p), v = g(i, q);
          g(i, p) = r.c * u - r.s * std::conj(r.phase) * v;
          g(i, q) = r.s * r.phase * u + r.c * v;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(g(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double op_norm(const CMatrix& a) {
  if (a.n() == 0) return 0.0;
  return singular_values(a).front();
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic Jacobi)
// ---------------------------------------------------------------------------

HermitianEigs hermitian_eigs(const CMatrix& h) {
  require_finite(h, "hermitian_eigs");
  const int n = h.n();
  const double hnorm = h.frobenius();
  {
    const CMatrix d = h - h.adjoint();
    if (d.frobenius() > 1e-12 * std::max(hnorm, 1e-300) && d.frobenius() > 0.0)
      fail(ErrorKind::input, "hermitian_eigs: input is not Hermitian");
  }

  CMatrix a = h;
  CMatrix v = CMatrix::identity(n);
  if (n > 0 && hnorm > 0.0) {
    const double tol = 1e-13 * hnorm;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      double off = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
      if (std::sqrt(off) <= tol) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          if (std::abs(a(p, q)) == 0.0) continue;
          const JacobiRot r =
              jacobi_rot(a(p, p).real(), a(q, q).real(), a(p, q));
          const cx sp = r.s * r.phase;           // J_pq = s*phase
          const cx spc = r.s * std::conj(r.phase);
          // columns: A <- A J
          for (int i = 0; i < n; ++i) {
            const cx u = a(i, p), w = a(i, q);
            a(i, p) = r.c * u - spc * w;
            a(i, q) = sp * u + r.c * w;
          }
          // rows: A <- J* A
          for (int j = 0; j < n; ++j) {
            const cx u = a(p, j), w = a(q, j);
            a(p, j) = r.c * u - r.s * r.phase * w;
            a(q, j) = r.s * std::conj(r.phase) * u + r.c * w;
          }
          for (int i = 0; i < n; ++i) {
            const cx u = v(i, p), w = v(i, q);
            v(i, p) = r.c * u - spc * w;
            v(i, q) = sp * u + r.c * w;
          }
        }
      }
    }
  }

  HermitianEigs out;
  out.values.resize(n);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return d[i] > d[j]; });
  out.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[idx[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// complex Schur form: Hessenberg reduction + single-shift QR + reordering
// ---------------------------------------------------------------------------

namespace {

// Givens pair with c real: G = [[c, s],[-conj(s), c]], G*.[x;y] has zero
// second component... we use G acting on the left to annihilate y in [x;y].
struct Givens {
  double c;
  cx s;
};

Givens make_givens(cx x, cx y) {
  Givens g{1.0, cx(0.0)};
  const double ax = std::abs(x), ay = std::abs(y);
  if (ay == 0.0) return g;
  const double r = std::hypot(ax, ay);
  if (ax == 0.0) {
    g.c = 0.0;
    g.s = std::conj(y) / ay;
    return g;
  }
  g.c = ax / r;
  g.s = (x / ax) * std::conj(y) / r;
  return g;
}

// rows i and i+1 of h, columns [j0, j1)
void apply_givens_left(CMatrix& h, int i, const Givens& g, int j0, int j1) {
  for (int j = j0; j < j1; ++j) {
    const cx a = h(i, j), b = h(i + 1, j);
    h(i, j) = g.c * a + g.s * b;
    h(i + 1, j) = -std::conj(g.s) * a + g.c * b;
  }
}

// columns i and i+1 of h, rows [i0, i1): multiply by G* on the right
void apply_givens_right(CMatrix& h, int i, const Givens& g, int i0, int i1) {
  for (int r = i0; r < i1; ++r) {
    const cx a = h(r, i), b = h(r, i + 1);
    h(r, i) = g.c * a + std::conj(g.s) * b;
    h(r, i + 1) = -g.s * a + g.c * b;
  }
}

void hessenberg_reduce(CMatrix& a, CMatrix& q) {
  const int n = a.n();
  for (int k = 0; k + 2 < n; ++k) {
    // Householder on a(k+1.., k)
    double xnorm = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cx x0 = a(k + 1, k);
    const cx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cx(1.0);
    const cx alpha = -phase * xnorm;
    std::vector<cx> v(n, 0.0);
    for (int i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm = 0.0;
    for (int i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (int i = k + 1; i < n; ++i) v[i] /= vnorm;

    // A <- H A with H = I - 2 v v*
    for (int j = 0; j < n; ++j) {
      cx s = 0.0;
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= 2.0;
      for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
    }
    // A <- A H
    for (int i = 0; i < n; ++i) {
      cx s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= 2.0;
      for (int j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    // Q <- Q H
    for (int i = 0; i < n; ++i) {
      cx s = 0.0;
      for (int j = k + 1; j < n; ++j) s += q(i, j) * v[j];
      s *= 2.0;
      for (int j = k + 1; j < n; ++j) q(i, j) -= s * std::conj(v[j]);
    }
  }
}

// eigenvalue of [[a,b],[c,d]] closest to d (Wilkinson shift)
cx wilkinson_shift(cx a, cx b, cx c, cx d) {
  const cx tr = a + d;
  const cx det = a * d - b * c;
  cx disc = std::sqrt(tr * tr - 4.0 * det);
  cx l1 = 0.5 * (tr + disc);
  cx l2 = 0.5 * (tr - disc);
  return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

// Swap the diagonal entries of the 2x2 triangular block at (i, i) of t by a
// unitary similarity, updating q. Entries t(i,i+1) stay bounded.
void swap_adjacent(CMatrix& t, CMatrix& q, int i) {
  const int n = t.n();
  const cx a = t(i, i);
  const cx b = t(i, i + 1);
  const cx c = t(i + 1, i + 1);
  // eigenvector of [[a,b],[0,c]] for eigenvalue c
  cx v0 = -b, v1 = a - c;
  const double vn = std::hypot(std::abs(v0), std::abs(v1));
  if (vn == 0.0) return;  // equal eigenvalues, nothing to order
  v0 /= vn;
  v1 /= vn;
  // unitary with first column (v0, v1)
  const cx u00 = v0, u10 = v1;
  const cx u01 = -std::conj(v1), u11 = std::conj(v0);
  // T <- U* T U on rows/cols i, i+1
  for (int j = 0; j < n; ++j) {  // rows: U* from the left
    const cx r0 = t(i, j), r1 = t(i + 1, j);
    t(i, j) = std::conj(u00) * r0 + std::conj(u10) * r1;
    t(i + 1, j) = std::conj(u01) * r0 + std::conj(u11) * r1;
  }
  for (int r = 0; r < n; ++r) {  // cols: U from the right
    const cx c0 = t(r, i), c1 = t(r, i + 1);
    t(r, i) = c0 * u00 + c1 * u10;
    t(r, i + 1) = c0 * u01 + c1 * u11;
  }
  for (int r = 0; r < n; ++r) {  // Q <- Q U
    const cx c0 = q(r, i), c1 = q(r, i + 1);
    q(r, i) = c0 * u00 + c1 * u10;
    q(r, i + 1) = c0 * u01 + c1 * u11;
  }
  t(i + 1, i) = 0.0;
}

}  // namespace

SchurForm complex_schur(const CMatrix& a, const OrderKey& order_key) {
  require_finite(a, "complex_schur");
  const int n = a.n();
  SchurForm out;
  out.q = CMatrix::identity(n);
  out.t = a;
  out.ordering.resize(n);
  std::iota(out.ordering.begin(), out.ordering.end(), 0);
  if (n <= 1) return out;

  CMatrix& t = out.t;
  CMatrix& q = out.q;
  hessenberg_reduce(t, q);

  const double anorm = std::max(t.frobenius(), 1e-300);
  const double defl = 1e-13;
  int hi = n - 1;
  long budget = 100L * n * n;
  int stall = 0;
  while (hi > 0) {
    if (budget-- <= 0) {
      double resid = 0.0;
      for (int i = 1; i < n; ++i) resid = std::max(resid, std::abs(t(i, i - 1)));
      fail(ErrorKind::numeric,
           "complex_schur: QR iteration budget exhausted, max subdiagonal " +
               std::to_string(resid));
    }
    // deflate
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(t(lo, lo - 1));
      const double diag = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
      if (sub <= defl * std::max(diag, 1e-30 * anorm) || sub <= 1e-300) {
        t(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      stall = 0;
      continue;
    }

    cx mu = wilkinson_shift(t(hi - 1, hi - 1), t(hi - 1, hi), t(hi, hi - 1),
                            t(hi, hi));
    if (++stall % 12 == 0) {
      // exceptional shift to break rare cycling
      mu = t(hi, hi) + cx(0.5, 0.25) * std::abs(t(hi, hi - 1));
    }

    // implicit single-shift sweep on the window [lo, hi]
    cx x = t(lo, lo) - mu;
    cx y = t(lo + 1, lo);
    for (int k = lo; k < hi; ++k) {
      const Givens g = make_givens(x, y);
      apply_givens_left(t, k, g, std::max(0, k - 1), n);
      apply_givens_right(t, k, g, 0, std::min(n, k + 3));
      apply_givens_right(q, k, g, 0, n);
      if (k + 2 <= hi) {
        x = t(k + 1, k);
        y = t(k + 2, k);
      }
    }
  }
  // clear tiny strictly-lower entries left by the sweeps
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) t(i, j) = 0.0;

  if (order_key) {
    // bubble sort by key, non-increasing along the diagonal
    std::vector<double> key(n);
    for (int i = 0; i < n; ++i) key[i] = order_key(t(i, i));
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (key[i] + 1e-300 < key[i + 1]) {
          swap_adjacent(t, q, i);
          std::swap(key[i], key[i + 1]);
          std::swap(out.ordering[i], out.ordering[i + 1]);
          moved = true;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// polynomial evaluation, LU, resolvent
// ---------------------------------------------------------------------------

CMatrix eval_poly(const CMatrix& a, const Polynomial& p) {
  require_finite(a, "eval_poly");
  if (!p.all_finite()) fail(ErrorKind::input, "eval_poly: non-finite coefficients");
  const int n = a.n();
  CMatrix r(n);
  const auto& c = p.coeffs;
  for (int i = 0; i < n; ++i) r(i, i) = c.back();
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    r = r * a;
    for (int i = 0; i < n; ++i) r(i, i) += c[k];
  }
  return r;
}

namespace {

struct Lu {
  CMatrix lu;
  std::vector<int> piv;
  bool singular = false;
};

Lu lu_factor(const CMatrix& m) {
  const int n = m.n();
  Lu f{m, std::vector<int>(n), false};
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(f.lu(i, k)) > best) {
        best = std::abs(f.lu(i, k));
        p = i;
      }
    f.piv[k] = p;
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
    const cx inv = 1.0 / f.lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      f.lu(i, k) *= inv;
      const cx lik = f.lu(i, k);
      if (lik == cx(0.0)) continue;
      for (int j = k + 1; j < n; ++j) f.lu(i, j) -= lik * f.lu(k, j);
    }
  }
  return f;
}

CMatrix lu_apply(const Lu& f, const CMatrix& b) {
  const int n = f.lu.n();
  CMatrix x = b;
  for (int k = 0; k < n; ++k)
    if (f.piv[k] != k)
      for (int j = 0; j < n; ++j) std::swap(x(k, j), x(f.piv[k], j));
  // forward
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) {
      const cx lik = f.lu(i, k);
      if (lik == cx(0.0)) continue;
      for (int j = 0; j < n; ++j) x(i, j) -= lik * x(k, j);
    }
  // backward
  for (int k = n - 1; k >= 0; --k) {
    const cx inv = 1.0 / f.lu(k, k);
    for (int j = 0; j < n; ++j) x(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      const cx uik = f.lu(i, k);
      if (uik == cx(0.0)) continue;
      for (int j = 0; j < n; ++j) x(i, j) -= uik * x(k, j);
    }
  }
  return x;
}

}  // namespace

CMatrix lu_solve(const CMatrix& m, const CMatrix& b) {
  require_finite(m, "lu_solve");
  const Lu f = lu_factor(m);
  if (f.singular) fail(ErrorKind::singularity, "lu_solve: singular matrix");
  return lu_apply(f, b);
}

CMatrix inverse(const CMatrix& m) {
  return lu_solve(m, CMatrix::identity(m.n()));
}

CMatrix resolvent(const CMatrix& a, cx z) {
  require_finite(a, "resolvent");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorKind::input, "resolvent: non-finite shift");
  const int n = a.n();
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j ? z : cx(0.0)) - a(i, j);
  const auto sv = singular_values(m);
  if (n > 0 && (sv.back() == 0.0 || sv.front() / sv.back() >= 1e12))
    fail(ErrorKind::singularity,
         "resolvent: shift too close to the spectrum (condition >= 1e12)");
  return lu_solve(m, CMatrix::identity(n));
}

}  // namespace crx
