#pragma once

#include <functional>
#include <vector>

#include "crx/cmatrix.hpp"

namespace crx {

// Unitary triangularization A = q t q*. `ordering` records the positions of
// the diagonal eigenvalues as they ended up after sorting.
struct SchurForm {
  CMatrix q;
  CMatrix t;
  std::vector<int> ordering;

  std::vector<cx> eigenvalues() const { return t.diag(); }
};

// ---- singular values / operator norm ----

// All singular values, descending, via one-sided Jacobi. Exact to roundoff
// at the dimensions this library targets (n <= 64).
std::vector<double> singular_values(const CMatrix& a);

// Largest singular value.
double op_norm(const CMatrix& a);

// ---- Hermitian eigensolver (cyclic Jacobi) ----

struct HermitianEigs {
  std::vector<double> values;  // descending
  CMatrix vectors;             // unitary, columns are eigenvectors
};

HermitianEigs hermitian_eigs(const CMatrix& h);

// ---- Schur form ----

using OrderKey = std::function<double(cx)>;

// Complex Schur form with the diagonal sorted so that order_key is
// non-increasing along it. Pass nullptr for no reordering.
SchurForm complex_schur(const CMatrix& a, const OrderKey& order_key = nullptr);

// ---- polynomial / resolvent ----

// Horner evaluation p(a). Degree 0 gives c_0 * I exactly.
CMatrix eval_poly(const CMatrix& a, const Polynomial& p);

// (z I - a)^{-1}, guarded: fails with singularity-error when the solve's
// condition estimate reaches 1e12.
CMatrix resolvent(const CMatrix& a, cx z);

// ---- linear solves ----

// LU with partial pivoting, multiple right-hand sides (b holds columns).
CMatrix lu_solve(const CMatrix& m, const CMatrix& b);
CMatrix inverse(const CMatrix& m);

}  // namespace crx
