// Copyright 2026  MVICA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MVICA_CMAT_HPP_
#define MVICA_CMAT_HPP_

#include <array>
#include <cmath>
#include <complex>

#include "mvica/errors.hpp"

namespace mvica {

using cplx = std::complex<double>;

// Small fixed-capacity complex vector/matrix pair used for the per-frequency
// KxK algebra (K in {2,3,4}).  Value types, no heap allocation.
constexpr int kMaxDim = 4;

// Pivot magnitudes below this are treated as exactly singular.
constexpr double kPivotFloor = 1e-30;

// Hermitian inverses refuse matrices whose Frobenius-estimated condition
// number exceeds this cap; callers are expected to diagonal-load and retry.
constexpr double kConditionCap = 1e12;

class CVec {
 public:
  CVec() : dim_(0) { entries_.fill(cplx(0.0, 0.0)); }

  explicit CVec(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw ShapeMismatch("CVec: bad dim");
    entries_.fill(cplx(0.0, 0.0));
  }

  static CVec unit(int dim, int k) {
    CVec v(dim);
    v[k] = cplx(1.0, 0.0);
    return v;
  }

  int dim() const { return dim_; }

  cplx &operator[](int i) { return entries_[static_cast<size_t>(i)]; }
  const cplx &operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

  double norm2() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::norm(entries_[static_cast<size_t>(i)]);
    return std::sqrt(s);
  }

  bool finite() const {
    for (int i = 0; i < dim_; ++i) {
      const cplx &z = entries_[static_cast<size_t>(i)];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

 private:
  int dim_;
  std::array<cplx, kMaxDim> entries_;
};

// Conjugates the first argument: <a, b> = sum_i conj(a_i) b_i.
inline cplx vdot(const CVec &a, const CVec &b) {
  cplx s(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline CVec operator*(const cplx &c, const CVec &v) {
  CVec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = c * v[i];
  return r;
}

inline CVec operator+(const CVec &a, const CVec &b) {
  CVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline CVec operator-(const CVec &a, const CVec &b) {
  CVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

class CMat {
 public:
  CMat() : dim_(0) { entries_.fill(cplx(0.0, 0.0)); }

  explicit CMat(int dim) : dim_(dim) {
    if (dim < 2 || dim > kMaxDim) throw ShapeMismatch("CMat: bad dim");
    entries_.fill(cplx(0.0, 0.0));
  }

  static CMat identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = cplx(1.0, 0.0);
    return m;
  }

  static CMat diag(int dim, const double *d) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = cplx(d[i], 0.0);
    return m;
  }

  int dim() const { return dim_; }

  cplx &at(int i, int j) { return entries_[static_cast<size_t>(i * dim_ + j)]; }
  const cplx &at(int i, int j) const {
    return entries_[static_cast<size_t>(i * dim_ + j)];
  }

  CMat adjoint() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }

  cplx trace() const {
    cplx s(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) s += at(i, i);
    return s;
  }

  double frobenius() const {
    double s = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(entries_[static_cast<size_t>(i)]);
    return std::sqrt(s);
  }

  bool finite() const {
    for (int i = 0; i < dim_ * dim_; ++i) {
      const cplx &z = entries_[static_cast<size_t>(i)];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  CVec row_conj(int i) const {  // w_k from the stored row w_k^H
    CVec v(dim_);
    for (int j = 0; j < dim_; ++j) v[j] = std::conj(at(i, j));
    return v;
  }

  CVec col(int j) const {
    CVec v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = at(i, j);
    return v;
  }

  void set_row_conj(int i, const CVec &w) {  // store w^H as row i
    for (int j = 0; j < dim_; ++j) at(i, j) = std::conj(w[j]);
  }

  // Copies the upper triangle onto the lower; removes rounding asymmetry.
  void hermitize() {
    for (int i = 0; i < dim_; ++i) {
      at(i, i) = cplx(at(i, i).real(), 0.0);
      for (int j = i + 1; j < dim_; ++j) at(j, i) = std::conj(at(i, j));
    }
  }

 private:
  int dim_;
  std::array<cplx, kMaxDim * kMaxDim> entries_;
};

inline CMat operator*(const CMat &a, const CMat &b) {
  CMat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      cplx s(0.0, 0.0);
      for (int k = 0; k < a.dim(); ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

inline CVec operator*(const CMat &a, const CVec &x) {
  CVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    cplx s(0.0, 0.0);
    for (int k = 0; k < a.dim(); ++k) s += a.at(i, k) * x[k];
    r[i] = s;
  }
  return r;
}

inline CMat operator+(const CMat &a, const CMat &b) {
  CMat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

inline CMat operator-(const CMat &a, const CMat &b) {
  CMat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

inline CMat operator*(double c, const CMat &a) {
  CMat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

// x x^H, Hermitian by construction.
inline CMat outer_herm(const CVec &x) {
  CMat r(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    r.at(i, i) = cplx(std::norm(x[i]), 0.0);
    for (int j = i + 1; j < x.dim(); ++j) {
      r.at(i, j) = x[i] * std::conj(x[j]);
      r.at(j, i) = std::conj(r.at(i, j));
    }
  }
  return r;
}

// General inverse by Gauss-Jordan elimination with partial pivoting.
// Throws SingularMatrix when a pivot falls below kPivotFloor.
CMat inverse(const CMat &m);

// Inverse of a Hermitian matrix; additionally rejects inputs whose
// Frobenius-estimated condition number exceeds kConditionCap so that callers
// can diagonal-load and retry.
CMat herm_inverse(const CMat &m);

// Upper-triangular P with P^H P = M for Hermitian positive definite M.
CMat cholesky(const CMat &m);

// M + eps*I.  Off-diagonal entries are untouched, so Hermitian symmetry of
// the input is preserved bit for bit.
CMat diag_load(const CMat &m, double eps);

cplx det(const CMat &m);

// Solve R x = b and R^H x = b for upper-triangular R.
CVec tri_upper_solve(const CMat &r, const CVec &b);
CVec tri_upper_conj_solve(const CMat &r, const CVec &b);

struct HermEig {
  std::array<double, kMaxDim> values;  // descending
  CMat vectors;                        // column j pairs with values[j]
};

// Full eigendecomposition of a Hermitian matrix: closed form for dim 2,
// cyclic Jacobi sweeps otherwise.
HermEig hermitian_eig(const CMat &a);

struct GenEigMax {
  double value;
  CVec vector;  // unit 2-norm, largest-magnitude entry made real positive
};

// Largest-pair solution of S v = lambda N v for Hermitian PSD S and Hermitian
// PD N, by Cholesky reduction N = P^H P and a standard Hermitian solve on
// P^{-H} S P^{-1}.
GenEigMax gen_eig_max(const CMat &s, const CMat &n);

}  // namespace mvica

#endif  // MVICA_CMAT_HPP_
