#include "wbfv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace wbfv {

double Vec::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(d_[i]));
  return m;
}

bool Vec::all_finite() const {
  for (int i = 0; i < n_; ++i)
    if (!std::isfinite(d_[i])) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Mat::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

bool Mat::all_finite() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!std::isfinite((*this)(i, j))) return false;
  return true;
}

Vec matvec(const Mat& a, const Vec& v) {
  if (a.size() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  const int n = a.size();
  Vec r(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matmul: dimension mismatch");
  const int n = a.size();
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

double determinant(const Mat& a) {
  const int n = a.size();
  Mat lu = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      det = -det;
    }
    const double p = lu(col, col);
    det *= p;
    if (p == 0.0) return 0.0;
    for (int r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / p;
      for (int j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

Vec solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const int n = a.size();
  Mat lu = a;
  Vec x = b;
  std::array<int, kMaxDim> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;

  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      std::swap(x[col], x[pivot]);
      det = -det;
    }
    det *= lu(col, col);
    const double p = lu(col, col);
    if (p == 0.0) break;
    for (int r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / p;
      lu(r, col) = f;
      for (int j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
      x[r] -= f * x[col];
    }
  }

  double scale = 1.0;
  const double norm = a.inf_norm();
  for (int i = 0; i < n; ++i) scale *= norm;
  if (std::abs(det) <= 1e-14 * scale) throw SingularMatrixError(det, "solve");

  for (int r = n - 1; r >= 0; --r) {
    double s = x[r];
    for (int j = r + 1; j < n; ++j) s -= lu(r, j) * x[j];
    x[r] = s / lu(r, r);
  }
  return x;
}

DecompositionResiduals validate_decomposition(const Mat& a, const EigenDecomposition& d) {
  const int n = a.size();
  Mat recon(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += d.p(i, m) * d.lambdas[m] * d.pinv(m, j);
      recon(i, j) = s;
    }
  DecompositionResiduals r{};
  r.reconstruction = (recon - a).inf_norm();
  r.inverse = (matmul(d.p, d.pinv) - Mat::identity(n)).inf_norm();
  return r;
}

void sort_eigen(EigenDecomposition& d) {
  const int n = d.lambdas.size();
  std::array<int, kMaxDim> order{};
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int i, int j) { return d.lambdas[i] < d.lambdas[j]; });
  EigenDecomposition out;
  out.lambdas = Vec(n);
  out.p = Mat(n);
  out.pinv = Mat(n);
  for (int m = 0; m < n; ++m) {
    out.lambdas[m] = d.lambdas[order[m]];
    for (int i = 0; i < n; ++i) {
      out.p(i, m) = d.p(i, order[m]);
      out.pinv(m, i) = d.pinv(order[m], i);
    }
  }
  d = out;
}

}  // namespace wbfv
