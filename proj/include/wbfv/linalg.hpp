#pragma once

// Small dense vectors/matrices (n <= 8) with the few operations the
// interface solvers need: products, small linear solves and eigendecomposition
// containers.  Storage is inline, so these are cheap value types.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace wbfv {

inline constexpr int kMaxDim = 8;

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(double det_estimate, const std::string& context)
      : std::runtime_error("near-singular matrix in " + context +
                           " (det estimate " + std::to_string(det_estimate) + ")"),
        det_estimate(det_estimate) {}
  double det_estimate;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResonantSourceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : n_(check_dim(n)) {}
  Vec(std::initializer_list<double> xs) : n_(check_dim(static_cast<int>(xs.size()))) {
    int i = 0;
    for (double x : xs) d_[i++] = x;
  }

  int size() const { return n_; }
  double& operator[](int i) { return d_[i]; }
  double operator[](int i) const { return d_[i]; }
  const double* data() const { return d_.data(); }
  double* data() { return d_.data(); }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < n_; ++i) d_[i] += o.d_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < n_; ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < n_; ++i) d_[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }

  double inf_norm() const;
  bool all_finite() const;

  static int check_dim(int n) {
    if (n < 0 || n > kMaxDim) throw std::length_error("Vec dimension out of range");
    return n;
  }

 private:
  int n_ = 0;
  std::array<double, kMaxDim> d_{};
};

class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(Vec::check_dim(n)) {}
  // Row-major initializer: Mat(2, {a00, a01, a10, a11}).
  Mat(int n, std::initializer_list<double> xs) : n_(Vec::check_dim(n)) {
    if (static_cast<int>(xs.size()) != n * n)
      throw std::length_error("Mat initializer size mismatch");
    int i = 0;
    for (double x : xs) d_[i++] = x;
  }

  static Mat identity(int n);

  int size() const { return n_; }
  double& operator()(int i, int j) { return d_[i * n_ + j]; }
  double operator()(int i, int j) const { return d_[i * n_ + j]; }

  Mat& operator+=(const Mat& o) {
    for (int i = 0; i < n_ * n_; ++i) d_[i] += o.d_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (int i = 0; i < n_ * n_; ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (int i = 0; i < n_ * n_; ++i) d_[i] *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }

  // Induced infinity norm (max absolute row sum).
  double inf_norm() const;
  bool all_finite() const;

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim> d_{};
};

Vec matvec(const Mat& a, const Vec& v);
Mat matmul(const Mat& a, const Mat& b);
double determinant(const Mat& a);

// Direct solve of A x = b by partially pivoted LU.  Covers the 2x2 and 3x3
// interface systems as well as the block solves of the augmented form.
// Throws SingularMatrixError when |det A| <= 1e-14 * ||A||_inf^n.
Vec solve(const Mat& a, const Vec& b);

struct EigenDecomposition {
  Vec lambdas;  // sorted ascending; column m of p pairs with lambdas[m]
  Mat p;
  Mat pinv;
};

struct DecompositionResiduals {
  double reconstruction;  // ||P diag(lambda) Pinv - A||_inf
  double inverse;         // ||P Pinv - I||_inf
};

DecompositionResiduals validate_decomposition(const Mat& a, const EigenDecomposition& d);

// Reorders the triple so lambdas are ascending, keeping columns of P and rows
// of Pinv paired with their eigenvalue.
void sort_eigen(EigenDecomposition& d);

}  // namespace wbfv
