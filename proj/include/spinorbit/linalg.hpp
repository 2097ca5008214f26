// Exact linear algebra over the Gaussian rationals: dense and sparse
// matrices, reduced row echelon form, kernels, solving, and certified
// minimal polynomials by Krylov iteration (the returned polynomial is
// the lcm of per-seed annihilators, with seeds added until the
// accumulated Krylov vectors span the whole space, which proves
// minimality).
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spinorbit/gaussrat.hpp"
#include "spinorbit/upoly.hpp"

namespace spinorbit {

using Vec = std::vector<GaussRat>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<GaussRat> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static Mat identity(int n);

  GaussRat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const GaussRat& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  Mat transpose() const;
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  Mat operator*(const GaussRat& s) const;
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  Vec apply(const Vec& v) const;

  std::optional<Mat> inverse() const;
};

struct SparseMat {
  int rows = 0, cols = 0;
  // row[r] holds (col, value) pairs sorted by col; no zero values.
  std::vector<std::vector<std::pair<int, GaussRat>>> row;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

  void add(int r, int c, const GaussRat& v);  // accumulates; drops zeros
  Vec apply(const Vec& v) const;
  Mat dense() const;
  static SparseMat from_dense(const Mat& m);
  SparseMat transpose() const;
  friend SparseMat operator*(const SparseMat& x, const SparseMat& y);
  size_t nnz() const;
};

struct RrefResult {
  Mat echelon;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// In-place Gauss-Jordan to the unique reduced row echelon form.
RrefResult rref(Mat m);
RrefResult rref(const SparseMat& m);

// Basis of the right null space, each vector canonical (first nonzero
// coordinate = 1), ordered by free-column index.
std::vector<Vec> kernel_basis(const Mat& m);
std::vector<Vec> kernel_basis(const SparseMat& m);

// One solution x of m x = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);

int rank_of(const Mat& m);

// Incrementally maintained row space in reduced echelon form; used for
// span bookkeeping (Krylov certificates, basis extraction).
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}
  // Reduces v against the current rows; if a nonzero residual remains it
  // is added (normalized) and true is returned.
  bool add(Vec v);
  bool contains(Vec v) const;
  // Writes the reduction of v in place; returns true if it hit zero.
  bool reduce(Vec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Coordinates of v in terms of the stored rows, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;  // pivot column of each row, parallel to rows_
};

// Minimal polynomial of the linear map v -> apply(v) on an n-dimensional
// space.  `apply` must be linear; the result is monic, annihilates the
// map (certified: the union of the Krylov subspaces inspected spans the
// space, and the lcm of their annihilators kills each of them), and is
// minimal (each per-seed annihilator divides the true minimal
// polynomial).
UPoly min_poly_of_operator(int n, const std::function<Vec(const Vec&)>& apply);

UPoly min_poly(const SparseMat& m);
UPoly min_poly(const Mat& m);

}  // namespace spinorbit
