#include "spinorbit/linalg.hpp"

#include <stdexcept>

namespace spinorbit {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int k = 0; k < n; k++) m.at(k, k) = GaussRat(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) t.at(c, r) = at(r, c);
  return t;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("Mat product shape");
  Mat z(x.rows, y.cols);
  for (int r = 0; r < x.rows; r++)
    for (int k = 0; k < x.cols; k++) {
      const GaussRat& f = x.at(r, k);
      if (f.is_zero()) continue;
      for (int c = 0; c < y.cols; c++) {
        if (!y.at(k, c).is_zero()) z.at(r, c) += f * y.at(k, c);
      }
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("Mat sum shape");
  Mat z = x;
  for (size_t k = 0; k < z.a.size(); k++) z.a[k] += y.a[k];
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("Mat difference shape");
  Mat z = x;
  for (size_t k = 0; k < z.a.size(); k++) z.a[k] -= y.a[k];
  return z;
}

Mat Mat::operator*(const GaussRat& s) const {
  Mat z = *this;
  for (auto& v : z.a) v *= s;
  return z;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("Mat apply shape");
  Vec out(rows);
  for (int r = 0; r < rows; r++) {
    GaussRat acc;
    for (int c = 0; c < cols; c++) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

std::optional<Mat> Mat::inverse() const {
  if (rows != cols) return std::nullopt;
  Mat aug(rows, 2 * cols);
  for (int r = 0; r < rows; r++) {
    for (int c = 0; c < cols; c++) aug.at(r, c) = at(r, c);
    aug.at(r, cols + r) = GaussRat(1);
  }
  RrefResult rr = rref(aug);
  for (int k = 0; k < rows; k++)
    if (k >= rr.rank || rr.pivot_cols[k] != k) return std::nullopt;
  Mat inv(rows, cols);
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) inv.at(r, c) = rr.echelon.at(r, cols + c);
  return inv;
}

void SparseMat::add(int r, int c, const GaussRat& v) {
  if (v.is_zero()) return;
  auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != rw.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) rw.erase(it);
  } else {
    rw.insert(it, {c, v});
  }
}

Vec SparseMat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("SparseMat apply shape");
  Vec out(rows);
  for (int r = 0; r < rows; r++) {
    GaussRat acc;
    for (const auto& [c, val] : row[r])
      if (!v[c].is_zero()) acc += val * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

Mat SparseMat::dense() const {
  Mat m(rows, cols);
  for (int r = 0; r < rows; r++)
    for (const auto& [c, val] : row[r]) m.at(r, c) = val;
  return m;
}

SparseMat SparseMat::from_dense(const Mat& m) {
  SparseMat s(m.rows, m.cols);
  for (int r = 0; r < m.rows; r++)
    for (int c = 0; c < m.cols; c++)
      if (!m.at(r, c).is_zero()) s.row[r].push_back({c, m.at(r, c)});
  return s;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols, rows);
  for (int r = 0; r < rows; r++)
    for (const auto& [c, val] : row[r]) t.row[c].push_back({r, val});
  return t;
}

SparseMat operator*(const SparseMat& x, const SparseMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("SparseMat product shape");
  SparseMat z(x.rows, y.cols);
  std::vector<GaussRat> acc(y.cols);
  std::vector<int> touched;
  for (int r = 0; r < x.rows; r++) {
    touched.clear();
    for (const auto& [k, f] : x.row[r]) {
      for (const auto& [c, g] : y.row[k]) {
        if (acc[c].is_zero()) touched.push_back(c);
        acc[c] += f * g;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (!acc[c].is_zero()) z.row[r].push_back({c, acc[c]});
      acc[c] = GaussRat(0);
    }
  }
  return z;
}

size_t SparseMat::nnz() const {
  size_t n = 0;
  for (const auto& r : row) n += r.size();
  return n;
}

RrefResult rref(Mat m) {
  RrefResult out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; c++) {
    int pr = -1;
    for (int k = r; k < m.rows; k++) {
      if (!m.at(k, c).is_zero()) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < m.cols; j++) std::swap(m.at(pr, j), m.at(r, j));
    GaussRat inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; j++)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (int k = 0; k < m.rows; k++) {
      if (k == r || m.at(k, c).is_zero()) continue;
      GaussRat f = m.at(k, c);
      for (int j = c; j < m.cols; j++)
        if (!m.at(r, j).is_zero()) m.at(k, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    r++;
  }
  out.rank = r;
  out.echelon = std::move(m);
  return out;
}

RrefResult rref(const SparseMat& m) { return rref(m.dense()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols; c++) {
    if (is_pivot[c]) continue;
    Vec v(m.cols);
    v[c] = GaussRat(1);
    for (int r = 0; r < rr.rank; r++) {
      const GaussRat& e = rr.echelon.at(r, c);
      if (!e.is_zero()) v[rr.pivot_cols[r]] = -e;
    }
    // canonical: first nonzero coordinate = 1
    for (int k = 0; k < m.cols; k++) {
      if (!v[k].is_zero()) {
        GaussRat inv = v[k].inv();
        for (int j = k; j < m.cols; j++)
          if (!v[j].is_zero()) v[j] *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> kernel_basis(const SparseMat& m) {
  return kernel_basis(m.dense());
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("solve shape");
  Mat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; r++) {
    for (int c = 0; c < m.cols; c++) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  RrefResult rr = rref(std::move(aug));
  Vec x(m.cols);
  for (int r = 0; r < rr.rank; r++) {
    if (rr.pivot_cols[r] == m.cols) return std::nullopt;  // inconsistent
    x[rr.pivot_cols[r]] = rr.echelon.at(r, m.cols);
  }
  return x;
}

int rank_of(const Mat& m) { return rref(m).rank; }

bool SpanBuilder::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); r++) {
    const GaussRat& coef = v[pivots_[r]];
    if (coef.is_zero()) continue;
    GaussRat f = coef;
    const Vec& row = rows_[r];
    for (int c = pivots_[r]; c < dim_; c++)
      if (!row[c].is_zero()) v[c] -= f * row[c];
  }
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

bool SpanBuilder::add(Vec v) {
  if (reduce(v)) return false;
  int p = 0;
  while (v[p].is_zero()) p++;
  GaussRat inv = v[p].inv();
  for (int c = p; c < dim_; c++)
    if (!v[c].is_zero()) v[c] *= inv;
  // back-substitute into existing rows to keep reduced form
  for (size_t r = 0; r < rows_.size(); r++) {
    GaussRat f = rows_[r][p];
    if (f.is_zero()) continue;
    for (int c = p; c < dim_; c++)
      if (!v[c].is_zero()) rows_[r][c] -= f * v[c];
  }
  // insert keeping pivots sorted
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool SpanBuilder::contains(Vec v) const { return reduce(v); }

std::optional<Vec> SpanBuilder::coordinates(const Vec& v) const {
  Vec w = v;
  Vec coords(rows_.size());
  for (size_t r = 0; r < rows_.size(); r++) {
    const GaussRat& coef = w[pivots_[r]];
    if (coef.is_zero()) continue;
    GaussRat f = coef;
    coords[r] = f;
    const Vec& row = rows_[r];
    for (int c = pivots_[r]; c < dim_; c++)
      if (!row[c].is_zero()) w[c] -= f * row[c];
  }
  for (const auto& z : w)
    if (!z.is_zero()) return std::nullopt;
  return coords;
}

UPoly min_poly_of_operator(int n,
                           const std::function<Vec(const Vec&)>& apply) {
  SpanBuilder global(n);
  UPoly m = UPoly::constant(GaussRat(1));
  for (int seed = 0; seed < n && global.rank() < n; seed++) {
    {
      Vec probe(n);
      probe[seed] = GaussRat(1);
      if (global.contains(probe)) continue;
    }
    // Krylov sequence from e_seed with annihilator tracking: rows are
    // [A^k v | t^k] over an augmentation that grows with k.
    std::vector<Vec> redrows;        // reduced Krylov vectors (length n)
    std::vector<int> pivots;         // pivot of each reduced row
    std::vector<std::vector<GaussRat>> combo;  // poly coeffs per row
    Vec v(n);
    v[seed] = GaussRat(1);
    Vec cur = v;
    for (int step = 0;; step++) {
      Vec w = cur;
      std::vector<GaussRat> wc(step + 1);
      wc[step] = GaussRat(1);
      // reduce against this seed's own reduced rows
      for (size_t r = 0; r < redrows.size(); r++) {
        const GaussRat f = w[pivots[r]];
        if (f.is_zero()) continue;
        for (int c = pivots[r]; c < n; c++)
          if (!redrows[r][c].is_zero()) w[c] -= f * redrows[r][c];
        for (size_t c = 0; c < combo[r].size(); c++)
          if (!combo[r][c].is_zero()) wc[c] -= f * combo[r][c];
      }
      int p = -1;
      for (int c = 0; c < n; c++) {
        if (!w[c].is_zero()) {
          p = c;
          break;
        }
      }
      if (p < 0) {
        // dependency found: wc is (up to normalization) the annihilator
        UPoly mu(std::move(wc));
        m = lcm(m, mu.monic());
        break;
      }
      GaussRat inv = w[p].inv();
      for (int c = p; c < n; c++)
        if (!w[c].is_zero()) w[c] *= inv;
      for (auto& z : wc) z *= inv;
      redrows.push_back(std::move(w));
      pivots.push_back(p);
      combo.push_back(std::move(wc));
      global.add(cur);
      cur = apply(cur);
      if (static_cast<int>(cur.size()) != n)
        throw std::invalid_argument("min_poly operator changed dimension");
    }
  }
  return m;
}

UPoly min_poly(const SparseMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("min_poly: non-square");
  if (m.rows == 0) return UPoly::constant(GaussRat(1));
  return min_poly_of_operator(m.rows, [&](const Vec& v) { return m.apply(v); });
}

UPoly min_poly(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("min_poly: non-square");
  if (m.rows == 0) return UPoly::constant(GaussRat(1));
  return min_poly_of_operator(m.rows, [&](const Vec& v) { return m.apply(v); });
}

}  // namespace spinorbit
