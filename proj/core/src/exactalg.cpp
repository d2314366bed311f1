#include "poissonz/exactalg.hpp"

#include <algorithm>
#include <utility>

namespace poissonz {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& text) {
  Rat r;
  if (text.empty() || r.set_str(text, 10) != 0) throw Error("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Mat s(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) s(a, b) = (*this)(rs[a], cs[b]);
  return s;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool Mat::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
  Mat p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += x * b(k, j);
    }
  return p;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
  Mat s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference shape mismatch");
  Mat s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw Error("matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dot product length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankKernel rank_kernel(const Mat& m) {
  Mat e = m;
  std::vector<std::size_t> pivots = rref(e);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Mat& m) {
  Mat e = m;
  return rref(e).size();
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  Mat a = m;
  std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Mat m = Mat::from_rows(vectors, dim);
  std::size_t r = rref(m).size();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
  return out;
}

std::size_t span_dim(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Mat::from_rows(vectors, dim));
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t dim) {
  if (u.empty() || w.empty()) return {};
  // Solve sum a_i u_i - sum b_j w_j = 0; the intersection is spanned by sum a_i u_i.
  Mat m(dim, u.size() + w.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = u[i][r];
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, u.size() + j) = -w[j][r];
  std::vector<Vec> gens;
  for (const auto& k : rank_kernel(m).kernel) {
    Vec v(dim);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (sgn(k[i]) != 0)
        for (std::size_t r = 0; r < dim; ++r) v[r] += k[i] * u[i][r];
    gens.push_back(std::move(v));
  }
  return span_basis(gens, dim);
}

Mat restrict_form(const Mat& form, const std::vector<Vec>& basis) {
  Mat g(basis.size(), basis.size());
  std::vector<Vec> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(form * b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = dot(basis[i], images[j]);
  return g;
}

Vec SpanTracker::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (sgn(c) == 0) continue;
    Rat f = c;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool SpanTracker::add(const Vec& v) {
  if (v.size() != dim_) throw Error("span tracker dimension mismatch");
  Vec red = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(red[p]) == 0) ++p;
  if (p == dim_) return false;
  Rat inv = 1 / red[p];
  for (auto& x : red) x *= inv;
  // Keep rows fully reduced so reduce() is a single pass.
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rat f = row[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(red[j]) != 0) row[j] -= f * red[j];
  }
  rows_.push_back(std::move(red));
  pivots_.push_back(p);
  return true;
}

bool SpanTracker::contains(const Vec& v) const { return is_zero(reduce(v)); }

namespace {

Rat pfaffian_eliminate(Mat a) {
  std::size_t n = a.rows();
  Rat result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && sgn(a(k, p)) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      // Simultaneous row/column transposition flips the sign.
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k + 1));
      result = -result;
    }
    Rat piv = a(k, k + 1);
    result *= piv;
    // C <- C - (u v^T - v u^T)/piv with u = row k, v = row k+1 restricted to the tail.
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j) {
        Rat d = a(k, i) * a(k + 1, j) - a(k + 1, i) * a(k, j);
        if (sgn(d) != 0) a(i, j) -= d / piv;
      }
  }
  return result;
}

}  // namespace

Rat pfaffian(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw Error("pfaffian undefined");
  if (!m.is_skew()) throw Error("pfaffian of a non-skew matrix");
  std::size_t n = m.rows();
  if (n <= 8) {
    return pfaffian_expand<Rat>(n, [&](std::size_t i, std::size_t j) { return m(i, j); }, Rat(1), Rat(0));
  }
  return pfaffian_eliminate(m);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int shuffle_sign(const std::vector<std::size_t>& i, const std::vector<std::size_t>& j) {
  // Count inversions between the two sorted blocks.
  std::size_t inv = 0;
  for (auto a : i)
    for (auto b : j)
      if (a > b) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Rat wedge_power_constant(std::size_t k) {
  if (k % 2 != 0) throw Error("sub-pfaffian order must be even");
  Rat f = 1;
  for (std::size_t i = 2; i <= k / 2; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::map<std::vector<std::size_t>, Rat> sub_pfaffian_vector(const Mat& m, std::size_t k) {
  if (k % 2 != 0) throw Error("sub-pfaffian order must be even");
  if (!m.is_skew()) throw Error("sub-pfaffian of a non-skew matrix");
  if (k > m.rows()) throw Error("sub-pfaffian order exceeds matrix size");
  std::map<std::vector<std::size_t>, Rat> out;
  for (auto& s : subsets(m.rows(), k)) out.emplace(s, pfaffian(m.submatrix(s, s)));
  return out;
}

}  // namespace poissonz
