#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace poissonz {

/// Exact rational. GMP keeps every value canonical: lowest terms, positive denominator.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& text);

/// Dense row-major matrix over Rat.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Mat transpose() const;
  Mat submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  bool is_skew() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Vec operator*(const Mat& a, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  // basis of {v : M v = 0}
};

RankKernel rank_kernel(const Mat& m);
std::size_t rank(const Mat& m);
Rat determinant(const Mat& m);
/// Throws when singular.
Mat inverse(const Mat& m);

/// Reduced row-echelon basis of span(vectors); empty vectors allowed.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);
std::size_t span_dim(const std::vector<Vec>& vectors, std::size_t dim);
std::vector<Vec> intersect_spans(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t dim);
/// Gram matrix F(b_i, b_j) of a bilinear form restricted to span(basis).
Mat restrict_form(const Mat& form, const std::vector<Vec>& basis);

/// Incremental echelon form; tracks whether new vectors enlarge the span.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}
  /// Returns true when v is independent of the vectors added so far.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Vec reduce(Vec v) const;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Pf(M) for skew M of even size; Pf of diag([[0,1],[-1,0]],...) is +1.
Rat pfaffian(const Mat& m);

/// Entry at S is Pf(M_S). With the form w = sum_{i<j} M_ij e_i* ^ e_j*, the
/// coordinate of w^(k/2) at e_S* equals (k/2)! times the entry; see wedge_power_constant.
std::map<std::vector<std::size_t>, Rat> sub_pfaffian_vector(const Mat& m, std::size_t k);
Rat wedge_power_constant(std::size_t k);

/// Pfaffian by first-row expansion with memoisation over index subsets.
/// Works over any commutative ring; entry(i, j) is read for i < j only.
template <class Ring, class Entry>
Ring pfaffian_expand(std::size_t n, Entry entry, const Ring& one, const Ring& zero) {
  if (n % 2 != 0) throw Error("pfaffian undefined");
  std::unordered_map<unsigned long long, Ring> memo;
  auto rec = [&](auto&& self, unsigned long long mask) -> Ring {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!((mask >> i) & 1ULL)) ++i;
    Ring acc = zero;
    int sign = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!((mask >> j) & 1ULL)) continue;
      Ring e = entry(i, j);
      if (!(e == zero)) {
        Ring sub = self(self, mask & ~(1ULL << i) & ~(1ULL << j));
        if (sign > 0) acc = acc + e * sub;
        else acc = acc - e * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  unsigned long long full = n == 64 ? ~0ULL : ((1ULL << n) - 1ULL);
  return rec(rec, full);
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);
/// Sign of the permutation sorting the concatenation (I, J) of disjoint sorted index lists.
int shuffle_sign(const std::vector<std::size_t>& i, const std::vector<std::size_t>& j);

}  // namespace poissonz
