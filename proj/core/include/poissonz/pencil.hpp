#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poissonz/exactalg.hpp"
#include "poissonz/report.hpp"
#include "poissonz/sampling.hpp"

namespace poissonz {

/// Member of the pencil: finite b gives A + bB, nullopt gives B.
using PencilParam = std::optional<Rat>;
std::string to_string(const PencilParam& b);

/// The plane of skew forms spanned by A and B on k^n.
class Pencil {
 public:
  Pencil(Mat a, Mat b);

  const Mat& a() const { return a_; }
  const Mat& b() const { return b_; }
  std::size_t n() const { return a_.rows(); }
  Mat member(const PencilParam& t) const;
  /// Maximal rank over the pencil.
  std::size_t generic_rank() const { return m_; }

 private:
  Mat a_, b_;
  std::size_t m_ = 0;
};

struct GenericRankL {
  std::size_t m = 0;
  std::vector<Vec> L;  // echelon basis of the sum of kernels of regular members
  std::vector<Rat> params;
};
/// Sums kernels over `sample_count` regular finite members and asserts one more adds nothing.
GenericRankL generic_rank_and_L(const Pencil& p, std::size_t sample_count);
GenericRankL generic_rank_and_L(const Pencil& p);  // sample_count = n + 1

struct SingularMembers {
  std::vector<Rat> finite;  // rational b with rank(A + bB) < m
  bool at_infinity = false;  // rank B < m
  bool non_rational = false;
  std::vector<int> leftover_degrees;  // square-free factor degrees without rational roots
};
/// Common rational roots of the principal m x m Pfaffians of A + bB.
SingularMembers singular_members(const Pencil& p);

/// A'(ker B', L) = 0 for every ordered pair of distinct listed members.
VerificationReport orthogonality_check(const Pencil& p, const std::vector<PencilParam>& members);

/// Rank bound on ker C and, when its hypotheses hold, the dimension equalities for L.
VerificationReport bound_and_sumdim_check(const Pencil& p, const PencilParam& c);

struct JkSummary {
  std::size_t d_prime = 0;  // number of Kronecker blocks, n - m
  std::size_t dim_L = 0;
  std::size_t sum_k = 0;    // sum of Kronecker indices, dim L - d'
  SingularMembers singular;
  std::vector<std::pair<std::string, std::size_t>> kernel_dims;  // at each singular member
};
JkSummary jk_summary(const Pencil& p);

/// Grammar: optional '#' comments; the size n; then n*n entries of A and n*n of B, row-major rationals.
Pencil parse_pencil(std::istream& in);
Pencil read_pencil_file(const std::string& path);

/// Kronecker block of size 2k+1: A = [[0, X], [-X^T, 0]] with X = [I_k | 0], B likewise with X = [0 | I_k].
Pencil kronecker_block(std::size_t k);
/// Jordan block of size 2s: A = [[0, J], [-J^T, 0]] with J = J_s(lambda), B = [[0, -I], [I, 0]].
Pencil jordan_block(const Rat& lambda, std::size_t s);
Pencil direct_sum(const std::vector<Pencil>& blocks);
/// (P^T A P, P^T B P).
Pencil congruence(const Pencil& p, const Mat& q);

/// Pencil built from random blocks, with the block data kept as ground truth.
struct BlockPencil {
  Pencil pencil;
  std::vector<std::size_t> kronecker;                     // k_i
  std::vector<std::pair<Rat, std::size_t>> jordan;        // (lambda, s)
  std::size_t d_prime() const { return kronecker.size(); }
  std::size_t sum_k() const;
};
BlockPencil random_block_pencil(Sampler& s, std::size_t max_n);

}  // namespace poissonz
