#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poissonz/exactalg.hpp"
#include "poissonz/sampling.hpp"

namespace poissonz {

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;
using MatrixMap = std::function<Mat(const Mat&)>;

/// A basic invariant of a matrix Lie algebra: restrict X to the subspace W
/// spanned by the columns of `embed`, then take tr(X_W^power) or Pf(gram * X_W).
struct InvariantRecipe {
  enum class Kind { Trace, Pfaffian };
  Kind kind = Kind::Trace;
  unsigned power = 2;
  Mat embed;    // N x w
  Mat project;  // w x N, project * embed = I, kills the complementary invariant subspace
  Mat gram;     // w x w, only for Pfaffian
  unsigned degree() const;
  std::string describe() const;
};

/// Defining-representation data behind a StructureConstants table.
struct MatrixRealization {
  std::size_t n = 0;  // matrix size
  std::vector<Mat> basis;
  std::vector<InvariantRecipe> invariants;

  MatrixRealization(std::size_t size, std::vector<Mat> mats, std::vector<InvariantRecipe> recipes);
  /// Coordinates of x in `basis`; throws when x is outside the span.
  Vec coordinates(const Mat& x) const;
  std::optional<Vec> try_coordinates(const Mat& x) const;
  Mat element(const Vec& coords) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  Mat solve_;  // dim x dim, maps pivot entries to coordinates
};

/// Lie algebra as sparse structure constants [e_i, e_j] = sum_k c_ij^k e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(std::string name, std::vector<std::string> labels, std::vector<SparseVec> table,
                     Mat trace_form);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  const Mat& trace_form() const { return trace_form_; }
  const std::shared_ptr<const MatrixRealization>& realization() const { return realization_; }
  void set_realization(std::shared_ptr<const MatrixRealization> r) { realization_ = std::move(r); }

  /// Sampled index recorded at construction (the rank for reductive algebras).
  std::size_t rank() const { return rank_; }
  void set_rank(std::size_t r) { rank_ = r; }

  /// Matrix of ad_x: column j holds the coordinates of [x, e_j].
  Mat ad(const Vec& x) const;
  /// pi(xi)_ij = sum_k c_ij^k xi_k.
  Mat form_at(const Vec& xi) const;
  /// Point of g* paired with element x through the trace form: xi_i = kappa(x, e_i).
  Vec element_to_point(const Vec& x) const;
  Vec point_to_element(const Vec& xi) const;

  /// Returns a description of the first failing triple, or nothing.
  std::optional<std::string> jacobi_defect() const;
  std::optional<std::string> antisymmetry_defect() const;
  std::optional<std::string> trace_form_defect() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Mat trace_form_;
  std::shared_ptr<const MatrixRealization> realization_;
  std::size_t rank_ = 0;
};

/// Classical simple factor: family 'A' (sl_n), 'B'/'D' via 'O' (so_n), 'C' (sp_n, n even).
struct ClassicalFactor {
  char family = 'A';
  std::size_t n = 2;
  std::string name() const;
};

struct AlgebraSpec {
  std::vector<ClassicalFactor> factors;
  std::string name() const;
};

/// Parses "sl3", "so5", "sp4" and "+"-separated direct sums.
AlgebraSpec parse_algebra(const std::string& text);

/// Builds a matrix Lie algebra from basis matrices: structure constants, trace form,
/// recipes; verifies antisymmetry, Jacobi and trace-form invariance.
StructureConstants algebra_from_matrices(const std::string& name, std::size_t size, const std::vector<Mat>& basis,
                                         const std::vector<std::string>& labels,
                                         const std::vector<InvariantRecipe>& recipes);

StructureConstants build_algebra(const AlgebraSpec& spec);
StructureConstants build_algebra(const std::string& text);

/// Antidiagonal Gram matrices of the split forms.
Mat split_orthogonal_gram(std::size_t n);
Mat split_symplectic_gram(std::size_t n);

/// Standard invariant recipes of a factor acting on the columns of `embed`.
std::vector<InvariantRecipe> factor_recipes(const ClassicalFactor& f, const Mat& embed, const Mat& project,
                                            const Mat& gram);

struct Centralizer {
  enum class Tag { Regular, Subregular, Other };
  std::size_t dim = 0;
  std::vector<Vec> basis;
  Tag tag = Tag::Other;
};
const char* to_string(Centralizer::Tag t);

Centralizer centralizer(const StructureConstants& g, const Vec& x);

/// min over random points of dim ker pi(xi).
std::size_t sampled_index(const StructureConstants& g, std::size_t trials, std::uint64_t seed,
                          long height = kDefaultHeight);

}  // namespace poissonz
