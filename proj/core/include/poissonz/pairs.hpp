#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poissonz/liealg.hpp"

namespace poissonz {

enum class PairFamily { AI, AII, AIII, BDI, CII, DBL };

/// Family and parameters of a symmetric pair.
///   AI:n       (sl_n, so_n)
///   AII:n      (sl_2n, sp_2n)
///   AIII:p,q   (sl_{p+q}, s(gl_p + gl_q))
///   BDI:p,q    (so_{p+q}, so_p + so_q)
///   CII:p,q    (sp_{2p+2q}, sp_2p + sp_2q)
///   DIIIodd:n  (so_2n, so_{2n-1}), stored as BDI:2n-1,1
///   DBL:sl2 or DBL:sl:2   (h + h, h) with the factor swap
struct PairSpec {
  PairFamily family = PairFamily::AI;
  std::size_t p = 0;
  std::size_t q = 0;
  ClassicalFactor dbl;  // factor h for DBL
  std::string key;      // canonical key as parsed

  /// The ambient algebra g.
  AlgebraSpec algebra() const;
};

/// Throws Error on malformed or unsupported keys.
PairSpec parse_pair_key(const std::string& key);

/// Embeddings of a standard realization into the current matrices:
/// E(Y) = sum_c embed_c Y project_c. The first copy is used for restriction.
struct Frame {
  std::vector<std::pair<Mat, Mat>> copies;
  Mat embed_matrix(const Mat& y) const;
  Mat restrict_matrix(const Mat& x) const;
};

/// g = g0 + g1 with a sigma-adapted basis: the first n0 basis vectors span g0.
struct SymmetricPair {
  PairSpec spec;
  std::string realization;
  StructureConstants g;
  std::size_t n0 = 0;
  std::vector<int> sigma_signs;
  StructureConstants g0;
  MatrixMap sigma;  // involution on the defining matrices
  std::optional<Frame> g0_frame;
  std::size_t rank_g = 0;
  std::size_t rank_g0 = 0;

  std::size_t dim() const { return g.dim(); }
  std::size_t dim_g0() const { return n0; }
  std::size_t dim_g1() const { return g.dim() - n0; }
  bool in_g0(std::size_t i) const { return i < n0; }
  bool inner() const { return rank_g == rank_g0; }
};

/// Standard-realization ingredients of a pair family.
struct PairBlueprint {
  StructureConstants g;
  MatrixMap sigma;
  std::vector<InvariantRecipe> g0_recipes;
  std::optional<Frame> g0_frame;
  std::string realization;
};

PairBlueprint pair_blueprint(const PairSpec& spec);

/// Builds the sigma-adapted basis and re-verifies: sigma^2 = id, sigma an automorphism,
/// grading relations, kappa(g0, g1) = 0.
SymmetricPair make_symmetric_pair(const PairSpec& spec, const StructureConstants& g, const MatrixMap& sigma,
                                  const std::vector<InvariantRecipe>& g0_recipes, std::optional<Frame> g0_frame,
                                  const std::string& realization);

SymmetricPair build_symmetric_pair(const PairSpec& spec);
SymmetricPair build_symmetric_pair(const std::string& key);

/// Keys of every registered pair, in a fixed order.
std::vector<std::string> registered_pairs();

}  // namespace poissonz
