#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poissonz/liealg.hpp"
#include "poissonz/pairs.hpp"
#include "poissonz/polyring.hpp"

namespace poissonz {

/// Basic invariants H_1..H_l with degrees, sigma-eigenvalues (0 = unset) and g1-degrees (-1 = unset).
struct InvariantSet {
  std::vector<Poly> polys;
  std::vector<unsigned> degrees;
  std::vector<int> eps;
  std::vector<int> g1_degrees;
  std::vector<std::string> names;

  std::size_t size() const { return polys.size(); }
};

/// The polynomial on g* of one recipe, via X(xi) = sum_j (kappa^-1 xi)_j E_j.
Poly recipe_polynomial(const StructureConstants& g, const InvariantRecipe& r);

/// Scales to a primitive integer polynomial with positive leading coefficient.
Poly make_primitive(const Poly& f);

/// Symbolic check that {e_i, F} = 0 for every basis vector; returns the first offender.
std::optional<std::string> centrality_defect(const StructureConstants& g, const Poly& f);

std::size_t jacobian_rank(const std::vector<Poly>& polys, const Vec& xi);
/// Largest Jacobian rank over `trials` random points.
std::size_t max_jacobian_rank(const std::vector<Poly>& polys, std::size_t trials, std::uint64_t seed,
                              long height = kDefaultHeight);

/// Trace/Pfaffian generators; verifies centrality, independence and sum d_j = b(g).
InvariantSet basic_invariants(const StructureConstants& g);

/// sigma acts on S(g) by negating g1 coordinates.
Poly sigma_apply(const Poly& f, std::size_t n0);

/// Fills g1_degrees (and eps where H is already a sigma-eigenvector).
void annotate(InvariantSet& set, const SymmetricPair& pair);

/// Lowers g1-degrees by subtracting polynomials in the other generators
/// (a triangular change of generators); stops when no top component can be cancelled.
InvariantSet ggs_reduce(const InvariantSet& set, const SymmetricPair& pair);

/// Replaces non-eigenvectors by (H + sigma H)/2 or (H - sigma H)/2 according to the parity of d-bullet.
InvariantSet sigma_normalize(const InvariantSet& set, const SymmetricPair& pair);

struct GgsResult {
  int sum_g1_degrees = 0;
  bool is_ggs = false;
  bool top_independent = false;
};
GgsResult ggs_check(const InvariantSet& set, const SymmetricPair& pair, std::uint64_t seed = 1);

/// basic_invariants -> ggs_reduce -> sigma_normalize, then requires a g.g.s.
InvariantSet normalized_invariants(const SymmetricPair& pair);

struct R0Onto {
  bool onto = false;            // computed condition: g0 holds a regular nilpotent of g
  bool listed = false;          // hardcoded classification
  std::size_t centralizer_dim = 0;
  Vec e0;                       // witness nilpotent, coordinates in the pair basis
};
bool listed_r0_onto(const PairSpec& spec);
R0Onto r0_onto_check(const SymmetricPair& pair, std::uint64_t seed = 7);

}  // namespace poissonz
