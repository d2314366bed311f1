#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poissonz/brackets.hpp"
#include "poissonz/invariants.hpp"
#include "poissonz/pairs.hpp"
#include "poissonz/polyring.hpp"
#include "poissonz/report.hpp"

namespace poissonz {

/// Where a generator came from.
struct Provenance {
  enum class Kind { Component, G0Invariant, Shift, Coordinate };
  Kind kind = Kind::Component;
  std::size_t source = 0;  // invariant index, g0-invariant index or coordinate index
  BiDegree bideg;          // Component only
  unsigned order = 0;      // Shift only
  std::size_t level = 0;   // chain level, 0 otherwise
  std::string describe() const;
};

struct GeneratorFamily {
  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<Poly> gens;
  std::vector<Provenance> provenance;
  std::size_t expected_trdeg = 0;
  bool g0_invariant = false;  // the family lies in S(g)^{g0}

  void add(Poly p, Provenance why);
  std::size_t size() const { return gens.size(); }
  std::vector<int> degrees() const;
};

enum class Mode { Symbolic, Sampled };
const char* to_string(Mode m);

struct VerifyOptions {
  Mode mode = Mode::Symbolic;
  std::uint64_t seed = 1;
  std::size_t samples = 5;
  long height = kDefaultHeight;
};

/// Symbolic up to dim 15, sampled above.
Mode default_mode(const SymmetricPair& pair);

/// (dim + rank) / 2; throws when odd.
std::size_t magic_number(std::size_t dim, std::size_t rank);
/// (dim g1 + rk g + rk g0) / 2; throws when odd.
std::size_t expected_trdeg_z(const SymmetricPair& pair);

/// The pairs (sl2, torus): every realization with dim g = 3 and rk g = rk g0 = 1.
bool is_sl2_pair(const SymmetricPair& pair);

/// All nonzero bi-homogeneous components; checks the parity pattern and the count.
/// For the sl2 pairs the (2,0) component h^2 is replaced by h unless sl2_special is false.
GeneratorFamily z_generators(const SymmetricPair& pair, const InvariantSet& set, bool sl2_special = true);
/// Drops the rk g0 components of g1-degree 0 and appends the basic g0-invariants.
GeneratorFamily ztilde_generators(const SymmetricPair& pair, const InvariantSet& set);
/// Top components H_j^bullet, generators of the centre of the contraction.
GeneratorFamily z_zero_generators(const SymmetricPair& pair, const InvariantSet& set);
/// g0 coordinates plus (H_j)_(d_j - 1, 1) for eps_j = -1; verified commuting under {,}_inf and independent.
GeneratorFamily z_infty_generators(const SymmetricPair& pair, const InvariantSet& set);
/// d_gamma^k H_j for 0 <= k < d_j; gamma must be regular.
GeneratorFamily mf_generators(const StructureConstants& g, const Vec& gamma, const InvariantSet& set);

/// {F,G}_0 = {F,G}_inf = 0 for all pairs and {x0, F} = 0 for g0 basis vectors.
VerificationReport verify_commutativity(const GeneratorFamily& fam, const SymmetricPair& pair,
                                        const VerifyOptions& opt);
/// {F,G} = 0 for the Lie-Poisson bracket of g.
VerificationReport verify_lie_poisson(const GeneratorFamily& fam, const StructureConstants& g,
                                      const VerifyOptions& opt, const std::string& label = {});
/// Jacobian rank equals |fam| and expected_trdeg; for g0-invariant families also the upper bound
/// b(g) - b(g0) + ind g0.
VerificationReport verify_trdeg_freeness(const GeneratorFamily& fam, const SymmetricPair* pair, std::size_t trials,
                                         std::uint64_t seed);

/// Sampled ind g_(t) = rk g for t in {0, 1, 7} and ind g_(inf) = dim g0 + rk g - rk g0.
VerificationReport index_formulas(const SymmetricPair& pair, std::size_t samples, std::uint64_t seed);

struct CartanSubspace {
  std::vector<Vec> basis;  // in g coordinates, inside g1
  std::vector<Vec> levi;   // centralizer of the subspace in g0, g coordinates
  std::size_t rank_levi = 0;
};
/// Centralizer in g1 of a random semisimple element of g1, with rk l = rk g - dim c1 asserted.
CartanSubspace cartan_subspace(const SymmetricPair& pair, std::uint64_t seed);

/// Structure constants of span(basis) in g; throws when the span is not closed.
StructureConstants subalgebra(const StructureConstants& g, const std::vector<Vec>& basis, const std::string& name);

/// Semisimplicity of a matrix through its square-free characteristic polynomial.
bool is_semisimple(const StructureConstants& g, const Vec& x);

struct ManakovResult {
  VerificationReport report;
  Vec eta;  // g1* coordinates
  std::vector<Poly> restricted;
  std::size_t expected_trdeg = 0;
  std::size_t rank = 0;
};
/// Restricts the family to g0* + eta for eta generic in c1 (resampled up to 10 times).
ManakovResult manakov_restrict(const GeneratorFamily& fam, const SymmetricPair& pair, const CartanSubspace& c1,
                               const VerifyOptions& opt);
/// Same at a prescribed eta (g1* coordinates); no resampling.
ManakovResult manakov_restrict_at(const GeneratorFamily& fam, const SymmetricPair& pair, const Vec& eta,
                                  const CartanSubspace& c1, const VerifyOptions& opt);

struct SumRegData {
  bool generic = false;  // conditions (1) and (2) hold at xi
  std::size_t rank_inf = 0;
  std::size_t dim_L = 0;
  std::size_t dim_cap = 0;  // dim (L meet ker pi_inf)
  std::size_t dim_dz = 0;   // span of generator differentials at xi
  std::vector<Vec> L;
};
SumRegData sum_of_kernels(const SymmetricPair& pair, const Vec& xi, const GeneratorFamily* zfam);
VerificationReport lemma_sum_reg_verify(const SymmetricPair& pair, const Vec& xi, const GeneratorFamily* zfam);

struct ChainResult {
  GeneratorFamily family;  // on the top algebra
  std::vector<SymmetricPair> levels;
  std::vector<std::size_t> level_counts;  // generators contributed per level, bottom last
};
std::vector<std::string> parse_chain(const std::string& text);
/// Keys joined by '>', each level a symmetric pair on the previous g0.
ChainResult chain_maximal_pc(const std::vector<std::string>& keys);

}  // namespace poissonz
