#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poissonz/invariants.hpp"
#include "poissonz/pairs.hpp"
#include "poissonz/report.hpp"

namespace poissonz {

using Covector = std::map<std::vector<std::size_t>, Rat>;  // index subset -> coefficient, zeros omitted

/// Both sides of a wedge identity at one point.
struct WedgeEval {
  Vec point;
  Covector left;   // (wedge of differentials) / omega
  Covector right;  // sub-Pfaffian products
  Rat scalar;      // left = scalar * right when pass
  bool pass = false;
  std::string witness;
};

enum class KostantVariant { Full, Inner, Outer };
const char* to_string(KostantVariant v);

/// Coefficients of (r_1 ^ ... ^ r_k) / omega on e_J, |J| = n - k: the signed complementary minors.
Covector wedge_over_volume(const std::vector<Vec>& rows, std::size_t n);
/// k x k minors of the rows restricted to the first `n` coordinates.
Covector wedge_minors(const std::vector<Vec>& rows, std::size_t n);
/// Fits left = c * right at the first nonzero entry of right and checks every entry.
WedgeEval compare_wedges(Covector left, Covector right);

/// dH_1 ^ ... ^ dH_l / omega against the top wedge power of pi.
WedgeEval kostant_full_at(const StructureConstants& g, const InvariantSet& set, const Vec& xi);
/// Full identity on g, or the inner/outer refinement through the g0 and g1 blocks.
WedgeEval kostant_identity_at(const SymmetricPair& pair, const InvariantSet& set, const Vec& xi, KostantVariant v);

/// Evaluates at `samples` random points and requires one scalar for all of them.
VerificationReport kostant_full_check(const StructureConstants& g, const InvariantSet& set, std::size_t samples,
                                      std::uint64_t seed);
VerificationReport kostant_identity_check(const SymmetricPair& pair, const InvariantSet& set, KostantVariant v,
                                          std::size_t samples, std::uint64_t seed);

/// Inner involutions: d(H_j)_(d_j,0) wedge = F * wedge of dH~_j on g0, with F fitted per point and compared
/// with Pf(pi_inf | g1) and, squared, with det(ad x0 | g1).
struct FactorSamples {
  VerificationReport report;
  std::vector<Vec> points;        // xi0 in g* coordinates, g1 part zero
  std::vector<Rat> factor;        // fitted F or Q
  std::vector<Rat> reference;     // Pf(pi_inf | g1) or the g0 Pfaffian; empty when not applicable
};
FactorSamples det_ad_factor_check(const SymmetricPair& pair, const InvariantSet& set, std::size_t samples,
                                  std::uint64_t seed);

/// Outer involutions: the k eps = +1 generators give d(H_j)_(d_j,0) wedge = Q * wedge of dH~_j on g0.
/// Q must lie in the span of g0-invariant monomials of the expected degree; it is also compared with the
/// g0 Pfaffian when that has the same degree, and required constant when r0 is onto.
FactorSamples q_factor_check(const SymmetricPair& pair, const InvariantSet& set, std::size_t samples,
                             std::uint64_t seed);

}  // namespace poissonz
