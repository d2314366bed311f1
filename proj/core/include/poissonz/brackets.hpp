#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poissonz/liealg.hpp"
#include "poissonz/pairs.hpp"
#include "poissonz/polyring.hpp"

namespace poissonz {

/// Finite rational t or the point at infinity.
class BracketParam {
 public:
  static BracketParam finite(const Rat& t) { return BracketParam(false, t); }
  static BracketParam infinity() { return BracketParam(true, Rat(0)); }

  bool is_infinite() const { return infinite_; }
  const Rat& value() const;
  std::string to_string() const;
  friend bool operator==(const BracketParam& a, const BracketParam& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  BracketParam(bool inf, Rat v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rat value_;
};

/// Bracket a*[,]_0 + b*[,]_inf; t finite is (1, t), infinity is (0, 1).
struct BracketCombo {
  Rat a;
  Rat b;
  static BracketCombo of(const BracketParam& t);
};

/// Table of [,]_t: g1 x g1 -> g0 scaled by t (dropped for t = 0), everything else
/// dropped at t = infinity.
StructureConstants structure_constants_t(const SymmetricPair& pair, const BracketParam& t);
StructureConstants structure_constants_combo(const SymmetricPair& pair, const BracketCombo& c);

struct JacobiReport {
  bool pass = true;
  std::vector<std::string> checked;   // one entry per bracket
  std::optional<std::string> failure;  // first failing triple with defect
};

JacobiReport jacobi_compatibility_check(const SymmetricPair& pair, const std::vector<BracketParam>& params,
                                        const std::vector<std::pair<Rat, Rat>>& combos);

/// {F, G} for the linear Poisson structure of g.
Poly poisson_bracket(const StructureConstants& g, const Poly& f, const Poly& h);
Poly poisson_bracket_poly(const SymmetricPair& pair, const Poly& f, const Poly& h, const BracketParam& t);

struct TensorAt {
  Vec point;
  BracketParam t = BracketParam::finite(1);
  Mat matrix;
};
TensorAt tensor_at(const SymmetricPair& pair, const Vec& xi, const BracketParam& t);

/// Scales every monomial by s^(g1-degree).
Poly phi_s_map(const Poly& f, const Rat& s, const SymmetricPair& pair);

struct RestrictedRank {
  std::size_t rank_inf = 0;
  std::size_t dim_ker_inf = 0;
  std::size_t rank0_on_ker = 0;
  bool passes = false;
};
RestrictedRank restricted_rank_condition(const SymmetricPair& pair, const Vec& xi);

}  // namespace poissonz
