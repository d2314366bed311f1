#include "poissonz/brackets.hpp"

namespace poissonz {

const Rat& BracketParam::value() const {
  if (infinite_) throw Error("infinite bracket parameter has no value");
  return value_;
}

std::string BracketParam::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

BracketCombo BracketCombo::of(const BracketParam& t) {
  if (t.is_infinite()) return {Rat(0), Rat(1)};
  return {Rat(1), t.value()};
}

StructureConstants structure_constants_combo(const SymmetricPair& pair, const BracketCombo& c) {
  const auto& g = pair.g;
  std::size_t n = g.dim();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& f = (!pair.in_g0(i) && !pair.in_g0(j)) ? c.b : c.a;
      if (sgn(f) == 0) continue;
      for (const auto& [k, v] : g.bracket(i, j)) table[i * n + j].emplace_back(k, f * v);
    }
  StructureConstants out(g.name(), g.labels(), std::move(table), g.trace_form());
  return out;
}

StructureConstants structure_constants_t(const SymmetricPair& pair, const BracketParam& t) {
  return structure_constants_combo(pair, BracketCombo::of(t));
}

JacobiReport jacobi_compatibility_check(const SymmetricPair& pair, const std::vector<BracketParam>& params,
                                        const std::vector<std::pair<Rat, Rat>>& combos) {
  JacobiReport rep;
  auto run = [&](const StructureConstants& table, const std::string& name) {
    rep.checked.push_back(name);
    if (rep.failure) return;
    if (auto e = table.jacobi_defect()) {
      rep.pass = false;
      rep.failure = name + ": " + *e;
    }
  };
  for (const auto& t : params) run(structure_constants_t(pair, t), "t=" + t.to_string());
  for (const auto& [a, b] : combos)
    run(structure_constants_combo(pair, {a, b}), a.get_str() + "*{,}_0 + " + b.get_str() + "*{,}_inf");
  return rep;
}

Poly poisson_bracket(const StructureConstants& g, const Poly& f, const Poly& h) {
  std::size_t n = g.dim();
  if (f.ambient_dim() != n || h.ambient_dim() != n) throw Error("bracket operands do not live on this algebra");
  Poly acc(n);
  if (f.is_zero() || h.is_zero()) return acc;
  std::vector<Poly> dh(n);
  for (std::size_t j = 0; j < n; ++j) dh[j] = h.derivative(j);
  for (std::size_t i = 0; i < n; ++i) {
    Poly dfi = f.derivative(i);
    if (dfi.is_zero()) continue;
    // {e_i, H} = sum_j dH/de_j [e_i, e_j]
    Poly ei_h(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (dh[j].is_zero() || g.bracket(i, j).empty()) continue;
      Vec lam(n);
      for (const auto& [k, c] : g.bracket(i, j)) lam[k] = c;
      ei_h += Poly::linear(lam) * dh[j];
    }
    if (!ei_h.is_zero()) acc += dfi * ei_h;
  }
  return acc;
}

Poly poisson_bracket_poly(const SymmetricPair& pair, const Poly& f, const Poly& h, const BracketParam& t) {
  return poisson_bracket(structure_constants_t(pair, t), f, h);
}

TensorAt tensor_at(const SymmetricPair& pair, const Vec& xi, const BracketParam& t) {
  return {xi, t, structure_constants_t(pair, t).form_at(xi)};
}

Poly phi_s_map(const Poly& f, const Rat& s, const SymmetricPair& pair) {
  if (sgn(s) == 0) throw Error("phi_s needs s != 0; use the top bi-homogeneous component instead");
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    Rat v = c;
    unsigned d1 = bidegree(m, pair.n0, f.ambient_dim()).d1;
    for (unsigned k = 0; k < d1; ++k) v *= s;
    out.emplace_back(m, v);
  }
  return Poly::from_terms(f.ambient_dim(), std::move(out));
}

RestrictedRank restricted_rank_condition(const SymmetricPair& pair, const Vec& xi) {
  Mat pinf = tensor_at(pair, xi, BracketParam::infinity()).matrix;
  Mat p0 = tensor_at(pair, xi, BracketParam::finite(0)).matrix;
  RankKernel rk = rank_kernel(pinf);
  RestrictedRank r;
  r.rank_inf = rk.rank;
  r.dim_ker_inf = rk.kernel.size();
  r.rank0_on_ker = rk.kernel.empty() ? 0 : rank(restrict_form(p0, rk.kernel));
  r.passes = r.dim_ker_inf >= pair.rank_g && r.rank0_on_ker == r.dim_ker_inf - pair.rank_g;
  return r;
}

}  // namespace poissonz
