#include "poissonz/pairs.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace poissonz {

namespace {

std::size_t parse_count(const std::string& s, const std::string& key) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw Error("malformed pair key '" + key + "'");
  std::size_t v = std::stoul(s);
  if (v == 0) throw Error("pair parameters must be positive in '" + key + "'");
  return v;
}

std::pair<std::size_t, std::size_t> parse_two(const std::string& s, const std::string& key) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error("malformed pair key '" + key + "'");
  return {parse_count(s.substr(0, comma), key), parse_count(s.substr(comma + 1), key)};
}

Mat conj(const Mat& s, const Mat& sinv, const Mat& x) { return s * x * sinv; }

Mat column_matrix(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Orthogonal-type splitting V = V+ + V- of the split form of size p+q used by BDI.
struct Splitting {
  Mat s;
  Mat plus, plus_proj, minus, minus_proj;
};

// Outer pairs go to V+, inner pairs to V-. When p and q are both odd the innermost
// pair is split by the monomial involution e_a -> e_b / 2, e_b -> 2 e_a, whose
// eigenvectors e_a + e_b / 2 and e_a - e_b / 2 have norms +1 and -1.
Splitting orthogonal_splitting(std::size_t p, std::size_t q, bool symplectic) {
  std::size_t n = p + q;
  std::vector<int> side(n, 0);  // +1, -1, or 0 for the swapped pair
  std::size_t pairs = n / 2;
  std::size_t plus_pairs, minus_pairs;
  bool swap = false;
  if (symplectic) {
    plus_pairs = p / 2;
    minus_pairs = q / 2;
  } else if (n % 2 == 1) {
    plus_pairs = p / 2;
    minus_pairs = q / 2;
    side[n / 2] = (p % 2 == 1) ? 1 : -1;
  } else if (p % 2 == 0) {
    plus_pairs = p / 2;
    minus_pairs = q / 2;
  } else {
    swap = true;
    plus_pairs = (p - 1) / 2;
    minus_pairs = (q - 1) / 2;
  }
  if (plus_pairs + minus_pairs + (swap ? 1 : 0) != pairs) throw Error("inconsistent splitting");
  for (std::size_t k = 0; k < pairs; ++k) {
    int v = k < plus_pairs ? 1 : (k < plus_pairs + minus_pairs ? -1 : 0);
    side[k] = v;
    side[n - 1 - k] = v;
  }
  Mat s(n, n);
  Rat c(1, 2);
  std::vector<Vec> plus, minus;
  std::size_t a = n / 2 - 1, b = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (swap && (i == a || i == b)) {
      if (i == a) {
        Vec v = unit_vec(n, a), w = unit_vec(n, a);
        v[b] = c;
        w[b] = -c;
        plus.push_back(v);
        minus.push_back(w);
      }
      continue;
    }
    s(i, i) = side[i];
    (side[i] > 0 ? plus : minus).push_back(unit_vec(n, i));
  }
  if (swap) {
    s(b, a) = c;
    s(a, b) = 1 / c;
  }
  Splitting out;
  out.s = s;
  out.plus = column_matrix(n, plus);
  out.minus = column_matrix(n, minus);
  std::vector<Vec> all = plus;
  all.insert(all.end(), minus.begin(), minus.end());
  Mat inv = inverse(column_matrix(n, all));
  std::vector<std::size_t> prow, mrow, allc(n);
  for (std::size_t i = 0; i < n; ++i) allc[i] = i;
  for (std::size_t i = 0; i < plus.size(); ++i) prow.push_back(i);
  for (std::size_t i = plus.size(); i < n; ++i) mrow.push_back(i);
  out.plus_proj = inv.submatrix(prow, allc);
  out.minus_proj = inv.submatrix(mrow, allc);
  return out;
}

std::string sign_label(const std::string& base, int sign) { return base + (sign > 0 ? "+" : "-"); }

}  // namespace

Mat Frame::embed_matrix(const Mat& y) const {
  Mat out;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    Mat term = copies[c].first * y * copies[c].second;
    out = c == 0 ? term : out + term;
  }
  return out;
}

Mat Frame::restrict_matrix(const Mat& x) const { return copies.front().second * x * copies.front().first; }

AlgebraSpec PairSpec::algebra() const {
  AlgebraSpec a;
  switch (family) {
    case PairFamily::AI: a.factors = {{'A', p}}; break;
    case PairFamily::AII: a.factors = {{'A', 2 * p}}; break;
    case PairFamily::AIII: a.factors = {{'A', p + q}}; break;
    case PairFamily::BDI: a.factors = {{'O', p + q}}; break;
    case PairFamily::CII: a.factors = {{'C', 2 * (p + q)}}; break;
    case PairFamily::DBL: a.factors = {dbl, dbl}; break;
  }
  return a;
}

PairSpec parse_pair_key(const std::string& key) {
  auto colon = key.find(':');
  if (colon == std::string::npos) throw Error("malformed pair key '" + key + "'");
  std::string fam = key.substr(0, colon);
  std::string rest = key.substr(colon + 1);
  PairSpec s;
  s.key = key;
  if (fam == "AI") {
    s.family = PairFamily::AI;
    s.p = parse_count(rest, key);
    if (s.p < 2) throw Error("AI needs n >= 2 in '" + key + "'");
  } else if (fam == "AII") {
    s.family = PairFamily::AII;
    s.p = parse_count(rest, key);
    if (s.p < 2) throw Error("AII needs n >= 2 in '" + key + "'");
  } else if (fam == "AIII") {
    s.family = PairFamily::AIII;
    std::tie(s.p, s.q) = parse_two(rest, key);
  } else if (fam == "BDI") {
    s.family = PairFamily::BDI;
    std::tie(s.p, s.q) = parse_two(rest, key);
    if (s.p + s.q < 3) throw Error("BDI needs p+q >= 3 in '" + key + "'");
  } else if (fam == "CII") {
    s.family = PairFamily::CII;
    std::tie(s.p, s.q) = parse_two(rest, key);
  } else if (fam == "DIIIodd") {
    std::size_t n = parse_count(rest, key);
    if (n < 2) throw Error("DIIIodd needs n >= 2 in '" + key + "'");
    s.family = PairFamily::BDI;
    s.p = 2 * n - 1;
    s.q = 1;
  } else if (fam == "DBL") {
    s.family = PairFamily::DBL;
    std::string type = rest;
    auto c2 = rest.find(':');
    if (c2 != std::string::npos) type = rest.substr(0, c2) + rest.substr(c2 + 1);
    AlgebraSpec h;
    try {
      h = parse_algebra(type);
    } catch (const Error&) {
      throw Error("malformed pair key '" + key + "'");
    }
    if (h.factors.size() != 1) throw Error("DBL needs a single factor in '" + key + "'");
    s.dbl = h.factors[0];
    bool simple = (s.dbl.family == 'A') || (s.dbl.family == 'C') || (s.dbl.family == 'O' && s.dbl.n >= 5) ||
                  (s.dbl.family == 'O' && s.dbl.n == 3);
    if (!simple) throw Error("DBL needs a simple factor in '" + key + "'");
  } else {
    throw Error("unknown pair family in '" + key + "'");
  }
  return s;
}

PairBlueprint pair_blueprint(const PairSpec& spec) {
  PairBlueprint bp;
  bp.g = build_algebra(spec.algebra());
  std::size_t n = bp.g.realization()->n;
  Mat id = Mat::identity(n);
  switch (spec.family) {
    case PairFamily::AI:
    case PairFamily::AII: {
      bool orth = spec.family == PairFamily::AI;
      Mat gram = orth ? split_orthogonal_gram(n) : split_symplectic_gram(n);
      Mat ginv = inverse(gram);
      bp.sigma = [gram, ginv](const Mat& x) { return Rat(-1) * (ginv * x.transpose() * gram); };
      bp.g0_recipes = factor_recipes({orth ? 'O' : 'C', n}, id, id, gram);
      bp.g0_frame = Frame{{{id, id}}};
      bp.realization = orth ? "sigma(X) = -J X^T J, J antidiagonal" : "sigma(X) = -W^-1 X^T W, W split symplectic";
      break;
    }
    case PairFamily::AIII: {
      Mat s = id;
      for (std::size_t i = spec.p; i < n; ++i) s(i, i) = -1;
      bp.sigma = [s](const Mat& x) { return s * x * s; };
      Mat plus(n, spec.p), minus(n, spec.q);
      for (std::size_t i = 0; i < spec.p; ++i) plus(i, i) = 1;
      for (std::size_t i = 0; i < spec.q; ++i) minus(spec.p + i, i) = 1;
      for (unsigned k = 1; k <= spec.p; ++k) {
        InvariantRecipe r;
        r.power = k;
        r.embed = plus;
        r.project = plus.transpose();
        bp.g0_recipes.push_back(r);
      }
      for (unsigned k = 2; k <= spec.q; ++k) {
        InvariantRecipe r;
        r.power = k;
        r.embed = minus;
        r.project = minus.transpose();
        bp.g0_recipes.push_back(r);
      }
      bp.realization = "sigma = Ad diag(1^p, (-1)^q)";
      break;
    }
    case PairFamily::BDI:
    case PairFamily::CII: {
      bool orth = spec.family == PairFamily::BDI;
      std::size_t dp = orth ? spec.p : 2 * spec.p, dq = orth ? spec.q : 2 * spec.q;
      Splitting sp = orthogonal_splitting(dp, dq, !orth);
      Mat gram = orth ? split_orthogonal_gram(n) : split_symplectic_gram(n);
      Mat s = sp.s, sinv = inverse(sp.s);
      bp.sigma = [s, sinv](const Mat& x) { return conj(s, sinv, x); };
      Mat gp = sp.plus.transpose() * gram * sp.plus;
      Mat gm = sp.minus.transpose() * gram * sp.minus;
      char fam = orth ? 'O' : 'C';
      auto add = [&](std::size_t d, const Mat& e, const Mat& pr, const Mat& g) {
        if (d < 2) return;
        auto r = factor_recipes({fam, d}, e, pr, g);
        bp.g0_recipes.insert(bp.g0_recipes.end(), r.begin(), r.end());
      };
      add(dp, sp.plus, sp.plus_proj, gp);
      add(dq, sp.minus, sp.minus_proj, gm);
      if (orth && dp >= 2 && dq <= 1) bp.g0_frame = Frame{{{sp.plus, sp.plus_proj}}};
      else if (orth && dq >= 2 && dp <= 1) bp.g0_frame = Frame{{{sp.minus, sp.minus_proj}}};
      bp.realization = orth ? "sigma = Ad s, s diagonal signs on split orthogonal form"
                            : "sigma = Ad s, s diagonal signs on split symplectic form";
      break;
    }
    case PairFamily::DBL: {
      std::size_t h = spec.dbl.n;
      Mat swap(n, n), p1(n, h), p2(n, h);
      for (std::size_t i = 0; i < h; ++i) {
        swap(i, h + i) = 1;
        swap(h + i, i) = 1;
        p1(i, i) = 1;
        p2(h + i, i) = 1;
      }
      bp.sigma = [swap](const Mat& x) { return swap * x * swap; };
      Mat gram;
      if (spec.dbl.family == 'O') gram = split_orthogonal_gram(h);
      if (spec.dbl.family == 'C') gram = split_symplectic_gram(h);
      bp.g0_recipes = factor_recipes(spec.dbl, p1, p1.transpose(), gram);
      bp.g0_frame = Frame{{{p1, p1.transpose()}, {p2, p2.transpose()}}};
      bp.realization = "sigma swaps the two diagonal blocks";
      break;
    }
  }
  return bp;
}

SymmetricPair make_symmetric_pair(const PairSpec& spec, const StructureConstants& g, const MatrixMap& sigma,
                                  const std::vector<InvariantRecipe>& g0_recipes, std::optional<Frame> g0_frame,
                                  const std::string& realization) {
  const auto& real = *g.realization();
  std::size_t n = real.n;
  std::vector<Mat> cand[2];
  std::vector<std::string> cand_labels[2];
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Mat& b = real.basis[i];
    Mat s = sigma(b);
    if (!real.try_coordinates(s)) throw Error(spec.key + ": sigma does not preserve g");
    if (!(sigma(s) == b)) throw Error(spec.key + ": sigma is not an involution");
    for (int part = 0; part < 2; ++part) {
      Mat p = part == 0 ? b + s : b - s;
      if (p.is_zero()) continue;
      // Normalise at the leading entry of the source matrix.
      std::size_t lr = 0, lc = 0;
      bool found = false;
      for (std::size_t r = 0; r < n && !found; ++r)
        for (std::size_t c = 0; c < n && !found; ++c)
          if (sgn(b(r, c)) != 0) {
            lr = r;
            lc = c;
            found = true;
          }
      Rat scale = sgn(p(lr, lc)) != 0 ? Rat(b(lr, lc) / p(lr, lc)) : Rat(1, 2);
      p = scale * p;
      std::string label = p == b ? g.labels()[i] : sign_label(g.labels()[i], part == 0 ? 1 : -1);
      cand[part].push_back(p);
      cand_labels[part].push_back(label);
    }
  }
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  std::size_t n0 = 0;
  SpanTracker span(g.dim());
  for (int part = 0; part < 2; ++part)
    for (std::size_t i = 0; i < cand[part].size(); ++i) {
      if (!span.add(real.coordinates(cand[part][i]))) continue;
      basis.push_back(cand[part][i]);
      labels.push_back(cand_labels[part][i]);
      if (part == 0) ++n0;
    }
  if (basis.size() != g.dim()) throw Error(spec.key + ": eigenspaces do not span g");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!seen.insert(labels[i]).second) labels[i] += "#" + std::to_string(i);

  SymmetricPair pr;
  pr.spec = spec;
  pr.realization = realization;
  pr.g = algebra_from_matrices(spec.key, n, basis, labels, real.invariants);
  pr.n0 = n0;
  pr.sigma = sigma;
  pr.g0_frame = std::move(g0_frame);
  pr.sigma_signs.assign(g.dim(), -1);
  for (std::size_t i = 0; i < n0; ++i) pr.sigma_signs[i] = 1;
  // sigma acts by signs, so automorphism and grading both reduce to s_i s_j = s_k.
  for (std::size_t i = 0; i < pr.dim(); ++i)
    for (std::size_t j = 0; j < pr.dim(); ++j)
      for (const auto& [k, c] : pr.g.bracket(i, j))
        if (pr.sigma_signs[i] * pr.sigma_signs[j] != pr.sigma_signs[k])
          throw Error(spec.key + ": grading violated by [" + labels[i] + "," + labels[j] + "]");
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = n0; j < pr.dim(); ++j)
      if (sgn(pr.g.trace_form()(i, j)) != 0) throw Error(spec.key + ": kappa(g0, g1) is not zero");
  std::vector<Mat> b0(basis.begin(), basis.begin() + static_cast<long>(n0));
  std::vector<std::string> l0(labels.begin(), labels.begin() + static_cast<long>(n0));
  pr.g0 = algebra_from_matrices(spec.key + "/g0", n, b0, l0, g0_recipes);
  pr.rank_g = pr.g.rank();
  pr.rank_g0 = pr.g0.rank();
  return pr;
}

SymmetricPair build_symmetric_pair(const PairSpec& spec) {
  PairBlueprint bp = pair_blueprint(spec);
  return make_symmetric_pair(spec, bp.g, bp.sigma, bp.g0_recipes, bp.g0_frame, bp.realization);
}

SymmetricPair build_symmetric_pair(const std::string& key) { return build_symmetric_pair(parse_pair_key(key)); }

std::vector<std::string> registered_pairs() {
  return {"AI:2",     "AI:3",     "AI:4",     "AI:5",    "AII:2",   "AII:3",   "AIII:1,1", "AIII:1,2",
          "AIII:1,3", "AIII:2,2", "AIII:2,3", "BDI:2,1", "BDI:3,1", "BDI:2,2", "BDI:4,1",  "BDI:3,2",
          "BDI:5,1",  "BDI:4,2",  "BDI:3,3",  "BDI:6,1", "BDI:5,2", "BDI:4,3", "CII:1,1",  "CII:2,1",
          "CII:1,2",  "DBL:sl2",  "DBL:sl3",  "DBL:so5", "DBL:sp4"};
}

}  // namespace poissonz
