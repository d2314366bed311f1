#include <sstream>

#include "poissonz/zconstruct.hpp"

namespace poissonz {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Composition: standard matrices of the next level -> top matrices.
Frame compose(const Frame& outer, const Frame& inner) {
  Frame f;
  for (const auto& [p, q] : outer.copies)
    for (const auto& [pi, qi] : inner.copies) f.copies.emplace_back(p * pi, qi * q);
  return f;
}

InvariantRecipe transport(const InvariantRecipe& r, const Frame& f) {
  InvariantRecipe out = r;
  out.embed = f.copies.front().first * r.embed;
  out.project = r.project * f.copies.front().second;
  return out;
}

// The pair `spec` realized on the image of `frame`, checked to sit inside `host`.
SymmetricPair transported_pair(const PairSpec& spec, const Frame& frame, const StructureConstants& host) {
  PairBlueprint bp = pair_blueprint(spec);
  const auto& std_real = *bp.g.realization();
  std::vector<Mat> basis;
  for (const auto& y : std_real.basis) {
    Mat x = frame.embed_matrix(y);
    if (!host.realization()->try_coordinates(x))
      throw Error(spec.key + " does not embed in the previous fixed-point subalgebra");
    basis.push_back(std::move(x));
  }
  std::vector<InvariantRecipe> recipes, g0_recipes;
  for (const auto& r : std_real.invariants) recipes.push_back(transport(r, frame));
  for (const auto& r : bp.g0_recipes) g0_recipes.push_back(transport(r, frame));
  StructureConstants g = algebra_from_matrices(spec.key, host.realization()->n, basis, bp.g.labels(), recipes);
  MatrixMap std_sigma = bp.sigma;
  MatrixMap sigma = [frame, std_sigma](const Mat& x) { return frame.embed_matrix(std_sigma(frame.restrict_matrix(x))); };
  std::optional<Frame> g0_frame;
  if (bp.g0_frame) g0_frame = compose(frame, *bp.g0_frame);
  return make_symmetric_pair(spec, g, sigma, g0_recipes, g0_frame, bp.realization);
}

}  // namespace

std::vector<std::string> parse_chain(const std::string& text) {
  std::vector<std::string> keys;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '>')) {
    part = trim(part);
    if (part.empty()) throw Error("empty level in chain '" + text + "'");
    keys.push_back(part);
  }
  if (keys.empty()) throw Error("empty chain");
  return keys;
}

ChainResult chain_maximal_pc(const std::vector<std::string>& keys) {
  if (keys.empty()) throw Error("empty chain");
  ChainResult res;
  res.levels.push_back(build_symmetric_pair(keys.front()));
  for (std::size_t k = 1; k < keys.size(); ++k) {
    const SymmetricPair& prev = res.levels.back();
    if (!prev.g0_frame)
      throw Error(prev.spec.key + " has no standard frame for its fixed-point subalgebra; it cannot be refined");
    res.levels.push_back(transported_pair(parse_pair_key(keys[k]), *prev.g0_frame, prev.g0));
  }
  const SymmetricPair& top = res.levels.front();
  const auto& top_real = *top.g.realization();
  std::size_t n = top.dim();
  GeneratorFamily& fam = res.family;
  fam.name = "chain";
  fam.ambient_dim = n;
  fam.expected_trdeg = magic_number(n, top.rank_g);

  auto images_of = [&](const StructureConstants& g) {
    std::vector<Poly> images;
    for (const auto& m : g.realization()->basis) images.push_back(Poly::linear(top_real.coordinates(m)));
    return images;
  };

  for (std::size_t k = 0; k < res.levels.size(); ++k) {
    const SymmetricPair& lvl = res.levels[k];
    InvariantSet set = normalized_invariants(lvl);
    GeneratorFamily z = z_generators(lvl, set, false);
    auto images = images_of(lvl.g);
    std::size_t count = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z.provenance[i].bideg.d1 == 0) continue;
      Provenance why = z.provenance[i];
      why.level = k + 1;
      fam.add(z.gens[i].substitute(images), why);
      ++count;
    }
    res.level_counts.push_back(count);
  }
  const SymmetricPair& bottom = res.levels.back();
  for (std::size_t i = 0; i < bottom.n0; ++i)
    for (std::size_t j = i + 1; j < bottom.n0; ++j)
      if (!bottom.g0.bracket(i, j).empty())
        throw Error("the last fixed-point subalgebra " + bottom.g0.name() + " is not abelian");
  auto images = images_of(bottom.g0);
  for (std::size_t i = 0; i < bottom.n0; ++i)
    fam.add(images[i], {Provenance::Kind::Coordinate, i, {}, 0, res.levels.size() + 1});
  res.level_counts.push_back(bottom.n0);
  if (fam.size() != fam.expected_trdeg)
    throw Error("chain gives " + std::to_string(fam.size()) + " generators, expected " +
                std::to_string(fam.expected_trdeg));
  return res;
}

}  // namespace poissonz
