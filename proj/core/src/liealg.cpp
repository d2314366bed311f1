#include "poissonz/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace poissonz {

namespace {

constexpr std::uint64_t kConstructionSeed = 0x5eed0001ULL;

Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

std::string index_label(const std::string& head, std::size_t n, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << head << (i + 1);
  if (n >= 10) os << ',';
  os << (j + 1);
  return os.str();
}

void add_sparse(SparseVec& acc, std::size_t k, const Rat& c) {
  if (sgn(c) == 0) return;
  for (auto& [idx, val] : acc)
    if (idx == k) {
      val += c;
      return;
    }
  acc.emplace_back(k, c);
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) s.emplace_back(k, v[k]);
  return s;
}

// Matrices X with X^T G + G X = 0, enumerated from matrix units in the order
// upper triangle, diagonal, lower triangle.
void form_algebra_basis(std::size_t n, const Mat& gram, std::vector<Mat>& basis, std::vector<std::string>& labels) {
  Mat ginv = inverse(gram);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) order.emplace_back(i, j);
  for (std::size_t i = 0; i < n; ++i) order.emplace_back(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) order.emplace_back(i, j);
  SpanTracker span(n * n);
  for (auto [i, j] : order) {
    Mat e = unit(n, i, j);
    Mat theta = Rat(-1) * (ginv * e.transpose() * gram);
    Mat p = e + theta;
    if (p.is_zero()) continue;
    Rat scale = sgn(p(i, j)) != 0 ? Rat(1 / p(i, j)) : Rat(1);
    p = scale * p;
    Vec flat;
    flat.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) flat.push_back(p(a, b));
    if (!span.add(flat)) continue;
    basis.push_back(p);
    labels.push_back(i == j ? "H" + std::to_string(i + 1) : index_label("E", n, i, j));
  }
}

void special_linear_basis(std::size_t n, std::vector<Mat>& basis, std::vector<std::string>& labels) {
  if (n == 2) {
    basis = {unit(2, 0, 1), unit(2, 0, 0) - unit(2, 1, 1), unit(2, 1, 0)};
    labels = {"e", "h", "f"};
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(unit(n, i, j));
      labels.push_back(index_label("E", n, i, j));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      basis.push_back(unit(n, i, j));
      labels.push_back(index_label("E", n, i, j));
    }
}

}  // namespace

unsigned InvariantRecipe::degree() const {
  if (kind == Kind::Trace) return power;
  return static_cast<unsigned>(embed.cols() / 2);
}

std::string InvariantRecipe::describe() const {
  std::ostringstream os;
  if (kind == Kind::Trace) os << "tr X^" << power;
  else os << "Pf(S X)";
  os << " on a " << embed.cols() << "-dim block";
  return os.str();
}

MatrixRealization::MatrixRealization(std::size_t size, std::vector<Mat> mats, std::vector<InvariantRecipe> recipes)
    : n(size), basis(std::move(mats)), invariants(std::move(recipes)) {
  std::size_t d = basis.size();
  SpanTracker cols(d);
  // Choose matrix positions whose entries determine the coordinates.
  for (std::size_t a = 0; a < n && pivots_.size() < d; ++a)
    for (std::size_t b = 0; b < n && pivots_.size() < d; ++b) {
      Vec column(d);
      for (std::size_t i = 0; i < d; ++i) column[i] = basis[i](a, b);
      if (cols.add(column)) pivots_.emplace_back(a, b);
    }
  if (pivots_.size() != d) throw Error("realization basis is linearly dependent");
  Mat s(d, d);  // s(p, i) = basis_i at pivot p
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t i = 0; i < d; ++i) s(p, i) = basis[i](pivots_[p].first, pivots_[p].second);
  solve_ = inverse(s);
}

std::optional<Vec> MatrixRealization::try_coordinates(const Mat& x) const {
  std::size_t d = basis.size();
  Vec rhs(d);
  for (std::size_t p = 0; p < d; ++p) rhs[p] = x(pivots_[p].first, pivots_[p].second);
  Vec c = solve_ * rhs;
  if (!(element(c) == x)) return std::nullopt;
  return c;
}

Vec MatrixRealization::coordinates(const Mat& x) const {
  auto c = try_coordinates(x);
  if (!c) throw Error("matrix lies outside the realized algebra");
  return *c;
}

Mat MatrixRealization::element(const Vec& coords) const {
  Mat x(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coords[i]) != 0) x = x + coords[i] * basis[i];
  return x;
}

StructureConstants::StructureConstants(std::string name, std::vector<std::string> labels, std::vector<SparseVec> table,
                                       Mat trace_form)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)), trace_form_(std::move(trace_form)) {
  if (table_.size() != dim() * dim()) throw Error("structure constant table has the wrong size");
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat f = x[i] * y[j];
      for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
    }
  }
  return out;
}

Mat StructureConstants::ad(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : bracket(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

Mat StructureConstants::form_at(const Vec& xi) const {
  if (xi.size() != dim()) throw Error("point has the wrong dimension");
  Mat m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      Rat s = 0;
      for (const auto& [k, c] : bracket(i, j)) s += c * xi[k];
      m(i, j) = s;
      m(j, i) = -s;
    }
  return m;
}

Vec StructureConstants::element_to_point(const Vec& x) const { return trace_form_ * x; }

Vec StructureConstants::point_to_element(const Vec& xi) const { return inverse(trace_form_) * xi; }

std::optional<std::string> StructureConstants::antisymmetry_defect() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      Vec a(dim()), b(dim());
      for (const auto& [k, c] : bracket(i, j)) a[k] += c;
      for (const auto& [k, c] : bracket(j, i)) b[k] -= c;
      if (a != b) return "antisymmetry fails at (" + labels_[i] + "," + labels_[j] + ")";
    }
  return std::nullopt;
}

std::optional<std::string> StructureConstants::jacobi_defect() const {
  std::size_t n = dim();
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, Vec& acc) {
    for (const auto& [k, x] : bracket(a, b))
      for (const auto& [m, y] : bracket(k, c)) acc[m] += x * y;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec acc(n);
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!is_zero(acc))
          return "Jacobi fails on (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")";
      }
  return std::nullopt;
}

std::optional<std::string> StructureConstants::trace_form_defect() const {
  std::size_t n = dim();
  if (trace_form_.rows() != n || trace_form_.cols() != n) return "trace form has the wrong shape";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rat s = 0;
        for (const auto& [k, c] : bracket(x, y)) s += c * trace_form_(k, z);
        for (const auto& [k, c] : bracket(x, z)) s += c * trace_form_(y, k);
        if (sgn(s) != 0) return "trace form not invariant on (" + labels_[x] + "," + labels_[y] + "," + labels_[z] + ")";
      }
  return std::nullopt;
}

std::string ClassicalFactor::name() const {
  switch (family) {
    case 'A': return "sl" + std::to_string(n);
    case 'O': return "so" + std::to_string(n);
    case 'C': return "sp" + std::to_string(n);
  }
  return "?";
}

std::string AlgebraSpec::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "+" : "") + factors[i].name();
  return s;
}

AlgebraSpec parse_algebra(const std::string& text) {
  AlgebraSpec spec;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() < 3) throw Error("unsupported algebra '" + text + "'");
    std::string head = part.substr(0, 2);
    std::string tail = part.substr(2);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), ::isdigit)) throw Error("unsupported algebra '" + text + "'");
    ClassicalFactor f;
    f.n = std::stoul(tail);
    if (head == "sl") f.family = 'A';
    else if (head == "so") f.family = 'O';
    else if (head == "sp") f.family = 'C';
    else throw Error("unsupported algebra '" + text + "'");
    if ((f.family == 'A' && f.n < 2) || (f.family == 'O' && f.n < 2) || (f.family == 'C' && (f.n < 2 || f.n % 2)))
      throw Error("unsupported algebra '" + text + "'");
    spec.factors.push_back(f);
  }
  if (spec.factors.empty()) throw Error("unsupported algebra '" + text + "'");
  return spec;
}

Mat split_orthogonal_gram(std::size_t n) {
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1 - i) = 1;
  return g;
}

Mat split_symplectic_gram(std::size_t n) {
  if (n % 2) throw Error("symplectic form needs even size");
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1 - i) = i < n / 2 ? 1 : -1;
  return g;
}

std::vector<InvariantRecipe> factor_recipes(const ClassicalFactor& f, const Mat& embed, const Mat& project,
                                            const Mat& gram) {
  std::vector<InvariantRecipe> out;
  auto trace = [&](unsigned k) {
    InvariantRecipe r;
    r.kind = InvariantRecipe::Kind::Trace;
    r.power = k;
    r.embed = embed;
    r.project = project;
    out.push_back(r);
  };
  std::size_t n = f.n;
  switch (f.family) {
    case 'A':
      for (unsigned k = 2; k <= n; ++k) trace(k);
      break;
    case 'C':
      for (unsigned k = 1; k <= n / 2; ++k) trace(2 * k);
      break;
    case 'O': {
      std::size_t m = n / 2;
      std::size_t last = n % 2 ? m : m - 1;
      for (unsigned k = 1; k <= last; ++k) trace(2 * k);
      if (n % 2 == 0) {
        InvariantRecipe r;
        r.kind = InvariantRecipe::Kind::Pfaffian;
        r.embed = embed;
        r.project = project;
        r.gram = gram;
        out.push_back(r);
      }
      break;
    }
  }
  return out;
}

StructureConstants algebra_from_matrices(const std::string& name, std::size_t size, const std::vector<Mat>& basis,
                                         const std::vector<std::string>& labels,
                                         const std::vector<InvariantRecipe>& recipes) {
  auto real = std::make_shared<MatrixRealization>(size, basis, recipes);
  std::size_t d = basis.size();
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Mat c = basis[i] * basis[j] - basis[j] * basis[i];
      Vec coords = real->coordinates(c);
      table[i * d + j] = to_sparse(coords);
      SparseVec neg;
      for (const auto& [k, v] : table[i * d + j]) add_sparse(neg, k, -v);
      table[j * d + i] = neg;
    }
  Mat kappa(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Mat p = basis[i] * basis[j];
      Rat t = 0;
      for (std::size_t a = 0; a < size; ++a) t += p(a, a);
      kappa(i, j) = t;
      kappa(j, i) = t;
    }
  StructureConstants g(name, labels, std::move(table), std::move(kappa));
  g.set_realization(real);
  if (auto e = g.jacobi_defect()) throw Error(name + ": " + *e);
  if (auto e = g.trace_form_defect()) throw Error(name + ": " + *e);
  g.set_rank(sampled_index(g, 4, kConstructionSeed));
  return g;
}

StructureConstants build_algebra(const AlgebraSpec& spec) {
  std::size_t total = 0;
  for (const auto& f : spec.factors) total += f.n;
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  std::vector<InvariantRecipe> recipes;
  std::size_t offset = 0;
  for (std::size_t fi = 0; fi < spec.factors.size(); ++fi) {
    const auto& f = spec.factors[fi];
    std::vector<Mat> local;
    std::vector<std::string> local_labels;
    Mat gram;
    if (f.family == 'A') special_linear_basis(f.n, local, local_labels);
    else {
      gram = f.family == 'O' ? split_orthogonal_gram(f.n) : split_symplectic_gram(f.n);
      form_algebra_basis(f.n, gram, local, local_labels);
    }
    Mat embed(total, f.n);
    for (std::size_t a = 0; a < f.n; ++a) embed(offset + a, a) = 1;
    Mat project = embed.transpose();
    std::string prefix = spec.factors.size() > 1 ? std::string(1, static_cast<char>('a' + fi)) + "." : "";
    for (std::size_t b = 0; b < local.size(); ++b) {
      basis.push_back(embed * local[b] * project);
      labels.push_back(prefix + local_labels[b]);
    }
    auto r = factor_recipes(f, embed, project, gram);
    recipes.insert(recipes.end(), r.begin(), r.end());
    offset += f.n;
  }
  return algebra_from_matrices(spec.name(), total, basis, labels, recipes);
}

StructureConstants build_algebra(const std::string& text) { return build_algebra(parse_algebra(text)); }

const char* to_string(Centralizer::Tag t) {
  switch (t) {
    case Centralizer::Tag::Regular: return "regular";
    case Centralizer::Tag::Subregular: return "subregular";
    case Centralizer::Tag::Other: return "other";
  }
  return "other";
}

Centralizer centralizer(const StructureConstants& g, const Vec& x) {
  if (x.size() != g.dim()) throw Error("element has the wrong dimension");
  RankKernel rk = rank_kernel(g.ad(x));
  Centralizer c;
  c.dim = rk.kernel.size();
  c.basis = std::move(rk.kernel);
  if (c.dim == g.rank()) c.tag = Centralizer::Tag::Regular;
  else if (c.dim == g.rank() + 2) c.tag = Centralizer::Tag::Subregular;
  return c;
}

std::size_t sampled_index(const StructureConstants& g, std::size_t trials, std::uint64_t seed, long height) {
  if (trials == 0) throw Error("sampled_index needs at least one trial");
  Sampler s(seed, height);
  std::size_t best = g.dim();
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t k = g.dim() - rank(g.form_at(s.point(g.dim())));
    best = std::min(best, k);
  }
  return best;
}

}  // namespace poissonz
