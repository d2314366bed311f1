#include "poissonz/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "poissonz/pairs.hpp"

namespace poissonz {

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) { return before(a.first, b.first); }

void check_dim(const Poly& a, const Poly& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("polynomial dimension mismatch");
}

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && before(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || before(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? Rat(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rat c = subtract ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

// Values xi_i^k for k up to the largest exponent present.
std::vector<std::vector<Rat>> power_table(const Poly& f, const Vec& xi) {
  std::size_t n = f.ambient_dim();
  std::vector<unsigned> maxe(n, 0);
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < n; ++i) maxe[i] = std::max<unsigned>(maxe[i], m.e[i]);
  std::vector<std::vector<Rat>> pw(n);
  for (std::size_t i = 0; i < n; ++i) {
    pw[i].resize(maxe[i] + 1);
    pw[i][0] = 1;
    for (unsigned k = 1; k <= maxe[i]; ++k) pw[i][k] = pw[i][k - 1] * xi[i];
  }
  return pw;
}

}  // namespace

Poly::Poly(std::size_t ambient_dim) : n_(ambient_dim) {
  if (ambient_dim > kMaxVars) throw Error("too many polynomial variables");
}

Poly Poly::constant(std::size_t n, const Rat& c) {
  Poly p(n);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw Error("variable index out of range");
  Poly p(n);
  Monomial m;
  m.e[i] = 1;
  p.terms_.emplace_back(m, Rat(1));
  return p;
}

Poly Poly::linear(const Vec& coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) {
      Monomial m;
      m.e[i] = 1;
      p.terms_.emplace_back(m, coeffs[i]);
    }
  p.normalize();
  return p;
}

Poly Poly::from_terms(std::size_t n, std::vector<Term> terms) {
  Poly p(n);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
    else out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return sgn(t.second) == 0; }), out.end());
  terms_ = std::move(out);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
}

Poly operator+(const Poly& a, const Poly& b) {
  check_dim(a, b);
  Poly r(a.n_);
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_dim(a, b);
  Poly r(a.n_);
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
  check_dim(a, b);
  Poly r(a.n_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < a.n_; ++i) m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
      r.terms_.emplace_back(m, ca * cb);
    }
  r.normalize();
  return r;
}

Poly operator*(const Rat& s, const Poly& a) {
  Poly r(a.n_);
  if (sgn(s) == 0) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.second *= s;
  return r;
}

Poly operator*(int s, const Poly& a) { return Rat(s) * a; }

Poly Poly::derivative(std::size_t i) const {
  if (i >= n_) throw Error("variable index out of range");
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    r.terms_.emplace_back(d, c * static_cast<unsigned long>(m.e[i]));
  }
  // Differentiation in one variable preserves the relative order of surviving terms.
  return r;
}

Poly Poly::directional(const Vec& gamma) const {
  if (gamma.size() != n_) throw Error("direction has the wrong dimension");
  Poly r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (sgn(gamma[i]) != 0) r += gamma[i] * derivative(i);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(n_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Rat Poly::evaluate(const Vec& xi) const {
  if (xi.size() != n_) throw Error("point has the wrong dimension");
  auto pw = power_table(*this, xi);
  Rat s = 0;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (std::size_t i = 0; i < n_ && sgn(v) != 0; ++i)
      if (m.e[i]) v *= pw[i][m.e[i]];
    s += v;
  }
  return s;
}

Vec Poly::gradient(const Vec& xi) const {
  if (xi.size() != n_) throw Error("point has the wrong dimension");
  auto pw = power_table(*this, xi);
  Vec g(n_);
  std::vector<std::size_t> vars;
  for (const auto& [m, c] : terms_) {
    vars.clear();
    for (std::size_t i = 0; i < n_; ++i)
      if (m.e[i]) vars.push_back(i);
    for (std::size_t a : vars) {
      Rat v = c * static_cast<unsigned long>(m.e[a]);
      for (std::size_t b : vars) {
        unsigned k = b == a ? m.e[b] - 1u : m.e[b];
        if (k) v *= pw[b][k];
        if (sgn(v) == 0) break;
      }
      g[a] += v;
    }
  }
  return g;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != n_) throw Error("substitution needs one image per variable");
  if (n_ == 0) return *this;
  std::size_t target = images.front().ambient_dim();
  std::vector<std::vector<Poly>> pw(n_);
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!m.e[i]) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= m.e[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[m.e[i]];
    }
    r += t;
  }
  return r;
}

Poly Poly::widen(std::size_t n) const {
  if (n < n_) throw Error("cannot narrow a polynomial");
  Poly r(n);
  r.terms_ = terms_;  // trailing zero exponents keep the order intact
  return r;
}

std::string Poly::to_text(const std::vector<std::string>& labels) const {
  if (labels.size() < n_) throw Error("not enough variable labels");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat a = abs(c);
    os << a.get_str();
    for (std::size_t i = 0; i < n_; ++i) {
      if (!m.e[i]) continue;
      os << '*' << labels[i];
      if (m.e[i] > 1) os << '^' << static_cast<unsigned>(m.e[i]);
    }
  }
  return os.str();
}

EvalResult evaluate_and_differential(const Poly& f, const Vec& xi) { return {f.evaluate(xi), f.gradient(xi)}; }

BiDegree bidegree(const Monomial& m, std::size_t n0, std::size_t n) {
  BiDegree b;
  for (std::size_t i = 0; i < n; ++i) (i < n0 ? b.d0 : b.d1) += m.e[i];
  return b;
}

const Poly& BiHomDecomposition::top() const {
  for (const auto& [b, p] : components)
    if (static_cast<int>(b.d1) == top_g1_degree) return p;
  throw Error("zero polynomial has no top component");
}

BiHomDecomposition bihom_decompose(const Poly& f, std::size_t n0) {
  std::size_t n = f.ambient_dim();
  std::map<BiDegree, std::vector<Poly::Term>> parts;
  for (const auto& t : f.terms()) parts[bidegree(t.first, n0, n)].push_back(t);
  BiHomDecomposition d;
  for (auto& [b, ts] : parts) {
    d.components.emplace(b, Poly::from_terms(n, std::move(ts)));
    d.top_g1_degree = std::max(d.top_g1_degree, static_cast<int>(b.d1));
  }
  return d;
}

BiHomDecomposition bihom_decompose(const Poly& f, const SymmetricPair& pair) {
  if (f.ambient_dim() != pair.dim()) throw Error("polynomial does not live on this pair");
  return bihom_decompose(f, pair.n0);
}

Poly restrict_r0(const Poly& f, std::size_t n0) {
  std::vector<Poly::Term> keep;
  for (const auto& t : f.terms())
    if (bidegree(t.first, n0, f.ambient_dim()).d1 == 0) keep.push_back(t);
  return Poly::from_terms(f.ambient_dim(), std::move(keep));
}

Poly restrict_r1(const Poly& f, std::size_t n0) {
  std::vector<Poly::Term> keep;
  for (const auto& t : f.terms())
    if (bidegree(t.first, n0, f.ambient_dim()).d0 == 0) keep.push_back(t);
  return Poly::from_terms(f.ambient_dim(), std::move(keep));
}

Poly affine_slice(const Poly& f, std::size_t n0, const Vec& eta) {
  std::size_t n = f.ambient_dim();
  if (eta.size() != n - n0) throw Error("slice point has the wrong dimension");
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    Rat v = c;
    Monomial r;
    for (std::size_t i = 0; i < n0; ++i) r.e[i] = m.e[i];
    for (std::size_t i = n0; i < n && sgn(v) != 0; ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) v *= eta[i - n0];
    if (sgn(v) != 0) out.emplace_back(r, v);
  }
  return Poly::from_terms(n0, std::move(out));
}

}  // namespace poissonz
