#include "poissonz/univariate.hpp"

#include <algorithm>

namespace poissonz {

namespace {

constexpr unsigned long kDivisorSearchLimit = 1000000;

// Positive divisors of |n|; nullopt when n has a factor beyond the search limit.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; p <= kDivisorSearchLimit && mpz_class(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    if (n > mpz_class(kDivisorSearchLimit) * kDivisorSearchLimit) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

UPoly::UPoly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(Vec{c}); }

UPoly UPoly::x() { return UPoly(Vec{Rat(0), Rat(1)}); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& UPoly::lead() const {
  if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rat UPoly::evaluate(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Mat UPoly::evaluate(const Mat& m) const {
  Mat v(m.rows(), m.cols());
  Mat id = Mat::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * m + *it * id;
  return v;
}

UPoly UPoly::derivative() const {
  Vec d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Vec d = c_;
  Rat l = c_.back();
  for (auto& x : d) x /= l;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Vec r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  Vec q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rat f = r[static_cast<std::size_t>(k)] / b.lead();
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

UPoly interpolate(const Vec& xs, const Vec& ys) {
  if (xs.size() != ys.size()) throw Error("interpolation needs one value per node");
  UPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(1);
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw Error("interpolation nodes must be distinct");
      basis = basis * UPoly(Vec{Rat(-xs[j]), Rat(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + UPoly::constant(ys[i] / denom) * basis;
  }
  return acc;
}

UPoly charpoly(const Mat& m) {
  std::size_t n = m.rows();
  Vec xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rat t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(determinant(t * Mat::identity(n) - m));
  }
  return interpolate(xs, ys);
}

RationalRoots rational_roots(const UPoly& f) {
  RationalRoots out;
  if (f.is_zero()) throw Error("the zero polynomial has every number as a root");
  UPoly s = squarefree_part(f);
  // Strip roots at zero first so the constant term is nonzero.
  if (s.degree() >= 1 && sgn(s.coeffs()[0]) == 0) {
    out.roots.push_back(Rat(0));
    s = divmod(s, UPoly::x()).first;
  }
  if (s.degree() >= 1) {
    mpz_class den = 1;
    for (const auto& c : s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class a0 = Rat(Rat(den) * s.coeffs().front()).get_num();
    mpz_class an = Rat(Rat(den) * s.lead()).get_num();
    auto dp = divisors(a0);
    auto dq = divisors(an);
    if (!dp || !dq) {
      out.complete = false;
    } else {
      for (const auto& p : *dp)
        for (const auto& q : *dq)
          for (int sign : {1, -1}) {
            Rat r(mpz_class(sign * p), q);
            r.canonicalize();
            if (sgn(s.evaluate(r)) != 0) continue;
            if (std::find(out.roots.begin(), out.roots.end(), r) != out.roots.end()) continue;
            out.roots.push_back(r);
            s = divmod(s, UPoly(Vec{Rat(-r), Rat(1)})).first;
          }
    }
  }
  if (s.degree() >= 1) out.leftover_factor_degrees.push_back(s.degree());
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace poissonz
