#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poissonz/exactalg.hpp"

namespace poissonz {

struct SymmetricPair;

inline constexpr std::size_t kMaxVars = 48;

/// Dense exponent vector; entries past the ambient dimension stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  /// Canonical order: lexicographically larger exponent vectors first.
  friend bool before(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), kMaxVars) > 0;
  }
};

struct BiDegree {
  unsigned d0 = 0;  // degree in g0 variables
  unsigned d1 = 0;  // degree in g1 variables
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

/// Sparse polynomial in the coordinates e_1..e_n of g*, terms kept sorted and nonzero.
class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  explicit Poly(std::size_t ambient_dim);
  static Poly constant(std::size_t n, const Rat& c);
  static Poly variable(std::size_t n, std::size_t i);
  static Poly linear(const Vec& coeffs);
  static Poly from_terms(std::size_t n, std::vector<Term> terms);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  Poly derivative(std::size_t i) const;
  /// Directional derivative sum_i gamma_i d/de_i.
  Poly directional(const Vec& gamma) const;
  Poly pow(unsigned k) const;

  Rat evaluate(const Vec& xi) const;
  /// Gradient (dF/de_1, ..., dF/de_n) at xi; under the trace-form identification an element of g.
  Vec gradient(const Vec& xi) const;

  /// Substitutes e_a -> images[a] (polynomials in a common ambient dimension).
  Poly substitute(const std::vector<Poly>& images) const;
  /// Same polynomial viewed in a larger ambient dimension (new variables appended).
  Poly widen(std::size_t n) const;

  /// Canonical text: terms in canonical order, explicit rational coefficients, "0" for zero.
  std::string to_text(const std::vector<std::string>& labels) const;

 private:
  void normalize();
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

Poly operator*(int s, const Poly& a);

struct EvalResult {
  Rat value;
  Vec gradient;
};
EvalResult evaluate_and_differential(const Poly& f, const Vec& xi);

BiDegree bidegree(const Monomial& m, std::size_t n0, std::size_t n);

struct BiHomDecomposition {
  std::map<BiDegree, Poly> components;
  int top_g1_degree = -1;  // d-bullet; -1 for zero input
  const Poly& top() const;
};

/// Splits F by g0/g1 degrees; the first n0 variables are g0 coordinates.
BiHomDecomposition bihom_decompose(const Poly& f, std::size_t n0);
BiHomDecomposition bihom_decompose(const Poly& f, const SymmetricPair& pair);

/// r0: g1 variables set to 0.
Poly restrict_r0(const Poly& f, std::size_t n0);
/// r1: g0 variables set to 0.
Poly restrict_r1(const Poly& f, std::size_t n0);
/// g1 variables replaced by eta (length n - n0); result lives on g0* (ambient n0).
Poly affine_slice(const Poly& f, std::size_t n0, const Vec& eta);

}  // namespace poissonz
