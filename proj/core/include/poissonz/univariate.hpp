#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poissonz/exactalg.hpp"

namespace poissonz {

/// Dense univariate polynomial over Rat; coeffs[i] multiplies x^i, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Vec coeffs);
  static UPoly constant(const Rat& c);
  static UPoly x();

  const Vec& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& lead() const;

  Rat evaluate(const Rat& x) const;
  Mat evaluate(const Mat& m) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Vec c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);
/// Lagrange interpolation through distinct nodes.
UPoly interpolate(const Vec& xs, const Vec& ys);
/// det(x I - M).
UPoly charpoly(const Mat& m);

struct RationalRoots {
  std::vector<Rat> roots;                    // distinct, increasing
  std::vector<int> leftover_factor_degrees;  // degrees of the square-free part left after removing them
  bool complete = true;                      // false when the candidate search was cut short
};
RationalRoots rational_roots(const UPoly& f);

}  // namespace poissonz
