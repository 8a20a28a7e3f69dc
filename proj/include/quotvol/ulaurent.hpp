#pragma once

#include <vector>

#include "quotvol/tpoly.hpp"

namespace quotvol {

// Laurent polynomial in the equivariant parameter u with TPoly
// coefficients. The window [lowest, highest] is whatever the arithmetic
// produces; nothing is pre-truncated.
class ULaurent {
 public:
  ULaurent() = default;
  ULaurent(const TPoly& constant);  // NOLINT: u^0 term
  ULaurent(const Rational& constant) : ULaurent(TPoly(constant)) {}  // NOLINT
  ULaurent(long constant) : ULaurent(TPoly(constant)) {}  // NOLINT

  /// c·u^k
  static ULaurent monomial(const TPoly& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int lowest_exponent() const { return lowest_; }
  int highest_exponent() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  TPoly coefficient(int k) const;

  /// True for a single term c·u^k with c a nonzero rational constant.
  bool is_unit() const;
  /// Inverse of a unit; throws ComputationError otherwise.
  ULaurent inverse() const;

  ULaurent& operator+=(const ULaurent& rhs);
  ULaurent& operator-=(const ULaurent& rhs);
  ULaurent& operator*=(const Rational& c);

  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend ULaurent operator*(ULaurent a, const Rational& c) { return a *= c; }
  ULaurent operator-() const;

  friend bool operator==(const ULaurent&, const ULaurent&) = default;

 private:
  void trim();

  int lowest_ = 0;
  std::vector<TPoly> coeffs_;
};

/// Integer power; negative exponents require a unit.
ULaurent pow(const ULaurent& base, long e);

/// Coefficient of u^k (zero outside the window).
TPoly u_coefficient(const ULaurent& s, int k);

}  // namespace quotvol
