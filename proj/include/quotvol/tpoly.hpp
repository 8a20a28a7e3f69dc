#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quotvol/rational.hpp"

namespace quotvol {

// Univariate polynomial in the stability parameter 𝔱 with exact rational
// coefficients, stored in ascending degree with trailing zeros trimmed.
class TPoly {
 public:
  static constexpr int kZeroDegree = -1;

  TPoly() = default;
  TPoly(const Rational& constant);  // NOLINT: scalars promote implicitly
  TPoly(long constant) : TPoly(Rational(constant)) {}  // NOLINT
  explicit TPoly(std::vector<Rational> ascending);

  /// The polynomial 𝔱.
  static TPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of 𝔱^k, zero outside the stored range.
  Rational coefficient(int k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational leading_coefficient() const;

  Rational operator()(const Rational& t) const;

  TPoly& operator+=(const TPoly& rhs);
  TPoly& operator-=(const TPoly& rhs);
  TPoly& operator*=(const TPoly& rhs);
  TPoly& operator*=(const Rational& c);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
  friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
  TPoly operator-() const;

  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

TPoly pow(const TPoly& base, unsigned long e);

/// Descending powers, e.g. "1/2𝔱^2 - 𝔱 + 3". `var` names the variable.
std::string to_plain(const TPoly& p, std::string_view var = "𝔱");

/// LaTeX with \frac coefficients and \mathfrak{t}.
std::string to_latex(const TPoly& p);

}  // namespace quotvol
