#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "quotvol/ulaurent.hpp"

namespace quotvol {

// Truncated power series in x_1, y_1, ..., x_r, y_r over ULaurent.
//
// A monomial x^α y^β survives only if α_i + β_i <= caps[i] for every i, so
// the ring is nilpotent away from the constant term. Terms are stored
// sparsely, keyed by the exponent vector (α_1, β_1, ..., α_r, β_r).
class TruncSeries {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, ULaurent>;

  explicit TruncSeries(std::vector<int> caps);

  static TruncSeries constant(std::vector<int> caps, const ULaurent& c);
  /// x_i (0-based index). Identically zero when caps[i] == 0.
  static TruncSeries x(std::vector<int> caps, std::size_t i);
  /// y_i (0-based index). Identically zero when caps[i] == 0.
  static TruncSeries y(std::vector<int> caps, std::size_t i);

  std::size_t rank() const { return caps_.size(); }
  std::span<const int> caps() const { return caps_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Part with all x, y exponents zero.
  ULaurent constant_term() const;
  /// Series with the constant term removed.
  TruncSeries nilpotent_part() const;

  /// Total x, y degree bound beyond which every product vanishes.
  int nilpotency_bound() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const ULaurent& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const ULaurent& c) { return a *= c; }
  friend TruncSeries operator*(const ULaurent& c, TruncSeries a) { return a *= c; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Adds c·x^α y^β; dropped silently if the exponents violate the caps.
  void add_term(const Exponents& e, const ULaurent& c);

 private:
  bool within_caps(const Exponents& e) const;
  void require_same_caps(const TruncSeries& other) const;

  std::vector<int> caps_;
  TermMap terms_;
};

/// base^e through Σ_k C(e,k) c^{e-k} z^k, where c is the constant term and z
/// the nilpotent remainder. Negative e needs c to be a ULaurent unit.
TruncSeries series_pow_int(const TruncSeries& base, long e);

/// Σ_k arg^k / k! for an argument without constant term.
TruncSeries series_exp(const TruncSeries& arg);

}  // namespace quotvol
