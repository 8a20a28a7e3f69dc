#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quotvol/rational.hpp"

namespace quotvol {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Element of the exterior algebra Alt*(H^1(X, Z), Q) on a rank-2q lattice,
// in the basis λ_I = λ_{i1} ∧ ... ∧ λ_{ik} for strictly increasing I.
//
// Index sets are bitmasks: bit (i - 1) set <=> λ_i ∈ I, so the lattice
// rank 2q is limited to 30. Forms may be inhomogeneous (exp_even returns a
// graded sum).
class AltForm {
 public:
  using IndexSet = std::uint32_t;
  static constexpr int kMaxQ = 15;

  explicit AltForm(int q);

  static AltForm one(int q);
  /// coeff · λ_{i1} ∧ ... ∧ λ_{ik} with 1-based indices in any order; a
  /// repeated index gives the zero form, a permutation contributes its sign.
  static AltForm basis(int q, const std::vector<int>& indices, const Rational& coeff = 1);

  int q() const { return q_; }
  int lattice_rank() const { return 2 * q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Rational>& terms() const { return terms_; }

  /// Degree when homogeneous and nonzero.
  std::optional<int> degree() const;
  /// True if every term has degree k (vacuously for the zero form).
  bool is_homogeneous_of_degree(int k) const;
  /// Degree-k part.
  AltForm component(int k) const;
  Rational coefficient(const std::vector<int>& increasing_indices) const;

  AltForm& operator+=(const AltForm& rhs);
  AltForm& operator-=(const AltForm& rhs);
  AltForm& operator*=(const Rational& c);

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(AltForm a, const Rational& c) { return a *= c; }
  friend AltForm operator*(const Rational& c, AltForm a) { return a *= c; }
  AltForm operator-() const { return *this * Rational(-1); }

  friend bool operator==(const AltForm&, const AltForm&) = default;

  void add_term(IndexSet set, const Rational& c);

 private:
  int q_;
  std::map<IndexSet, Rational> terms_;
};

std::vector<int> indices_of(AltForm::IndexSet set);

/// Exterior product with shuffle signs; throws "rank mismatch" on
/// differing q.
AltForm wedge(const AltForm& a, const AltForm& b);

/// a ∧ ... ∧ a (k factors); one(q) for k = 0.
AltForm wedge_power(const AltForm& a, int k);

/// Σ_k a^{∧k}/k! for a sum of even-degree components of degree >= 2.
AltForm exp_even(const AltForm& a);

/// Coefficient of λ_{1...2q}, i.e. the value a(h_1, ..., h_{2q}).
Rational evaluate_top(const AltForm& a);

/// Σ_{i<j} h_ij λ_i ∧ λ_j for an antisymmetric 2q x 2q matrix h.
AltForm theta_form(int q, const RationalMatrix& h);

/// Standard symplectic matrix: h_{2k-1,2k} = 1 = -h_{2k,2k-1}.
RationalMatrix standard_symplectic(int q);

}  // namespace quotvol
