#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quotvol/tpoly.hpp"
#include "quotvol/trunc_series.hpp"

namespace quotvol {

// Quot space of full-rank subsheaves of E0 = L_1 ⊕ ... ⊕ L_r on a genus-g
// curve with quotient length d, so deg E = l - d for l = Σ l_i.
struct QuotProblem {
  long g = 0;
  std::vector<long> l;
  long d = 0;

  int rank() const { return static_cast<int>(l.size()); }
  long total_degree() const;
  long kernel_degree() const { return total_degree() - d; }
  /// Throws ComputationError unless g >= 0, r >= 1 and d >= 0.
  void validate() const;
};

// Weak composition (d_1, ..., d_r) of d; indexes the fixed components
// Π_i X^(d_i) of the torus action.
using Composition = std::vector<long>;

// Torus weights w_1..w_r, pairwise distinct.
using WeightVector = std::vector<Rational>;

/// All weak compositions of d into r parts, in descending lexicographic
/// order: (d, 0, ..., 0) first, (0, ..., 0, d) last.
std::vector<Composition> compositions(long d, int r);

/// s_i = 𝔱 + l_i - d_i.
std::vector<TPoly> stability_weights(const QuotProblem& p, const Composition& c);

/// Fixed-point integrand for component c with caps d_i on (x_i, y_i):
///   (Σ_i [s_i x_i + y_i - s_i w_i u])^{rd}
///   · Π_{i≠j} ((w_j - w_i)u + x_i)^{ḡ + l_i - d_i - l_j} exp(y_i / ((w_j - w_i)u + x_i))
///   / Π_{i<j} ((w_j - w_i)u + x_i - x_j)^{2ḡ},   ḡ = g - 1.
TruncSeries integrand(const QuotProblem& p, const Composition& c, const WeightVector& w);

/// Integral of the integrand over Π_i X^(d_i): the multi-degree (d_1..d_r)
/// part, u^0 coefficient, with θ_i^β ↦ g(g-1)...(g-β+1). Throws if a top
/// coefficient carries any power of u other than u^0. If `checked` is
/// non-null it is incremented once per inspected top monomial.
TPoly evaluate_composition(const QuotProblem& p, const Composition& c, const WeightVector& w,
                           std::size_t* checked = nullptr);

/// (-1)^{ḡ·C(r,2) + (r-1)(l-d)}, the orientation sign of the Euler class
/// of the normal bundles.
int localization_sign(const QuotProblem& p);

// Rewrites one component's contribution; used by tests to inject faults.
using ContributionHook = std::function<TPoly(const Composition&, TPoly)>;

struct LocalizationOptions {
  unsigned threads = 1;
  ContributionHook hook;
};

struct VolumeReport {
  TPoly volume;
  std::size_t components = 0;
  std::size_t monomials_checked = 0;
};

VolumeReport quot_volume_report(const QuotProblem& p, const WeightVector& w,
                                const LocalizationOptions& options = {});

/// Normalized volume v(𝔱) (Kähler form ω_t/4π²). Uses default_weights when
/// no weights are given.
TPoly quot_volume(const QuotProblem& p, const std::optional<WeightVector>& w = std::nullopt,
                  const LocalizationOptions& options = {});

/// w_i = i.
WeightVector default_weights(int r);
/// w_i = i-th prime.
WeightVector prime_weights(int r);
/// Pairwise distinct small rationals from a fixed mt19937_64 stream.
WeightVector random_weights(int r, std::uint64_t seed = 20140901);
/// default, prime and random weights.
std::vector<WeightVector> candidate_weights(int r);

/// Throws "weights must be pairwise distinct".
void require_distinct(const WeightVector& w);

struct WeightCheck {
  bool pass = false;
  std::vector<WeightVector> weights;
  std::vector<TPoly> volumes;
};

// Fault injection for the verifier: (weight index, component, contribution).
using WeightedContributionHook = std::function<TPoly(std::size_t, const Composition&, TPoly)>;

WeightCheck verify_weight_independence(const QuotProblem& p, std::span<const WeightVector> ws,
                                       const WeightedContributionHook& hook = {},
                                       unsigned threads = 1);

}  // namespace quotvol
