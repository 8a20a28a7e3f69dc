#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "quotvol/exterior.hpp"
#include "quotvol/tpoly.hpp"

namespace quotvol {

// ⟨γ^a θ^b, [X^(a+b)]⟩ on the symmetric power of a genus-g curve:
// g!/(g-b)! for b <= g, else 0.
Rational poincare_number(long g, long a, long b);

// Quot space of a rank-1 kernel on a genus-g curve, i.e. X^(d).
struct CurveQuotProblem {
  long genus = 0;
  long deg_E = 0;  // degree of the kernel
  long d = 0;      // length of the quotient
};

/// Normalized volume Σ_{j=0}^{min(d,g)} C(g,j)/(d-j)! (deg_E + 𝔱)^{d-j},
/// in units of (4π²)^d.
TPoly symmetric_power_volume(const CurveQuotProblem& p);

// Both sides of the Manton–Nasir comparison with π replaced by a rational
// probe: the normalized volume scaled by (4π²)^d at deg_E = -d and
// 𝔱 = vol_X/(4π), and the Manton–Nasir sum. Their ratio is π^d.
struct MantonNasirPair {
  Rational from_normalized_volume;
  Rational manton_nasir;
};

MantonNasirPair manton_nasir_check(long g, long d, const Rational& vol_X, const Rational& pi_probe);

// Pairing data for the projective-bundle formula of an acyclic pair (m, E0)
// on an n-dimensional base with b_1 = 2q.
struct AcyclicData {
  int n = 1;
  int q = 0;
  Rational deg_E;                  // ⟨m ∪ [ω]^{n-1}, [X]⟩
  std::vector<Rational> pairings;  // P_s = ⟨m^s ∪ C_{n-s}, [X]⟩ for s = 0..n
  RationalMatrix h;                // antisymmetric 2q x 2q theta data
  // (i, s) -> 𝔨_{m^s C_{n-i-s}}, a degree-2i form, for 1 <= i <= min(q, n)
  // and 0 <= s <= n - i.
  std::map<std::pair<int, int>, AltForm> kappa;

  /// R = Σ_s (-1)^s P_s / s!, the rank of the pushed-forward bundle.
  Rational bundle_rank() const;
};

/// Segre classes s_0..s_top from ch = (ch_0, ch_1, ...), ch_i of degree 2i,
/// via 1 + Σ s_j = exp(Σ_{i>=1} (-1)^i ch_i / i).
std::vector<AltForm> segre_from_ch(std::span<const AltForm> ch, int top);

/// Chern classes c_0..c_top via 1 + Σ c_j = exp(Σ_{i>=1} (-1)^{i+1} ch_i / i).
std::vector<AltForm> chern_from_ch(std::span<const AltForm> ch, int top);

/// (ch_0, ..., ch_q) of the pushed-forward bundle; ch_0 = R·1 and
/// ch_i = Σ_{s=0}^{n-i} (-1)^{i+s}/s! 𝔨_{m^s C_{n-i-s}}.
std::vector<AltForm> ch_of_V(const AcyclicData& data);

/// Normalized volume (units of (4π²)^N) of the projective bundle
/// P(V) -> Pic^m(X), with N = R + q - 1.
TPoly acyclic_volume(const AcyclicData& data);

/// Data for a genus-g curve, E0 of rank r0 and degree deg_E0, kernel degree m.
AcyclicData curve_acyclic_data(long g, long r0, long deg_E0, long m);

/// deg_E0 > r0·m + 2·r0·(g - 1), the sufficient acyclicity condition for
/// polystable E0.
bool curve_pair_in_acyclic_range(long g, long r0, long deg_E0, long m);

}  // namespace quotvol
