#include "quotvol/abelian.hpp"

#include <algorithm>

#include "quotvol/errors.hpp"

namespace quotvol {

Rational poincare_number(long g, long a, long b) {
  if (g < 0 || a < 0 || b < 0) throw ComputationError("Poincaré numbers need non-negative arguments");
  if (b > g) return Rational(0);
  return factorial(g) / factorial(g - b);
}

TPoly symmetric_power_volume(const CurveQuotProblem& p) {
  if (p.genus < 0 || p.d < 0) throw ComputationError("genus and length must be non-negative");
  const TPoly shifted = TPoly::variable() + TPoly(p.deg_E);
  TPoly v;
  for (long j = 0; j <= std::min(p.d, p.genus); ++j) {
    const Rational weight = binomial(Rational(p.genus), j) / factorial(p.d - j);
    v += pow(shifted, static_cast<unsigned long>(p.d - j)) * weight;
  }
  return v;
}

MantonNasirPair manton_nasir_check(long g, long d, const Rational& vol_X, const Rational& pi_probe) {
  if (pi_probe == 0) throw ComputationError("pi probe must be nonzero");
  const Rational ttilde = vol_X / (4 * pi_probe);
  const TPoly v = symmetric_power_volume({g, -d, d});
  MantonNasirPair out;
  out.from_normalized_volume = power(4 * pi_probe * pi_probe, d) * v(ttilde);
  out.manton_nasir = 0;
  const Rational shifted = vol_X - 4 * pi_probe * d;
  for (long i = 0; i <= std::min(d, g); ++i) {
    out.manton_nasir += power(4 * pi_probe, i) * binomial(Rational(g), i) / factorial(d - i) *
                        power(shifted, d - i);
  }
  return out;
}

Rational AcyclicData::bundle_rank() const {
  if (pairings.size() != static_cast<std::size_t>(n) + 1) {
    throw ComputationError("incomplete pairing data");
  }
  Rational r = 0;
  for (int s = 0; s <= n; ++s) r += (s % 2 == 0 ? 1 : -1) * pairings[static_cast<std::size_t>(s)] / factorial(s);
  return r;
}

namespace {

std::vector<AltForm> graded_exp_components(std::span<const AltForm> ch, int top, int sign_offset) {
  if (ch.empty()) throw ComputationError("graded degree error");
  const int q = ch.front().q();
  AltForm exponent(q);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const int deg = 2 * static_cast<int>(i);
    if (ch[i].q() != q) throw ComputationError("rank mismatch");
    if (!ch[i].is_homogeneous_of_degree(deg)) throw ComputationError("graded degree error");
    if (i == 0) continue;
    const int sign = ((static_cast<int>(i) + sign_offset) % 2 == 0) ? 1 : -1;
    const Rational weight = Rational(sign) / static_cast<long>(i);
    exponent += ch[i] * weight;
  }
  const AltForm total = exp_even(exponent);
  std::vector<AltForm> out;
  for (int j = 0; j <= top; ++j) out.push_back(total.component(2 * j));
  return out;
}

}  // namespace

std::vector<AltForm> segre_from_ch(std::span<const AltForm> ch, int top) {
  return graded_exp_components(ch, top, 0);
}

std::vector<AltForm> chern_from_ch(std::span<const AltForm> ch, int top) {
  return graded_exp_components(ch, top, 1);
}

std::vector<AltForm> ch_of_V(const AcyclicData& data) {
  std::vector<AltForm> ch;
  ch.push_back(AltForm::one(data.q) * data.bundle_rank());
  for (int i = 1; i <= data.q; ++i) {
    AltForm ch_i(data.q);
    for (int s = 0; s <= data.n - i; ++s) {
      const auto it = data.kappa.find({i, s});
      if (it == data.kappa.end()) throw ComputationError("incomplete pairing data");
      if (it->second.q() != data.q) throw ComputationError("rank mismatch");
      if (!it->second.is_homogeneous_of_degree(2 * i)) throw ComputationError("graded degree error");
      const Rational weight = Rational((i + s) % 2 == 0 ? 1 : -1) / factorial(s);
      ch_i += it->second * weight;
    }
    ch.push_back(std::move(ch_i));
  }
  return ch;
}

TPoly acyclic_volume(const AcyclicData& data) {
  const Rational rank = data.bundle_rank();
  if (!is_integer(rank)) throw ComputationError("bundle rank must be an integer");
  if (rank < 1) throw ComputationError("empty projective bundle");
  const long dim = rank.get_num().get_si() + data.q - 1;

  const AltForm theta = theta_form(data.q, data.h);
  const std::vector<AltForm> ch = ch_of_V(data);
  const std::vector<AltForm> segre = segre_from_ch(ch, data.q);
  const TPoly shifted = TPoly::variable() + TPoly(data.deg_E);

  // ν_*(γ^{N-k}) = s_{q-k}, which needs k <= q.
  TPoly v;
  AltForm theta_power = AltForm::one(data.q);
  for (long k = 0; k <= std::min<long>(data.q, dim); ++k) {
    const Rational pairing =
        evaluate_top(wedge(theta_power, segre[static_cast<std::size_t>(data.q - k)]));
    if (pairing != 0) {
      v += pow(shifted, static_cast<unsigned long>(dim - k)) *
           Rational(binomial(Rational(dim), k) * pairing);
    }
    theta_power = wedge(theta_power, theta);
  }
  v *= Rational(Rational(1) / factorial(dim));
  return v;
}

AcyclicData curve_acyclic_data(long g, long r0, long deg_E0, long m) {
  if (g < 0 || r0 < 1) throw ComputationError("curve data needs g >= 0 and r0 >= 1");
  AcyclicData data;
  data.n = 1;
  data.q = static_cast<int>(g);
  data.deg_E = m;
  // P_0 = ⟨C_1⟩ = deg E0 + r0(1 - g), P_1 = ⟨m·C_0⟩ = m·r0.
  data.pairings = {Rational(deg_E0 + r0 * (1 - g)), Rational(m * r0)};
  data.h = standard_symplectic(data.q);
  if (g >= 1) data.kappa.emplace(std::pair{1, 0}, theta_form(data.q, data.h) * Rational(r0));
  return data;
}

bool curve_pair_in_acyclic_range(long g, long r0, long deg_E0, long m) {
  return deg_E0 > r0 * m + 2 * r0 * (g - 1);
}

}  // namespace quotvol
