#include <doctest.h>

#include "generators.hpp"
#include "quotvol/abelian.hpp"
#include "quotvol/errors.hpp"

using namespace quotvol;
using quotvol::testing::Gen;

namespace {

const TPoly t = TPoly::variable();

// (1/d!) Σ_j C(d,j) (deg_E + 𝔱)^{d-j} ⟨γ^{d-j} θ^j⟩, expanded directly.
TPoly poincare_expansion(long g, long deg_E, long d) {
  TPoly v;
  for (long j = 0; j <= d; ++j) {
    const Rational c(binomial(Rational(d), j) * poincare_number(g, d - j, j));
    v += pow(t + TPoly(deg_E), static_cast<unsigned long>(d - j)) * c;
  }
  return v * Rational(Rational(1) / factorial(d));
}

// Graded product of total classes, truncated at degree 2·top.
std::vector<AltForm> graded_product(const std::vector<AltForm>& a, const std::vector<AltForm>& b, int top) {
  std::vector<AltForm> out;
  for (int k = 0; k <= top; ++k) {
    AltForm sum(a.front().q());
    for (int j = 0; j <= k; ++j) sum += wedge(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(k - j)]);
    out.push_back(sum);
  }
  return out;
}

AcyclicData flat_data(int q, long rank_plus, long p1, const Rational& deg_E) {
  AcyclicData data;
  data.n = 1;
  data.q = q;
  data.deg_E = deg_E;
  data.pairings = {Rational(rank_plus), Rational(p1)};
  data.h = standard_symplectic(q);
  if (q >= 1) data.kappa.emplace(std::pair{1, 0}, AltForm(q));
  return data;
}

}  // namespace

TEST_CASE("Poincaré numbers") {
  CHECK(poincare_number(1, 0, 1) == 1);
  for (long g = 0; g <= 4; ++g) CHECK(poincare_number(g, 3, 0) == 1);
  CHECK(poincare_number(1, 0, 2) == 0);
  for (long g = 0; g <= 6; ++g) {
    for (long b = 0; b <= 7; ++b) CHECK(poincare_number(g, 2, b) == falling_factorial(g, b));
  }
  CHECK_THROWS_AS(poincare_number(-1, 0, 0), ComputationError);
}

TEST_CASE("symmetric power volume examples") {
  for (long e = -3; e <= 3; ++e) {
    CHECK(symmetric_power_volume({0, e, 2}) == pow(t + TPoly(e), 2) * Rational(1, 2));
    CHECK(symmetric_power_volume({1, e, 1}) == t + TPoly(e + 1));
    for (long g = 0; g <= 3; ++g) CHECK(symmetric_power_volume({g, e, 0}) == TPoly(1));
  }
  // the sum starts at j = 0; starting at j = 1 would give 1 here
  CHECK(symmetric_power_volume({1, 0, 1}) != TPoly(1));
}

TEST_CASE("symmetric power volume agrees with the Poincaré expansion") {
  for (long g = 0; g <= 5; ++g) {
    for (long d = 0; d <= 6; ++d) {
      for (long e = -4; e <= 4; e += 2) {
        const TPoly v = symmetric_power_volume({g, e, d});
        CHECK(v == poincare_expansion(g, e, d));
        CHECK(v.degree() == d);
        CHECK(v.leading_coefficient() == Rational(1) / factorial(d));
        // positive once 𝔱 + deg_E > 0
        CHECK(v(Rational(1 - e)) > 0);
      }
    }
  }
}

TEST_CASE("Manton–Nasir ratio is the probe to the power d") {
  const Rational vol = parse_rational("17/3");
  auto ratio = [&](long g, long d, const Rational& probe) {
    const MantonNasirPair p = manton_nasir_check(g, d, vol, probe);
    return Rational(p.from_normalized_volume / p.manton_nasir);
  };
  CHECK(ratio(0, 1, 1) == 1);
  CHECK(ratio(0, 1, parse_rational("22/7")) == parse_rational("22/7"));
  CHECK(ratio(1, 1, 2) == 2);
  const MantonNasirPair zero = manton_nasir_check(2, 0, vol, 3);
  CHECK(zero.from_normalized_volume == 1);
  CHECK(zero.manton_nasir == 1);
  for (long g = 0; g <= 3; ++g) {
    for (long d = 1; d <= 4; ++d) {
      for (const char* probe : {"3", "22/7", "355/113"}) {
        const Rational pi = parse_rational(probe);
        CHECK(ratio(g, d, pi) == power(pi, d));
      }
    }
  }
}

TEST_CASE("Segre classes from the Chern character") {
  const int q = 2;
  std::vector<AltForm> zero = {AltForm::one(q), AltForm(q), AltForm(q)};
  const auto s0 = segre_from_ch(zero, 2);
  CHECK(s0[0] == AltForm::one(q));
  CHECK(s0[1].is_zero());
  CHECK(s0[2].is_zero());

  const AltForm a = AltForm::basis(q, {1, 2}) + AltForm::basis(q, {3, 4}, 3);
  std::vector<AltForm> ch = {AltForm::one(q), a, AltForm(q)};
  const auto s = segre_from_ch(ch, 2);
  CHECK(s[1] == -a);
  CHECK(s[2] == wedge(a, a) * Rational(1, 2));

  std::vector<AltForm> wrong = {AltForm::one(q), AltForm::basis(q, {1})};
  CHECK_THROWS_WITH_AS(segre_from_ch(wrong, 1), "graded degree error", ComputationError);
}

TEST_CASE("Chern and Segre classes are inverse") {
  Gen gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = static_cast<int>(gen.integer(1, 4));
    std::vector<AltForm> ch = {AltForm::one(q) * gen.rational()};
    for (int i = 1; i <= q; ++i) ch.push_back(gen.homogeneous_form(q, 2 * i));
    const auto c = chern_from_ch(ch, q);
    const auto s = segre_from_ch(ch, q);
    const auto prod = graded_product(c, s, q);
    CHECK(prod[0] == AltForm::one(q));
    for (int k = 1; k <= q; ++k) CHECK(prod[static_cast<std::size_t>(k)].is_zero());
  }
}

TEST_CASE("ch of the pushed-forward bundle") {
  AcyclicData missing = flat_data(1, 5, 1, 0);
  missing.kappa.clear();
  CHECK_THROWS_WITH_AS(ch_of_V(missing), "incomplete pairing data", ComputationError);
  const auto flat = ch_of_V(flat_data(2, 5, 1, 0));
  for (std::size_t i = 1; i < flat.size(); ++i) CHECK(flat[i].is_zero());

  const AcyclicData curve = curve_acyclic_data(2, 1, 10, 3);
  const auto ch = ch_of_V(curve);
  REQUIRE(ch.size() == 3);
  CHECK(ch[0] == AltForm::one(2) * curve.bundle_rank());
  CHECK(ch[2].is_zero());  // n = 1 leaves no s for i = 2

  const auto zero = ch_of_V(curve_acyclic_data(0, 1, 3, 1));
  CHECK(zero.size() == 1);

  const AcyclicData two = curve_acyclic_data(1, 2, 9, 1);
  CHECK(two.kappa.at({1, 0}) == AltForm::basis(1, {1, 2}, 2));
  CHECK(ch_of_V(two)[1] == AltForm::basis(1, {1, 2}, -2));
}

TEST_CASE("acyclic volume examples") {
  // q = 0: a projective space of dimension N = R - 1
  for (long rank = 1; rank <= 4; ++rank) {
    const AcyclicData data = flat_data(0, rank + 2, 2, parse_rational("1/2"));
    const long n = rank - 1;
    CHECK(acyclic_volume(data) ==
          pow(t + TPoly(parse_rational("1/2")), static_cast<unsigned long>(n)) * Rational(Rational(1) / factorial(n)));
  }
  // q = 1, κ = 0: only θ ∧ s_0 reaches the top degree
  for (long rank = 1; rank <= 4; ++rank) {
    const AcyclicData data = flat_data(1, rank, 0, -1);
    CHECK(acyclic_volume(data) ==
          pow(t - TPoly(1), static_cast<unsigned long>(rank - 1)) * Rational(Rational(1) / factorial(rank - 1)));
  }
  CHECK(acyclic_volume(curve_acyclic_data(1, 1, 0, -1)) == t);  // deg_E + 𝔱 + 1 at deg_E = -1

  CHECK_THROWS_WITH_AS(acyclic_volume(flat_data(0, 1, 1, 0)), "empty projective bundle", ComputationError);
  CHECK_THROWS_WITH_AS(acyclic_volume(flat_data(0, 1, 3, 0)), "empty projective bundle", ComputationError);
  AcyclicData half = flat_data(0, 1, 0, 0);
  half.n = 2;
  half.pairings = {Rational(1), Rational(0), Rational(1)};
  CHECK_THROWS_WITH_AS(acyclic_volume(half), "bundle rank must be an integer", ComputationError);
}

TEST_CASE("curve acyclic data") {
  for (long g = 0; g <= 3; ++g) {
    for (long d = 0; d <= 5; ++d) {
      const AcyclicData data = curve_acyclic_data(g, 1, 0, -d);
      CHECK(data.bundle_rank() == d + 1 - g);
      CHECK(data.q == g);
      CHECK(data.deg_E == -d);
    }
  }
  CHECK(curve_acyclic_data(0, 2, 4, 1).kappa.empty());
  CHECK(curve_pair_in_acyclic_range(2, 1, 6, 3));
  CHECK_FALSE(curve_pair_in_acyclic_range(2, 1, 5, 3));
}

TEST_CASE("acyclic and Poincaré volumes agree on curves") {
  for (long g = 0; g <= 3; ++g) {
    for (long d = std::max(0L, 2 * g - 1); d <= 2 * g + 4; ++d) {
      for (long m : {-2L, 0L, 3L}) {
        const long deg_E0 = m + d;
        REQUIRE(curve_pair_in_acyclic_range(g, 1, deg_E0, m) == (d > 2 * g - 2));
        CHECK(acyclic_volume(curve_acyclic_data(g, 1, deg_E0, m)) == symmetric_power_volume({g, m, d}));
      }
    }
  }
}
