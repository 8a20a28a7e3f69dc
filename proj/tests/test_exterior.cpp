#include <doctest.h>

#include "generators.hpp"
#include "quotvol/errors.hpp"
#include "quotvol/exterior.hpp"

using namespace quotvol;
using quotvol::testing::Gen;

namespace {

AltForm lam(int q, std::vector<int> idx, const Rational& c = 1) { return AltForm::basis(q, idx, c); }

// Pfaffian by expansion along the first row.
Rational pfaffian(const RationalMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Rational sum = 0;
  for (std::size_t j = 1; j < n; ++j) {
    RationalMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      if (r == j) continue;
      std::vector<Rational> row;
      for (std::size_t c = 1; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    const Rational term = a[0][j] * pfaffian(minor);
    sum += (j % 2 == 1) ? term : Rational(-term);
  }
  return sum;
}

RationalMatrix random_antisymmetric(Gen& gen, int q) {
  RationalMatrix h(2 * q, std::vector<Rational>(2 * q, 0));
  for (int i = 0; i < 2 * q; ++i) {
    for (int j = i + 1; j < 2 * q; ++j) {
      h[i][j] = gen.rational();
      h[j][i] = -h[i][j];
    }
  }
  return h;
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(lam(1, {1}), lam(1, {2})) == lam(1, {1, 2}));
  CHECK(wedge(lam(1, {1}), lam(1, {1})).is_zero());
  CHECK(wedge(lam(1, {2}), lam(1, {1})) == lam(1, {1, 2}, -1));
  CHECK(lam(2, {3, 1, 2}) == lam(2, {1, 2, 3}));
  CHECK(lam(2, {2, 1, 3}) == lam(2, {1, 2, 3}, -1));
  CHECK(lam(2, {1, 1}).is_zero());
  CHECK_THROWS_WITH_AS(wedge(lam(1, {1}), lam(2, {1})), "rank mismatch", ComputationError);
  CHECK_THROWS_AS(AltForm(16), ComputationError);
  CHECK_THROWS_AS(AltForm(-1), ComputationError);
}

TEST_CASE("exp_even examples") {
  CHECK(exp_even(AltForm(2)) == AltForm::one(2));
  CHECK(exp_even(lam(1, {1, 2})) == AltForm::one(1) + lam(1, {1, 2}));
  const AltForm theta = lam(2, {1, 2}) + lam(2, {3, 4});
  CHECK(exp_even(theta) == AltForm::one(2) + theta + lam(2, {1, 2, 3, 4}));
  // oracle: direct wedge expansion
  CHECK(exp_even(theta) == AltForm::one(2) + theta + wedge(theta, theta) * Rational(1, 2));
  CHECK_THROWS_WITH_AS(exp_even(lam(2, {1})), "exponential requires even form", ComputationError);
  CHECK_THROWS_AS(exp_even(AltForm::one(2)), ComputationError);
}

TEST_CASE("evaluate_top examples") {
  CHECK(evaluate_top(lam(3, {1, 2, 3, 4, 5, 6})) == 1);
  const AltForm theta = lam(2, {1, 2}) + lam(2, {3, 4});
  CHECK(evaluate_top(wedge_power(theta, 2)) == 2);
  CHECK(evaluate_top(theta) == 0);
  CHECK(evaluate_top(AltForm::one(0)) == 1);
}

TEST_CASE("theta_form examples") {
  RationalMatrix h1 = {{0, 1}, {-1, 0}};
  CHECK(theta_form(1, h1) == lam(1, {1, 2}));
  CHECK(theta_form(2, standard_symplectic(2)) == lam(2, {1, 2}) + lam(2, {3, 4}));
  CHECK(theta_form(2, RationalMatrix(4, std::vector<Rational>(4, 0))).is_zero());
  RationalMatrix bad = {{0, 1}, {1, 0}};
  CHECK_THROWS_WITH_AS(theta_form(1, bad), "pairing matrix must be antisymmetric", ComputationError);
  CHECK_THROWS_AS(theta_form(2, h1), ComputationError);
}

TEST_CASE("top power of theta is q! times the Pfaffian") {
  Gen gen(21);
  for (int q = 1; q <= 3; ++q) {
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix h = random_antisymmetric(gen, q);
      const AltForm theta = theta_form(q, h);
      CHECK(evaluate_top(wedge_power(theta, q)) / factorial(q) == pfaffian(h));
      CHECK(evaluate_top(exp_even(theta)) == pfaffian(h));
    }
  }
}

TEST_CASE("graded commutativity and associativity") {
  Gen gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = static_cast<int>(gen.integer(1, 4));
    const int da = static_cast<int>(gen.integer(0, 2 * q)), db = static_cast<int>(gen.integer(0, 2 * q));
    const AltForm a = gen.homogeneous_form(q, da), b = gen.homogeneous_form(q, db);
    const AltForm c = gen.form(q);
    const Rational sign = (da * db) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * sign);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
    if (da % 2 == 1) CHECK(wedge(a, a).is_zero());
  }
}

TEST_CASE("exp_even turns sums into products") {
  Gen gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = static_cast<int>(gen.integer(1, 4));
    AltForm a = gen.homogeneous_form(q, 2);
    AltForm b = gen.homogeneous_form(q, 2) + (q >= 2 ? gen.homogeneous_form(q, 4) : AltForm(q));
    CHECK(wedge(exp_even(a), exp_even(b)) == exp_even(a + b));
    CHECK(wedge(exp_even(a), exp_even(-a)) == AltForm::one(q));
  }
}

TEST_CASE("component and degree") {
  const AltForm f = AltForm::one(2) + lam(2, {1, 2}) + lam(2, {1, 2, 3});
  CHECK_FALSE(f.degree().has_value());
  CHECK(f.component(2) == lam(2, {1, 2}));
  CHECK(f.component(2).degree() == 2);
  CHECK(f.component(4).is_zero());
  CHECK(AltForm(2).is_homogeneous_of_degree(3));
  CHECK(f.coefficient({1, 2, 3}) == 1);
  CHECK(indices_of(0b1011) == std::vector<int>{1, 2, 4});
}
