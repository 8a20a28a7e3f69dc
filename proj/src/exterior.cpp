#include "quotvol/exterior.hpp"

#include <algorithm>
#include <bit>

#include "quotvol/errors.hpp"

namespace quotvol {

namespace {

// Sign of λ_A ∧ λ_B relative to λ_{A∪B}: (-1)^{#(a,b) in A×B with a > b}.
int shuffle_sign(AltForm::IndexSet a, AltForm::IndexSet b) {
  int inversions = 0;
  for (AltForm::IndexSet rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const AltForm::IndexSet above = j + 1 >= 32 ? 0U : (~AltForm::IndexSet{0} << (j + 1));
    inversions += std::popcount(a & above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

AltForm::AltForm(int q) : q_(q) {
  if (q < 0 || q > kMaxQ) throw ComputationError("lattice rank out of supported range");
}

AltForm AltForm::one(int q) {
  AltForm f(q);
  f.add_term(0, 1);
  return f;
}

AltForm AltForm::basis(int q, const std::vector<int>& indices, const Rational& coeff) {
  AltForm f(q);
  AltForm::IndexSet set = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > 2 * q) throw ComputationError("basis index out of range");
    const AltForm::IndexSet bit = AltForm::IndexSet{1} << (i - 1);
    if (set & bit) return f;
    sign *= shuffle_sign(set, bit);
    set |= bit;
  }
  f.add_term(set, coeff * sign);
  return f;
}

std::optional<int> AltForm::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int k = std::popcount(terms_.begin()->first);
  for (const auto& [set, c] : terms_) {
    if (std::popcount(set) != k) return std::nullopt;
  }
  return k;
}

bool AltForm::is_homogeneous_of_degree(int k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const auto& t) { return std::popcount(t.first) == k; });
}

AltForm AltForm::component(int k) const {
  AltForm out(q_);
  for (const auto& [set, c] : terms_) {
    if (std::popcount(set) == k) out.terms_.emplace(set, c);
  }
  return out;
}

Rational AltForm::coefficient(const std::vector<int>& increasing_indices) const {
  AltForm::IndexSet set = 0;
  for (int i : increasing_indices) set |= AltForm::IndexSet{1} << (i - 1);
  const auto it = terms_.find(set);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AltForm::add_term(IndexSet set, const Rational& c) {
  if (c == 0) return;
  if ((set >> (2 * q_)) != 0) throw ComputationError("index set exceeds lattice rank");
  auto [it, inserted] = terms_.try_emplace(set, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AltForm& AltForm::operator+=(const AltForm& rhs) {
  if (rhs.q_ != q_) throw ComputationError("rank mismatch");
  for (const auto& [set, c] : rhs.terms_) add_term(set, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& rhs) {
  if (rhs.q_ != q_) throw ComputationError("rank mismatch");
  for (const auto& [set, c] : rhs.terms_) add_term(set, -c);
  return *this;
}

AltForm& AltForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [set, coeff] : terms_) coeff *= c;
  return *this;
}

std::vector<int> indices_of(AltForm::IndexSet set) {
  std::vector<int> out;
  for (; set != 0; set &= set - 1) out.push_back(std::countr_zero(set) + 1);
  return out;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.q() != b.q()) throw ComputationError("rank mismatch");
  AltForm out(a.q());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (sa & sb) continue;
      out.add_term(sa | sb, shuffle_sign(sa, sb) * ca * cb);
    }
  }
  return out;
}

AltForm wedge_power(const AltForm& a, int k) {
  AltForm out = AltForm::one(a.q());
  for (int i = 0; i < k && !out.is_zero(); ++i) out = wedge(out, a);
  return out;
}

AltForm exp_even(const AltForm& a) {
  for (const auto& [set, c] : a.terms()) {
    const int k = std::popcount(set);
    if (k % 2 != 0) throw ComputationError("exponential requires even form");
    if (k == 0) throw ComputationError("exponential requires a form without degree-0 part");
  }
  AltForm result = AltForm::one(a.q());
  AltForm term = result;
  for (int k = 1; 2 * k <= a.lattice_rank(); ++k) {
    term = wedge(term, a);
    if (term.is_zero()) break;
    const Rational inv_k = Rational(1) / k;
    term *= inv_k;
    result += term;
  }
  return result;
}

Rational evaluate_top(const AltForm& a) {
  const int n = a.lattice_rank();
  const AltForm::IndexSet top = n >= 32 ? ~AltForm::IndexSet{0} : ((AltForm::IndexSet{1} << n) - 1);
  const auto it = a.terms().find(top);
  return it == a.terms().end() ? Rational(0) : it->second;
}

AltForm theta_form(int q, const RationalMatrix& h) {
  const auto n = static_cast<std::size_t>(2 * q);
  if (h.size() != n) throw ComputationError("pairing matrix must be 2q x 2q");
  for (const auto& row : h) {
    if (row.size() != n) throw ComputationError("pairing matrix must be 2q x 2q");
  }
  AltForm theta(q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (h[i][j] != -h[j][i]) throw ComputationError("pairing matrix must be antisymmetric");
      if (i != j) theta.add_term((AltForm::IndexSet{1} << i) | (AltForm::IndexSet{1} << j), h[i][j]);
    }
  }
  return theta;
}

RationalMatrix standard_symplectic(int q) {
  const auto n = static_cast<std::size_t>(2 * q);
  RationalMatrix h(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 0; k < n; k += 2) {
    h[k][k + 1] = 1;
    h[k + 1][k] = -1;
  }
  return h;
}

}  // namespace quotvol
