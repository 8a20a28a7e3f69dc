#include "quotvol/ulaurent.hpp"

#include <algorithm>

#include "quotvol/errors.hpp"

namespace quotvol {

ULaurent::ULaurent(const TPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

ULaurent ULaurent::monomial(const TPoly& c, int k) {
  ULaurent r(c);
  if (!r.is_zero()) r.lowest_ = k;
  return r;
}

void ULaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  const auto first =
      std::find_if(coeffs_.begin(), coeffs_.end(), [](const TPoly& p) { return !p.is_zero(); });
  lowest_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) lowest_ = 0;
}

TPoly ULaurent::coefficient(int k) const {
  if (is_zero() || k < lowest_ || k > highest_exponent()) return {};
  return coeffs_[static_cast<std::size_t>(k - lowest_)];
}

bool ULaurent::is_unit() const { return coeffs_.size() == 1 && coeffs_.front().degree() == 0; }

ULaurent ULaurent::inverse() const {
  if (!is_unit()) throw ComputationError("non-unit base for negative power");
  return monomial(TPoly(Rational(1) / coeffs_.front().coefficient(0)), -lowest_);
}

ULaurent& ULaurent::operator+=(const ULaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(lowest_, rhs.lowest_);
  const int hi = std::max(highest_exponent(), rhs.highest_exponent());
  std::vector<TPoly> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + (lowest_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out[i + (rhs.lowest_ - lo)] += rhs.coeffs_[i];
  }
  lowest_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& rhs) { return *this += -rhs; }

ULaurent& ULaurent::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  trim();
  return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ULaurent r;
  r.lowest_ = a.lowest_ + b.lowest_;
  r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

ULaurent ULaurent::operator-() const {
  ULaurent r = *this;
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

ULaurent pow(const ULaurent& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  ULaurent result(1);
  ULaurent sq = base;
  while (e > 0) {
    if (e & 1L) result = result * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return result;
}

TPoly u_coefficient(const ULaurent& s, int k) { return s.coefficient(k); }

}  // namespace quotvol
