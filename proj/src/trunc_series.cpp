#include "quotvol/trunc_series.hpp"

#include <numeric>
#include <utility>

#include "quotvol/errors.hpp"

namespace quotvol {

TruncSeries::TruncSeries(std::vector<int> caps) : caps_(std::move(caps)) {
  for (int c : caps_) {
    if (c < 0) throw ComputationError("series caps must be non-negative");
  }
}

TruncSeries TruncSeries::constant(std::vector<int> caps, const ULaurent& c) {
  TruncSeries s(std::move(caps));
  s.add_term(Exponents(2 * s.rank(), 0), c);
  return s;
}

TruncSeries TruncSeries::x(std::vector<int> caps, std::size_t i) {
  TruncSeries s(std::move(caps));
  if (i >= s.rank()) throw ComputationError("series variable index out of range");
  Exponents e(2 * s.rank(), 0);
  e[2 * i] = 1;
  s.add_term(e, ULaurent(1));
  return s;
}

TruncSeries TruncSeries::y(std::vector<int> caps, std::size_t i) {
  TruncSeries s(std::move(caps));
  if (i >= s.rank()) throw ComputationError("series variable index out of range");
  Exponents e(2 * s.rank(), 0);
  e[2 * i + 1] = 1;
  s.add_term(e, ULaurent(1));
  return s;
}

bool TruncSeries::within_caps(const Exponents& e) const {
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (e[2 * i] + e[2 * i + 1] > caps_[i]) return false;
  }
  return true;
}

void TruncSeries::require_same_caps(const TruncSeries& other) const {
  if (caps_ != other.caps_) throw ComputationError("series cap mismatch");
}

void TruncSeries::add_term(const Exponents& e, const ULaurent& c) {
  if (e.size() != 2 * caps_.size()) throw ComputationError("exponent vector has wrong length");
  if (c.is_zero() || !within_caps(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ULaurent TruncSeries::constant_term() const {
  const auto it = terms_.find(Exponents(2 * caps_.size(), 0));
  return it == terms_.end() ? ULaurent() : it->second;
}

TruncSeries TruncSeries::nilpotent_part() const {
  TruncSeries r = *this;
  r.terms_.erase(Exponents(2 * caps_.size(), 0));
  return r;
}

int TruncSeries::nilpotency_bound() const { return std::accumulate(caps_.begin(), caps_.end(), 0); }

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_caps(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_caps(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const ULaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_caps(b);
  TruncSeries r(a.caps_);
  TruncSeries::Exponents e(a.caps_.size() * 2);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      if (!r.within_caps(e)) continue;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

TruncSeries series_pow_int(const TruncSeries& base, long e) {
  const std::vector<int> caps(base.caps().begin(), base.caps().end());
  const ULaurent c = base.constant_term();
  if (e < 0 && !c.is_unit()) throw ComputationError("non-unit base for negative power");
  const TruncSeries z = base.nilpotent_part();

  TruncSeries result(caps);
  TruncSeries z_power = TruncSeries::constant(caps, ULaurent(1));
  for (long k = 0; k <= base.nilpotency_bound(); ++k) {
    if (e >= 0 && k > e) break;
    if (z_power.is_zero()) break;
    const Rational binom = binomial(Rational(e), k);
    result += z_power * (pow(c, e - k) * binom);
    z_power = z_power * z;
  }
  return result;
}

TruncSeries series_exp(const TruncSeries& arg) {
  if (!arg.constant_term().is_zero()) {
    throw ComputationError("exponential of non-nilpotent argument");
  }
  const std::vector<int> caps(arg.caps().begin(), arg.caps().end());
  TruncSeries result = TruncSeries::constant(caps, ULaurent(1));
  TruncSeries term = result;
  for (long k = 1; k <= arg.nilpotency_bound(); ++k) {
    term = term * arg;
    if (term.is_zero()) break;
    const Rational inv_k = Rational(1) / k;
    term *= ULaurent(inv_k);
    result += term;
  }
  return result;
}

}  // namespace quotvol
