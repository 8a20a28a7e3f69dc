#include "quotvol/tpoly.hpp"

#include <algorithm>
#include <utility>

namespace quotvol {

TPoly::TPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

TPoly::TPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

TPoly TPoly::variable() { return TPoly(std::vector<Rational>{0, 1}); }

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational TPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational TPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

TPoly& TPoly::operator*=(const TPoly& rhs) { return *this = *this * rhs; }

TPoly& TPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TPoly pow(const TPoly& base, unsigned long e) {
  TPoly result(1);
  TPoly sq = base;
  while (e > 0) {
    if (e & 1UL) result *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return result;
}

namespace {

template <typename CoeffFn, typename PowerFn>
std::string render(const TPoly& p, CoeffFn coeff_text, PowerFn power_text) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coefficient(k);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += coeff_text(mag, false);
    } else {
      if (mag != 1) out += coeff_text(mag, true);
      out += power_text(k);
    }
  }
  return out;
}

}  // namespace

std::string to_plain(const TPoly& p, std::string_view var) {
  const std::string v(var);
  return render(
      p,
      [](const Rational& c, bool before_var) {
        return before_var && !is_integer(c) ? "(" + to_string(c) + ")" : to_string(c);
      },
      [&](int k) { return k == 1 ? v : v + "^" + std::to_string(k); });
}

std::string to_latex(const TPoly& p) {
  return render(
      p,
      [](const Rational& c, bool) {
        if (is_integer(c)) return c.get_num().get_str();
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
      },
      [](int k) {
        return k == 1 ? std::string("\\mathfrak{t}") : "\\mathfrak{t}^{" + std::to_string(k) + "}";
      });
}

}  // namespace quotvol
