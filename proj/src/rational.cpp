#include "quotvol/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "quotvol/errors.hpp"

namespace quotvol {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational factorial(long n) {
  if (n < 0) throw ComputationError("factorial of a negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational falling_factorial(long g, long k) {
  if (g < 0 || k < 0) throw ComputationError("falling factorial needs non-negative arguments");
  if (k > g) return Rational(0);
  Integer p = 1;
  for (long i = 0; i < k; ++i) p *= g - i;
  return Rational(p);
}

Rational binomial(const Rational& e, long k) {
  if (k < 0) return Rational(0);
  Rational num = 1;
  for (long i = 0; i < k; ++i) num *= e - i;
  return num / factorial(k);
}

Rational power(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw ComputationError("negative power of zero");
    return power(Rational(1) / base, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace quotvol
