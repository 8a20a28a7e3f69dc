#include "quotvol/grothendieck.hpp"

#include "quotvol/errors.hpp"

namespace quotvol {

EmbeddingParams embedding_params(const QuotProblem& p, long n) {
  p.validate();
  const long r = p.rank();
  EmbeddingParams e;
  e.n = n;
  e.s = p.kernel_degree() + r * (n - p.g + 1);
  e.sections = p.total_degree() + r * (n - p.g + 1);
  if (e.s >= 0 && e.sections >= e.s) {
    mpz_bin_uiui(e.ambient_dimension.get_mpz_t(), static_cast<unsigned long>(e.sections),
                 static_cast<unsigned long>(e.s));
    e.ambient_dimension -= 1;
  } else {
    e.ambient_dimension = -1;
  }
  e.embedding_guaranteed = n >= p.g + p.d;
  return e;
}

Integer grothendieck_degree(const QuotProblem& p, long n, const LocalizationOptions& options) {
  const TPoly v = quot_volume(p, std::nullopt, options);
  const Rational value = factorial(static_cast<long>(p.rank()) * p.d) * v(Rational(n - (p.g - 1)));
  if (!is_integer(value)) throw ComputationError("degree integrality violated");
  return value.get_num();
}

}  // namespace quotvol
