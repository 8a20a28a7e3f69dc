#pragma once

#include "quotvol/localization.hpp"

namespace quotvol {

// Data of j_n: Quot -> Gr_s(V) -> P(∧^s V) with V = H^0(E0(n x0)).
struct EmbeddingParams {
  long n = 0;
  long s = 0;                  // deg E + r(n - g + 1), the Grassmannian plane dimension
  long sections = 0;           // dim V = l + r(n - g + 1) when h^1 vanishes
  Integer ambient_dimension;   // dim P(∧^s V) = C(dim V, s) - 1; -1 if s is out of range
  bool embedding_guaranteed = false;  // false for n < g + d (heuristic threshold)
};

EmbeddingParams embedding_params(const QuotProblem& p, long n);

/// (rd)! · v(n - ḡ). Throws "degree integrality violated" if the value is
/// not an integer.
Integer grothendieck_degree(const QuotProblem& p, long n, const LocalizationOptions& options = {});

}  // namespace quotvol
