#include "quotvol/localization.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "quotvol/errors.hpp"

namespace quotvol {

long QuotProblem::total_degree() const { return std::accumulate(l.begin(), l.end(), 0L); }

void QuotProblem::validate() const {
  if (g < 0) throw ComputationError("genus must be non-negative");
  if (l.empty()) throw ComputationError("rank must be positive");
  if (d < 0) throw ComputationError("length d must be non-negative");
}

namespace {

void compositions_into(long remaining, std::size_t slot, Composition& current,
                       std::vector<Composition>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (long part = remaining; part >= 0; --part) {
    current[slot] = part;
    compositions_into(remaining - part, slot + 1, current, out);
  }
}

ULaurent u_monomial(const Rational& c, int k) { return ULaurent::monomial(TPoly(c), k); }

}  // namespace

std::vector<Composition> compositions(long d, int r) {
  if (r < 1 || d < 0) return {};
  std::vector<Composition> out;
  Composition current(static_cast<std::size_t>(r), 0);
  compositions_into(d, 0, current, out);
  return out;
}

std::vector<TPoly> stability_weights(const QuotProblem& p, const Composition& c) {
  std::vector<TPoly> s;
  for (std::size_t i = 0; i < p.l.size(); ++i) s.push_back(TPoly::variable() + TPoly(p.l[i] - c[i]));
  return s;
}

void require_distinct(const WeightVector& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) throw ComputationError("weights must be pairwise distinct");
    }
  }
}

TruncSeries integrand(const QuotProblem& p, const Composition& c, const WeightVector& w) {
  p.validate();
  const std::size_t r = p.l.size();
  if (c.size() != r || w.size() != r) throw ComputationError("composition/weight length must equal rank");
  require_distinct(w);

  std::vector<int> caps;
  for (long part : c) caps.push_back(static_cast<int>(part));
  const long gbar = p.g - 1;
  const std::vector<TPoly> s = stability_weights(p, c);

  TruncSeries omega(caps);
  for (std::size_t i = 0; i < r; ++i) {
    omega += TruncSeries::x(caps, i) * ULaurent(s[i]) + TruncSeries::y(caps, i);
    omega -= TruncSeries::constant(caps, ULaurent::monomial(s[i] * w[i], 1));
  }
  TruncSeries f = series_pow_int(omega, static_cast<long>(r) * p.d);

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const TruncSeries base =
          TruncSeries::constant(caps, u_monomial(w[j] - w[i], 1)) + TruncSeries::x(caps, i);
      f = f * series_pow_int(base, gbar + p.l[i] - c[i] - p.l[j]);
      if (caps[i] > 0) f = f * series_exp(TruncSeries::y(caps, i) * series_pow_int(base, -1));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const TruncSeries base = TruncSeries::constant(caps, u_monomial(w[j] - w[i], 1)) +
                               TruncSeries::x(caps, i) - TruncSeries::x(caps, j);
      f = f * series_pow_int(base, -2 * gbar);
    }
  }
  return f;
}

TPoly evaluate_composition(const QuotProblem& p, const Composition& c, const WeightVector& w,
                           std::size_t* checked) {
  const TruncSeries f = integrand(p, c, w);
  TPoly total;
  for (const auto& [e, coeff] : f.terms()) {
    bool top = true;
    for (std::size_t i = 0; i < c.size() && top; ++i) top = e[2 * i] + e[2 * i + 1] == c[i];
    if (!top) continue;
    if (checked != nullptr) ++*checked;
    if (coeff.lowest_exponent() != 0 || coeff.highest_exponent() != 0) {
      throw ComputationError("nonzero u-degree in top coefficient");
    }
    Rational theta_weight = 1;
    for (std::size_t i = 0; i < c.size(); ++i) theta_weight *= falling_factorial(p.g, e[2 * i + 1]);
    if (theta_weight != 0) total += u_coefficient(coeff, 0) * theta_weight;
  }
  return total;
}

int localization_sign(const QuotProblem& p) {
  const long r = p.rank();
  const long exponent = (p.g - 1) * (r * (r - 1) / 2) + (r - 1) * (p.total_degree() - p.d);
  return exponent % 2 == 0 ? 1 : -1;
}

VolumeReport quot_volume_report(const QuotProblem& p, const WeightVector& w,
                                const LocalizationOptions& options) {
  p.validate();
  require_distinct(w);
  const std::vector<Composition> comps = compositions(p.d, p.rank());
  std::vector<TPoly> contributions(comps.size());
  std::vector<std::size_t> checked(comps.size(), 0);

  auto evaluate = [&](std::size_t k) {
    TPoly value = evaluate_composition(p, comps[k], w, &checked[k]);
    if (options.hook) value = options.hook(comps[k], std::move(value));
    contributions[k] = std::move(value);
  };

  const unsigned workers = std::min<std::size_t>(std::max(1U, options.threads), comps.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < comps.size(); ++k) evaluate(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = next++; k < comps.size(); k = next++) evaluate(k);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VolumeReport report;
  report.components = comps.size();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    report.volume += contributions[k];
    report.monomials_checked += checked[k];
  }
  const long dim = static_cast<long>(p.rank()) * p.d;
  report.volume *= Rational(Rational(localization_sign(p)) / factorial(dim));
  return report;
}

TPoly quot_volume(const QuotProblem& p, const std::optional<WeightVector>& w,
                  const LocalizationOptions& options) {
  return quot_volume_report(p, w ? *w : default_weights(p.rank()), options).volume;
}

WeightVector default_weights(int r) {
  WeightVector w;
  for (int i = 1; i <= r; ++i) w.emplace_back(i);
  return w;
}

WeightVector prime_weights(int r) {
  WeightVector w;
  for (long n = 2; static_cast<int>(w.size()) < r; ++n) {
    bool prime = true;
    for (long k = 2; k * k <= n && prime; ++k) prime = n % k != 0;
    if (prime) w.emplace_back(n);
  }
  return w;
}

WeightVector random_weights(int r, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  WeightVector w;
  while (static_cast<int>(w.size()) < r) {
    const long num = static_cast<long>(gen() % 41) - 20;
    const long den = static_cast<long>(gen() % 9) + 1;
    Rational candidate(num);
    candidate /= den;
    if (std::find(w.begin(), w.end(), candidate) == w.end()) w.push_back(candidate);
  }
  return w;
}

std::vector<WeightVector> candidate_weights(int r) {
  return {default_weights(r), prime_weights(r), random_weights(r)};
}

WeightCheck verify_weight_independence(const QuotProblem& p, std::span<const WeightVector> ws,
                                       const WeightedContributionHook& hook, unsigned threads) {
  if (ws.size() < 2) throw ComputationError("need at least two weight vectors");
  WeightCheck check;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    require_distinct(ws[k]);
    LocalizationOptions options;
    options.threads = threads;
    if (hook) {
      options.hook = [&hook, k](const Composition& c, TPoly v) { return hook(k, c, std::move(v)); };
    }
    check.weights.push_back(ws[k]);
    check.volumes.push_back(quot_volume_report(p, ws[k], options).volume);
  }
  check.pass = std::all_of(check.volumes.begin(), check.volumes.end(),
                           [&](const TPoly& v) { return v == check.volumes.front(); });
  return check;
}

}  // namespace quotvol
