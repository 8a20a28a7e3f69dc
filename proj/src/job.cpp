#include "quotvol/job.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "quotvol/abelian.hpp"
#include "quotvol/errors.hpp"
#include "quotvol/grothendieck.hpp"
#include "quotvol/localization.hpp"

namespace quotvol::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string child(const std::string& parent, const std::string& key) { return parent + "/" + key; }
std::string child(const std::string& parent, std::size_t index) {
  return parent + "/" + std::to_string(index);
}

// --- field access ----------------------------------------------------------

long as_long(const json& value, const std::string& ptr) {
  if (!value.is_number_integer()) throw InputError(ptr, "expected an integer");
  return value.get<long>();
}

Rational as_rational(const json& value, const std::string& ptr) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) throw InputError(ptr, "expected a rational string \"num/den\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(ptr, e.what());
  }
}

const json* find(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long require_long(const json& spec, const std::string& key) {
  const json* v = find(spec, key);
  if (v == nullptr) throw InputError(child("", key), "missing required field");
  return as_long(*v, child("", key));
}

long require_non_negative(const json& spec, const std::string& key) {
  const long v = require_long(spec, key);
  if (v < 0) throw InputError(child("", key), "must be non-negative");
  return v;
}

std::vector<long> long_list(const json& value, const std::string& ptr) {
  if (!value.is_array()) throw InputError(ptr, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(as_long(value[i], child(ptr, i)));
  return out;
}

// Either an integer or an inclusive [lo, hi] pair.
std::pair<long, long> range_field(const json& spec, const std::string& key) {
  const json* v = find(spec, key);
  const std::string ptr = child("", key);
  if (v == nullptr) throw InputError(ptr, "missing required field");
  if (v->is_number_integer()) {
    const long x = v->get<long>();
    return {x, x};
  }
  if (v->is_array() && v->size() == 2) return {as_long((*v)[0], child(ptr, 0)), as_long((*v)[1], child(ptr, 1))};
  throw InputError(ptr, "expected an integer or an inclusive [lo, hi] range");
}

WeightVector weight_vector(const json& value, const std::string& ptr, std::size_t rank) {
  if (!value.is_array()) throw InputError(ptr, "expected an array of rationals");
  WeightVector w;
  for (std::size_t i = 0; i < value.size(); ++i) w.push_back(as_rational(value[i], child(ptr, i)));
  if (w.size() != rank) throw InputError(ptr, "weight vector length must equal r");
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) throw InputError(ptr, "weights must be pairwise distinct");
    }
  }
  return w;
}

std::vector<WeightVector> weight_list(const json& spec, std::size_t rank) {
  std::vector<WeightVector> out;
  const json* v = find(spec, "weights");
  if (v == nullptr) return out;
  if (!v->is_array()) throw InputError("/weights", "expected an array of weight vectors");
  for (std::size_t k = 0; k < v->size(); ++k) out.push_back(weight_vector((*v)[k], child("/weights", k), rank));
  return out;
}

QuotProblem quot_problem(const json& spec) {
  QuotProblem p;
  p.g = require_non_negative(spec, "g");
  p.d = require_non_negative(spec, "d");
  const json* l = find(spec, "l");
  if (l == nullptr) throw InputError("/l", "missing required field");
  p.l = long_list(*l, "/l");
  if (p.l.empty()) throw InputError("/l", "need at least one line bundle degree");
  if (const json* r = find(spec, "r")) {
    if (as_long(*r, "/r") != p.rank()) throw InputError("/r", "r must equal the length of l");
  }
  return p;
}

// --- output helpers --------------------------------------------------------

json polynomial_json(const TPoly& v) {
  json coeffs = json::array();
  for (const Rational& c : v.coefficients()) coeffs.push_back(to_string(c));
  return json{{"variable", "ttilde"}, {"coefficients", coeffs}, {"text", to_plain(v)}};
}

TPoly polynomial_from_json(const json& volume) {
  std::vector<Rational> c;
  for (const auto& text : volume["coefficients"]) c.push_back(parse_rational(text.get<std::string>()));
  return TPoly(std::move(c));
}

std::string latex_line(const TPoly& v) { return "V_{\\mathfrak{t}} = " + to_latex(v); }

// 𝔱-mode handling shared by the volume commands. `dim` is the complex
// dimension of the moduli space, `base_dim` the dimension n of X.
void apply_t_mode(const json& spec, const TPoly& v, long dim, long base_dim, json& out) {
  const json* t = find(spec, "t");
  if (t == nullptr) return;
  if (!t->is_object()) throw InputError("/t", "expected an object");
  const std::string mode = t->value("mode", std::string("ttilde-symbolic"));
  if (mode == "ttilde-symbolic") return;
  auto required = [&](const std::string& key) -> Rational {
    const json* f = find(*t, key);
    if (f == nullptr) throw InputError(child("/t", key), "missing required field for mode " + mode);
    return as_rational(*f, child("/t", key));
  };
  if (mode == "ttilde-value") {
    const Rational tt = required("value");
    out["evaluation"] = {{"mode", mode}, {"ttilde", to_string(tt)}, {"volume", to_string(v(tt))}, {"exact", true}};
    return;
  }
  if (mode != "physical-t") throw InputError("/t/mode", "unknown mode '" + mode + "'");
  const Rational t_value = required("value");
  const Rational vol_X = required("vol_X");
  const Rational scale = factorial(base_dim - 1) * vol_X * t_value;
  std::ostringstream subst;
  subst << "ttilde = " << to_string(scale) << "/(2*pi)";
  json eval = {{"mode", mode}, {"substitution", subst.str()}};
  if (const json* probe = find(*t, "pi_probe")) {
    const Rational pi = as_rational(*probe, "/t/pi_probe");
    if (pi <= 0) throw InputError("/t/pi_probe", "pi probe must be positive");
    const Rational tt = scale / (2 * pi);
    const Rational normalized = v(tt);
    eval["exact"] = false;
    eval["pi_probe"] = to_string(pi);
    eval["ttilde"] = to_string(tt);
    eval["volume_normalized"] = to_string(normalized);
    eval["volume"] = to_string(power(4 * pi * pi, dim) * normalized);
  } else if (t->value("pi", std::string()) == "symbolic") {
    eval["exact"] = true;
  } else {
    throw InputError("/t", "physical-t needs \"pi_probe\" or \"pi\": \"symbolic\"");
  }
  out["evaluation"] = eval;
}

// --- commands ---------------------------------------------------------------

json abelian_volume(const json& spec) {
  const long g = require_non_negative(spec, "g");
  const long d = require_non_negative(spec, "d");
  long deg_E = 0;
  if (const json* e = find(spec, "deg_E")) {
    deg_E = as_long(*e, "/deg_E");
  } else {
    const json* l = find(spec, "l");
    if (l == nullptr) throw InputError("/l", "need \"l\" (one degree) or \"deg_E\"");
    const std::vector<long> ls = long_list(*l, "/l");
    if (ls.size() != 1) throw InputError("/l", "abelian volumes need a single line bundle");
    deg_E = ls.front() - d;
  }
  if (const json* r = find(spec, "r")) {
    if (as_long(*r, "/r") != 1) throw InputError("/r", "abelian volumes need r = 1");
  }
  const TPoly v = symmetric_power_volume({g, deg_E, d});
  json out = {{"volume", polynomial_json(v)}, {"dimension", d}, {"deg_E", deg_E}};
  apply_t_mode(spec, v, d, 1, out);
  out["latex"] = latex_line(v);
  return out;
}

AltForm kappa_form(const json& entry, const std::string& ptr, int q) {
  const json* terms = find(entry, "terms");
  if (terms == nullptr || !terms->is_array()) throw InputError(child(ptr, "terms"), "expected an array");
  AltForm form(q);
  for (std::size_t k = 0; k < terms->size(); ++k) {
    const std::string tptr = child(child(ptr, "terms"), k);
    const json& term = (*terms)[k];
    const json* idx = find(term, "indices");
    const json* coeff = find(term, "coeff");
    if (idx == nullptr) throw InputError(child(tptr, "indices"), "missing required field");
    if (coeff == nullptr) throw InputError(child(tptr, "coeff"), "missing required field");
    std::vector<int> indices;
    for (long i : long_list(*idx, child(tptr, "indices"))) {
      if (i < 1 || i > 2 * q) throw InputError(child(tptr, "indices"), "index out of range 1..2q");
      indices.push_back(static_cast<int>(i));
    }
    form += AltForm::basis(q, indices, as_rational(*coeff, child(tptr, "coeff")));
  }
  return form;
}

AcyclicData acyclic_data(const json& spec, json& warnings) {
  if (const json* curve = find(spec, "curve")) {
    auto field = [&](const char* key) {
      const json* f = find(*curve, key);
      if (f == nullptr) throw InputError(child("/curve", key), "missing required field");
      return as_long(*f, child("/curve", key));
    };
    const long g = field("g");
    const long r0 = field("r0");
    const long deg_E0 = field("deg_E0");
    const long m = field("m");
    if (g < 0) throw InputError("/curve/g", "must be non-negative");
    if (r0 < 1) throw InputError("/curve/r0", "must be positive");
    if (g > AltForm::kMaxQ) throw InputError("/curve/g", "genus exceeds supported lattice rank");
    if (!curve_pair_in_acyclic_range(g, r0, deg_E0, m)) {
      warnings.push_back("pair outside the acyclic range deg_E0 > r0*m + 2*r0*(g-1); formula value only");
    }
    return curve_acyclic_data(g, r0, deg_E0, m);
  }
  AcyclicData data;
  data.n = static_cast<int>(require_long(spec, "n_dim"));
  if (data.n < 1) throw InputError("/n_dim", "must be positive");
  data.q = static_cast<int>(require_non_negative(spec, "q"));
  if (data.q > AltForm::kMaxQ) throw InputError("/q", "exceeds supported lattice rank");
  const json* deg = find(spec, "deg_E");
  if (deg == nullptr) throw InputError("/deg_E", "missing required field");
  data.deg_E = as_rational(*deg, "/deg_E");
  const json* pairings = find(spec, "pairings");
  if (pairings == nullptr || !pairings->is_array()) throw InputError("/pairings", "expected an array");
  if (pairings->size() != static_cast<std::size_t>(data.n) + 1) {
    throw InputError("/pairings", "need n_dim + 1 pairings");
  }
  for (std::size_t s = 0; s < pairings->size(); ++s) {
    data.pairings.push_back(as_rational((*pairings)[s], child("/pairings", s)));
  }
  const auto size = static_cast<std::size_t>(2 * data.q);
  const json* h = find(spec, "h");
  if (h == nullptr) {
    if (size != 0) throw InputError("/h", "missing required field");
  } else {
    if (!h->is_array() || h->size() != size) throw InputError("/h", "expected a 2q x 2q matrix");
    for (std::size_t i = 0; i < size; ++i) {
      const std::string rptr = child("/h", i);
      if (!(*h)[i].is_array() || (*h)[i].size() != size) throw InputError(rptr, "expected a row of length 2q");
      std::vector<Rational> row;
      for (std::size_t j = 0; j < size; ++j) row.push_back(as_rational((*h)[i][j], child(rptr, j)));
      data.h.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (data.h[i][j] != -data.h[j][i]) {
          throw InputError(child(child("/h", i), j), "pairing matrix must be antisymmetric");
        }
      }
    }
  }
  if (const json* kappa = find(spec, "kappa")) {
    if (!kappa->is_array()) throw InputError("/kappa", "expected an array");
    for (std::size_t k = 0; k < kappa->size(); ++k) {
      const std::string kptr = child("/kappa", k);
      const json& entry = (*kappa)[k];
      const json* i = find(entry, "i");
      const json* s = find(entry, "s");
      if (i == nullptr) throw InputError(child(kptr, "i"), "missing required field");
      if (s == nullptr) throw InputError(child(kptr, "s"), "missing required field");
      const int iv = static_cast<int>(as_long(*i, child(kptr, "i")));
      const int sv = static_cast<int>(as_long(*s, child(kptr, "s")));
      if (iv < 1 || iv > data.q || sv < 0 || sv > data.n - iv) {
        throw InputError(kptr, "need 1 <= i <= q and 0 <= s <= n_dim - i");
      }
      AltForm form = kappa_form(entry, kptr, data.q);
      if (!form.is_homogeneous_of_degree(2 * iv)) throw InputError(kptr, "kappa form must have degree 2i");
      auto [it, fresh] = data.kappa.try_emplace({iv, sv}, form);
      if (!fresh) it->second += form;
    }
  }
  for (int i = 1; i <= std::min(data.q, data.n); ++i) {
    for (int s = 0; s <= data.n - i; ++s) {
      if (!data.kappa.contains({i, s})) {
        throw InputError("/kappa", "incomplete pairing data: missing (i=" + std::to_string(i) +
                                       ", s=" + std::to_string(s) + ")");
      }
    }
  }
  if (!is_integer(data.bundle_rank())) {
    throw InputError("/pairings", "R = sum (-1)^s P_s / s! must be an integer");
  }
  return data;
}

json acyclic_volume_job(const json& spec) {
  json warnings = json::array();
  const AcyclicData data = acyclic_data(spec, warnings);
  const Rational rank = data.bundle_rank();
  const long dim = rank.get_num().get_si() + data.q - 1;
  const TPoly v = acyclic_volume(data);
  json out = {{"volume", polynomial_json(v)}, {"dimension", dim}, {"bundle_rank", to_string(rank)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  apply_t_mode(spec, v, dim, data.n, out);
  out["latex"] = latex_line(v);
  return out;
}

json quot_volume_job(const json& spec, const RunOptions& options) {
  const QuotProblem p = quot_problem(spec);
  const std::vector<WeightVector> ws = weight_list(spec, p.l.size());
  const WeightVector w = ws.empty() ? default_weights(p.rank()) : ws.front();
  LocalizationOptions lo;
  lo.threads = options.threads;
  const VolumeReport report = quot_volume_report(p, w, lo);
  json weights = json::array();
  for (const Rational& x : w) weights.push_back(to_string(x));
  json out = {{"volume", polynomial_json(report.volume)},
              {"dimension", static_cast<long>(p.rank()) * p.d},
              {"weights", weights},
              {"components", report.components},
              {"u_concentration", {{"pass", true}, {"monomials_checked", report.monomials_checked}}}};
  apply_t_mode(spec, report.volume, static_cast<long>(p.rank()) * p.d, 1, out);
  out["latex"] = latex_line(report.volume);
  return out;
}

json grothendieck_job(const json& spec, const RunOptions& options) {
  const QuotProblem p = quot_problem(spec);
  const long n = require_long(spec, "n");
  if (n < 1) throw InputError("/n", "twist order must be positive");
  LocalizationOptions lo;
  lo.threads = options.threads;
  const TPoly v = quot_volume(p, std::nullopt, lo);
  const Integer degree = grothendieck_degree(p, n, lo);
  const EmbeddingParams e = embedding_params(p, n);
  json out = {{"volume", polynomial_json(v)},
              {"degree", degree.get_str()},
              {"embedding",
               {{"n", e.n},
                {"s", e.s},
                {"sections", e.sections},
                {"ambient_dimension", e.ambient_dimension.get_str()},
                {"guaranteed", e.embedding_guaranteed && degree >= 0}}}};
  json warnings = json::array();
  if (!e.embedding_guaranteed) warnings.push_back("n < g + d: formula value; embedding not guaranteed");
  if (degree < 0) warnings.push_back("negative degree: n is below the embedding range");
  if (!warnings.empty()) out["warnings"] = warnings;
  out["latex"] = "\\deg j_n = " + degree.get_str();
  return out;
}

std::vector<std::vector<long>> splittings(long total, int r, long lo, long hi) {
  std::vector<std::vector<long>> out;
  std::vector<long> current;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    const int slot = static_cast<int>(current.size());
    if (slot == r - 1) {
      if (remaining <= max_part && remaining >= lo) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (long part = std::min(max_part, hi); part >= lo; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, total, hi);
  return out;
}

json verify_job(const json& spec, const RunOptions& options) {
  const std::string suite = spec.value("suite", std::string("weight-independence"));
  json result = {{"suite", suite}};
  if (suite == "weight-independence") {
    const QuotProblem p = quot_problem(spec);
    std::vector<WeightVector> ws = weight_list(spec, p.l.size());
    if (ws.empty()) ws = candidate_weights(p.rank());
    if (ws.size() < 2) throw InputError("/weights", "need at least two weight vectors");
    const WeightCheck check = verify_weight_independence(p, ws, {}, options.threads);
    json polys = json::array();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      json w = json::array();
      for (const Rational& x : ws[k]) w.push_back(to_string(x));
      polys.push_back({{"weights", w}, {"volume", polynomial_json(check.volumes[k])}});
    }
    result["pass"] = check.pass;
    result["candidates"] = ws.size();
    result["polynomials"] = polys;
  } else if (suite == "r1-reduction") {
    const QuotProblem p = quot_problem(spec);
    if (p.rank() != 1) throw InputError("/l", "r1-reduction needs a single line bundle");
    const TPoly loc = quot_volume(p);
    const TPoly closed = symmetric_power_volume({p.g, p.kernel_degree(), p.d});
    result["pass"] = loc == closed;
    result["localization"] = polynomial_json(loc);
    result["closed_form"] = polynomial_json(closed);
  } else if (suite == "splitting-independence") {
    const QuotProblem p = quot_problem(spec);
    const long total = p.total_degree();
    const long center = total / p.rank();
    const long spread = spec.contains("spread") ? require_non_negative(spec, "spread") : 2;
    const auto splits = splittings(total, p.rank(), center - spread - 1, center + spread + 1);
    json rows = json::array();
    std::optional<TPoly> first;
    bool pass = true;
    for (const auto& l : splits) {
      const TPoly v = quot_volume({p.g, l, p.d});
      if (!first) first = v;
      pass = pass && v == *first;
      rows.push_back({{"l", l}, {"volume", polynomial_json(v)}});
    }
    result["pass"] = pass;
    result["candidates"] = splits.size();
    result["polynomials"] = rows;
  } else if (suite == "acyclic-crosscheck") {
    const long g = require_non_negative(spec, "g");
    const long d = require_non_negative(spec, "d");
    const long deg_E0 = spec.contains("l") ? long_list(spec["l"], "/l").at(0) : 0;
    const long m = deg_E0 - d;
    if (d + 1 - g < 1) throw InputError("/d", "need d >= g so that the bundle rank d + 1 - g is positive");
    const TPoly acyc = acyclic_volume(curve_acyclic_data(g, 1, deg_E0, m));
    const TPoly closed = symmetric_power_volume({g, m, d});
    result["pass"] = acyc == closed;
    result["acyclic"] = polynomial_json(acyc);
    result["closed_form"] = polynomial_json(closed);
    if (!curve_pair_in_acyclic_range(g, 1, deg_E0, m)) {
      result["warnings"] = json::array({"d < 2g - 1: outside the acyclic range"});
    }
  } else if (suite == "manton-nasir") {
    const long g = require_non_negative(spec, "g");
    const long d = require_non_negative(spec, "d");
    Rational vol_X = 100;
    if (const json* t = find(spec, "t"); t != nullptr && t->contains("vol_X")) {
      vol_X = as_rational((*t)["vol_X"], "/t/vol_X");
    }
    std::vector<Rational> probes;
    for (const char* text : {"3", "22/7", "333/106", "355/113", "7/2"}) probes.push_back(parse_rational(text));
    if (const json* ps = find(spec, "pi_probes")) {
      if (!ps->is_array() || ps->empty()) throw InputError("/pi_probes", "expected a non-empty array");
      probes.clear();
      for (std::size_t k = 0; k < ps->size(); ++k) probes.push_back(as_rational((*ps)[k], child("/pi_probes", k)));
    }
    bool pass = true;
    json rows = json::array();
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if (probes[k] == 0) throw InputError(child("/pi_probes", k), "pi probe must be nonzero");
      const MantonNasirPair pair = manton_nasir_check(g, d, vol_X, probes[k]);
      const bool ok = pair.from_normalized_volume == power(probes[k], d) * pair.manton_nasir;
      pass = pass && ok;
      rows.push_back({{"pi_probe", to_string(probes[k])},
                      {"normalized_side", to_string(pair.from_normalized_volume)},
                      {"manton_nasir", to_string(pair.manton_nasir)},
                      {"ratio_is_pi_power_d", ok}});
    }
    result["pass"] = pass;
    result["candidates"] = probes.size();
    result["probes"] = rows;
  } else {
    throw InputError("/suite", "unknown suite '" + suite + "'");
  }
  return json{{"verify", result}};
}

json sweep_job(const json& spec, const RunOptions& options) {
  const auto [g_lo, g_hi] = range_field(spec, "g");
  const json* given_l = find(spec, "l");
  const auto [r_lo, r_hi] = (find(spec, "r") == nullptr && given_l != nullptr && given_l->is_array())
                                ? std::pair<long, long>(static_cast<long>(given_l->size()),
                                                        static_cast<long>(given_l->size()))
                                : range_field(spec, "r");
  const auto [d_lo, d_hi] = range_field(spec, "d");
  if (g_lo < 0) throw InputError("/g", "must be non-negative");
  if (r_lo < 1 && r_lo <= r_hi) throw InputError("/r", "rank must be positive");
  if (d_lo < 0) throw InputError("/d", "must be non-negative");
  const json* fixed_l = find(spec, "l");
  const json* l_total = find(spec, "l_total");
  if ((fixed_l == nullptr) == (l_total == nullptr)) {
    throw InputError("/l", "give exactly one of \"l\" (fixed splitting) or \"l_total\"");
  }
  std::vector<QuotProblem> rows;
  for (long g = g_lo; g <= g_hi; ++g) {
    for (long r = r_lo; r <= r_hi; ++r) {
      std::vector<std::vector<long>> ls;
      if (fixed_l != nullptr) {
        std::vector<long> l = long_list(*fixed_l, "/l");
        if (static_cast<long>(l.size()) != r) throw InputError("/l", "length of l must equal r");
        ls.push_back(std::move(l));
      } else {
        const long total = as_long(*l_total, "/l_total");
        if (total < 0) throw InputError("/l_total", "must be non-negative");
        ls = splittings(total, static_cast<int>(r), 0, total);
      }
      for (long d = d_lo; d <= d_hi; ++d) {
        for (const auto& l : ls) rows.push_back({g, l, d});
      }
    }
  }

  std::vector<TPoly> volumes(rows.size());
  std::vector<std::exception_ptr> errors(rows.size());
  auto compute = [&](std::size_t k) {
    try {
      volumes[k] = quot_volume(rows[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  const unsigned workers = std::min<std::size_t>(std::max(1U, options.threads), rows.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < rows.size(); ++k) compute(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) compute(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  json table = json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    table.push_back({{"g", rows[k].g},
                     {"r", rows[k].rank()},
                     {"d", rows[k].d},
                     {"l", rows[k].l},
                     {"volume", polynomial_json(volumes[k])}});
  }
  return json{{"rows", table}};
}

}  // namespace

json run_job(const json& spec, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (!spec.is_object()) throw InputError("", "job document must be a JSON object");
  if (const json* schema = find(spec, "schema")) {
    if (!schema->is_number_integer() || schema->get<long>() != kSchemaVersion) {
      throw InputError("/schema", "unsupported schema version (expected 1)");
    }
  }
  const json* command = find(spec, "command");
  if (command == nullptr || !command->is_string()) throw InputError("/command", "missing command");
  const std::string cmd = command->get<std::string>();
  if (const json* format = find(spec, "format")) {
    const std::string f = format->is_string() ? format->get<std::string>() : "";
    if (f != "json" && f != "latex" && f != "plain") throw InputError("/format", "expected json, latex or plain");
  }

  json body;
  if (cmd == "abelian-volume") {
    body = abelian_volume(spec);
  } else if (cmd == "acyclic-volume") {
    body = acyclic_volume_job(spec);
  } else if (cmd == "quot-volume") {
    body = quot_volume_job(spec, options);
  } else if (cmd == "grothendieck-degree") {
    body = grothendieck_job(spec, options);
  } else if (cmd == "verify") {
    body = verify_job(spec, options);
  } else if (cmd == "sweep") {
    body = sweep_job(spec, options);
  } else {
    throw InputError("/command", "unknown command '" + cmd + "'");
  }

  json doc = {{"schema", kSchemaVersion}, {"input", spec}};
  doc.update(body);
  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    doc["meta"] = {{"wall_time_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  return doc;
}

std::string render(const json& result, std::string_view format) {
  if (format == "json") return result.dump(2) + "\n";
  std::ostringstream out;
  if (format == "latex") {
    if (result.contains("rows")) {
      for (const auto& row : result["rows"]) {
        out << "% g=" << row["g"] << " r=" << row["r"] << " d=" << row["d"] << " l=" << row["l"].dump() << "\n"
            << latex_line(polynomial_from_json(row["volume"])) << "\n";
      }
    } else if (result.contains("latex")) {
      out << result["latex"].get<std::string>() << "\n";
    }
    if (result.contains("verify")) out << "% verify " << result["verify"]["suite"].get<std::string>()
                                       << ": " << (result["verify"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    return out.str();
  }
  // plain
  if (result.contains("volume")) out << "v(𝔱) = " << result["volume"]["text"].get<std::string>() << "\n";
  if (result.contains("degree")) out << "degree = " << result["degree"].get<std::string>() << "\n";
  if (result.contains("evaluation")) {
    const json& e = result["evaluation"];
    if (e.contains("substitution")) out << e["substitution"].get<std::string>() << "\n";
    if (e.contains("volume")) {
      out << "volume = " << e["volume"].get<std::string>()
          << (e["exact"].get<bool>() ? "" : "  (pi probe, not exact)") << "\n";
    }
  }
  if (result.contains("verify")) {
    const json& v = result["verify"];
    out << "verify " << v["suite"].get<std::string>() << ": " << (v["pass"].get<bool>() ? "pass" : "FAIL");
    if (v.contains("candidates")) out << " (" << v["candidates"].get<std::size_t>() << " candidates)";
    out << "\n";
  }
  if (result.contains("rows")) {
    for (const auto& row : result["rows"]) {
      out << "g=" << row["g"] << " r=" << row["r"] << " d=" << row["d"] << " l=" << row["l"].dump() << ": "
          << row["volume"]["text"].get<std::string>() << "\n";
    }
  }
  if (result.contains("warnings")) {
    for (const auto& w : result["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace quotvol::cli
