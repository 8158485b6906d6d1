#include "rcurves/jobs.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rcurves/errors.hpp"
#include "rcurves/fano_lines.hpp"
#include "rcurves/field.hpp"
#include "rcurves/formulas.hpp"
#include "rcurves/geometry.hpp"
#include "rcurves/hirzebruch.hpp"
#include "rcurves/instances.hpp"
#include "rcurves/multi_form.hpp"
#include "rcurves/rng.hpp"
#include "rcurves/tangent.hpp"
#include "wire.hpp"

namespace rcurves::jobs {

namespace {

using wire::Json;

/// Error::what() is "kind: message"; the wire error object carries the two
/// parts separately.
std::string message_of(const Error& e) {
  std::string w = e.what();
  std::size_t skip = e.kind().size() + 2;
  return skip <= w.size() ? w.substr(skip) : w;
}

Json error_doc(const std::string& kind, const std::string& message) {
  Json err = Json::object();
  err["kind"] = kind;
  err["message"] = message;
  Json doc = Json::object();
  doc["error"] = std::move(err);
  return doc;
}

// --- payload access -----------------------------------------------------

const Json& require_key(const Json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key))
    throw ValidationError("BadDocument", std::string("payload needs \"") + key + "\"");
  return payload.at(key);
}

long long int_of(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ValidationError("BadDocument", std::string(what) + " must be an integer");
  return j.get<long long>();
}

long long int_field(const Json& payload, const char* key) {
  return int_of(require_key(payload, key), key);
}

std::vector<long long> int_list_field(const Json& payload, const char* key) {
  const Json& j = require_key(payload, key);
  if (!j.is_array())
    throw ValidationError("BadDocument", std::string(key) + " must be an array of integers");
  std::vector<long long> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(int_of(v, key));
  return out;
}

bool has_value(const Json& payload, const char* key) {
  return payload.is_object() && payload.contains(key) && !payload.at(key).is_null();
}

// --- field descriptors ----------------------------------------------------

std::uint64_t parse_prime(const std::string& text) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError("BadField", "cannot parse the prime in 'Fp:" + text + "'");
  }
}

/// Runs fn with the field named by the descriptor ("Q" or "Fp:<prime>").
template <class Fn>
Json dispatch_field(const std::string& desc, Fn&& fn) {
  if (desc == "Q") {
    RationalField F;
    return fn(F);
  }
  if (desc.rfind("Fp:", 0) == 0) {
    PrimeField F(parse_prime(desc.substr(3)));
    return fn(F);
  }
  throw ValidationError("BadField", "field must be \"Q\" or \"Fp:<prime>\"");
}

PrimeField prime_field_of(const std::string& desc, const char* purpose) {
  if (desc.rfind("Fp:", 0) != 0)
    throw ValidationError("BadField", std::string(purpose) + " needs a prime field \"Fp:<p>\"");
  return PrimeField(parse_prime(desc.substr(3)));
}

// --- splitting ------------------------------------------------------------

template <FieldContext K>
Json run_splitting(const K& F, const Json& payload) {
  std::optional<AmbientSpace> ambient;
  if (has_value(payload, "ambient")) ambient = wire::ambient_from_json(payload.at("ambient"));

  std::optional<Hypersurface<K>> X;
  if (has_value(payload, "hypersurface"))
    X = wire::hypersurface_from_json(F, payload.at("hypersurface"), ambient);
  else if (ambient)
    X = Hypersurface<K>::ambient_only(*ambient);
  else
    throw ValidationError("BadDocument", "splitting payload needs an ambient or a hypersurface");

  auto f = wire::curve_from_json(F, X->ambient, require_key(payload, "map"));
  auto result = pullback_tangent_splitting(F, f, *X);
  const SplittingType& s = result.splitting;

  const long long h0 = s.h0(0);
  const long long h1 = s.h1(0);
  const bool free_curve = s.rank() == 0 || s.min_value() >= 0;
  const bool very_free = s.rank() == 0 || s.min_value() >= 1;

  Json out = Json::object();
  out["splitting"] = wire::splitting_to_json(s);
  out["h0"] = h0;
  out["h1"] = h1;
  out["c1_beta"] = s.degree();
  out["free"] = free_curve;
  out["very_free"] = very_free;
  out["gw_rigid"] = is_gw_rigid_type(s, X->dim());
  out["expected_dim"] = s.degree() + X->dim();
  out["tangent_dim_direct"] = mor_tangent_dim_direct(F, f, *X);
  out["verdict"] = h1 == 0 ? "smooth_of_dim_" + std::to_string(h0) : "inconclusive";
  return out;
}

// --- formulas ---------------------------------------------------------------

Json run_formulas(const Json& payload) {
  const Json& jn = require_key(payload, "name");
  if (!jn.is_string())
    throw ValidationError("BadDocument", "formula name must be a string");
  const std::string name = jn.get<std::string>();

  long long value = 0;
  if (name == "mor_dim_projective") {
    value = formulas::mor_dim_projective(int_field(payload, "n"), int_field(payload, "d"));
  } else if (name == "mor_hypersurface_bound") {
    value = formulas::mor_hypersurface_bound(int_field(payload, "n"), int_field(payload, "e"),
                                             int_field(payload, "d"));
  } else if (name == "mor_fixed_bundle_dim") {
    long long h0 = has_value(payload, "h0L") ? int_field(payload, "h0L")
                                             : int_field(payload, "h0");
    value = formulas::mor_fixed_bundle_dim(int_field(payload, "n"), h0);
  } else if (name == "mor_L_hypersurface_bound") {
    value = formulas::mor_L_hypersurface_bound(int_field(payload, "n"),
                                               int_field(payload, "h0L"),
                                               int_field(payload, "h0Le"));
  } else if (name == "mor_bound") {
    value = formulas::mor_bound(int_field(payload, "c1_beta"), int_field(payload, "dimX"),
                                int_field(payload, "g"));
  } else if (name == "mor_refined_bound") {
    value = formulas::mor_refined_bound(int_field(payload, "c1_beta"), int_field(payload, "dimX"),
                                        int_field(payload, "g"), int_field(payload, "h1L"),
                                        int_field(payload, "h1Le"));
  } else if (name == "curves_bound") {
    value = formulas::curves_bound(int_field(payload, "c1_beta"), int_field(payload, "dimX"),
                                   int_field(payload, "g"));
  } else if (name == "gw_expected_dim") {
    value = formulas::gw_expected_dim(int_field(payload, "c1_beta"), int_field(payload, "dimX"),
                                      int_field(payload, "g"), int_list_field(payload, "codims"));
  } else if (name == "fano_lines_expected_dim") {
    value = formulas::fano_lines_expected_dim(int_field(payload, "n"), int_field(payload, "e"));
  } else {
    throw ValidationError("UnknownFormula", "no formula named '" + name + "'");
  }

  Json out = Json::object();
  out["value"] = value;
  return out;
}

// --- lines ------------------------------------------------------------------

Json run_lines(const PrimeField& F, const Json& payload, int threads) {
  auto X = wire::hypersurface_from_json(F, require_key(payload, "hypersurface"), std::nullopt);

  std::uint64_t budget = 1000000;
  if (has_value(payload, "budget")) {
    long long b = int_field(payload, "budget");
    if (b < 0) throw ValidationError("BadDocument", "budget must be nonnegative");
    budget = static_cast<std::uint64_t>(b);
  }

  auto records = enumerate_lines(F, X, budget, threads);

  Json out = Json::object();
  out["expected_dim"] = X.equation
                            ? formulas::fano_lines_expected_dim(X.dim(), X.equation->block_degree(0))
                            : 2LL * X.dim() - 2;
  out["count"] = records.size();
  out["note"] = "GF(" + std::to_string(F.modulus()) + ")-rational lines only";
  Json lines = Json::array();
  for (const auto& r : records) {
    Json rec = Json::object();
    Json m = Json::array();
    for (const auto& row : r.matrix) {
      Json jr = Json::array();
      for (auto e : row) jr.push_back(e);
      m.push_back(std::move(jr));
    }
    rec["matrix"] = std::move(m);
    if (!r.smooth_along) {
      rec["singular"] = true;
    } else {
      rec["splitting"] = wire::splitting_to_json(r.splitting);
      rec["h0"] = r.h0;
      rec["fano_tangent_dim"] = r.fano_tangent_dim;
      rec["unobstructed"] = r.unobstructed;
    }
    lines.push_back(std::move(rec));
  }
  out["lines"] = std::move(lines);
  return out;
}

// --- hirzebruch ---------------------------------------------------------------

hirzebruch::SurfaceClass class_field(const Json& payload, const char* key, int e) {
  const Json& j = require_key(payload, key);
  if (!j.is_array() || j.size() != 2)
    throw ValidationError("BadDocument", std::string(key) + " is a class [a, b]");
  return hirzebruch::make_class(e, int_of(j.at(0), key), int_of(j.at(1), key));
}

Json class_doc(const hirzebruch::SurfaceClass& c) {
  Json out = Json::object();
  out["e"] = c.e;
  out["class"] = Json::array({c.a, c.b});
  return out;
}

Json value_doc(long long v) {
  Json out = Json::object();
  out["value"] = v;
  return out;
}

Json run_hirzebruch(const Json& payload) {
  const Json& jop = require_key(payload, "op");
  if (!jop.is_string())
    throw ValidationError("BadDocument", "hirzebruch op must be a string");
  const std::string op = jop.get<std::string>();

  if (op == "cover_moduli_dim") return value_doc(hirzebruch::cover_moduli_dim(int_field(payload, "k")));

  const int e = static_cast<int>(int_field(payload, "e"));
  if (op == "intersect")
    return value_doc(hirzebruch::intersect(class_field(payload, "c1", e), class_field(payload, "c2", e)));
  if (op == "is_effective") {
    Json out = Json::object();
    out["value"] = hirzebruch::is_effective(class_field(payload, "c", e));
    return out;
  }
  if (op == "h0_class") return value_doc(hirzebruch::h0_class(class_field(payload, "c", e)));
  if (op == "through_points_dim")
    return value_doc(
        hirzebruch::through_points_dim(class_field(payload, "c", e), int_field(payload, "m")));
  if (op == "canonical_class") {
    if (e < 0) throw ValidationError("BadArgument", "surface parameter e must be >= 0");
    return class_doc(hirzebruch::canonical_class(e));
  }
  if (op == "transport_to_f0")
    return class_doc(hirzebruch::transport_to_f0(class_field(payload, "c", e)));
  throw ValidationError("UnknownOp", "no hirzebruch op named '" + op + "'");
}

// --- selfcheck ------------------------------------------------------------------

/// Pass/fail tally with the lowest-indexed failure kept for the report.
struct Tally {
  long long run = 0;
  long long fail = 0;
  int first_index = INT_MAX;
  std::string first_message;

  void note(bool ok, int index, const std::string& what) {
    ++run;
    if (ok) return;
    ++fail;
    if (index < first_index) {
      first_index = index;
      first_message = what;
    }
  }

  void merge(const Tally& o) {
    run += o.run;
    fail += o.fail;
    if (o.first_index < first_index) {
      first_index = o.first_index;
      first_message = o.first_message;
    }
  }
};

constexpr int kSelfcheckInstances = 100;
constexpr int kSelfcheckForms = 100;
constexpr std::uint64_t kFormStreamBase = 1u << 20;

/// One seeded item: indices below kSelfcheckInstances check a random curve
/// instance (Riemann-Roch at five twists, splitting h0 versus the direct
/// degreewise kernel at four twists); the rest check the Euler identity
/// sum_v x_v dG/dx_v = deg(G) G on a random polynomial.
void selfcheck_item(const PrimeField& F, const std::vector<InstanceCombo>& combos,
                    std::uint64_t seed, int index, Tally& tally) {
  try {
    if (index < kSelfcheckInstances) {
      auto inst = random_instance(F, seed, index, combos);
      auto result = pullback_tangent_splitting(F, inst.f, inst.X);
      const SplittingType& s = result.splitting;
      for (int k = -2; k <= 2; ++k) {
        bool ok = s.h0(k) - s.h1(k) == s.degree() + static_cast<long long>(s.rank()) * (k + 1);
        tally.note(ok, index, "riemann-roch failed at twist " + std::to_string(k) +
                                  " on instance " + std::to_string(index));
      }
      for (int k = -1; k <= 2; ++k) {
        bool ok = s.h0(k) == tangent_h0_direct(F, inst.f, inst.X, k);
        tally.note(ok, index, "splitting h0 disagrees with the direct count at twist " +
                                  std::to_string(k) + " on instance " + std::to_string(index));
      }
      return;
    }

    const int i = index - kSelfcheckInstances;
    CounterRng rng(seed, kFormStreamBase + static_cast<std::uint64_t>(i));
    const int nvars = 2 + static_cast<int>(rng.next_below(2));
    const int deg = 1 + static_cast<int>(rng.next_below(4));
    auto exps = detail::enumerate_exponents({nvars}, {deg});
    MultiForm<PrimeField> g({nvars}, {deg});
    for (const auto& exp : exps) g.add_term(F, exp, F.from_int(rng.next_in(0, 100)));

    MultiForm<PrimeField> euler({nvars}, {deg});
    for (int v = 0; v < nvars; ++v) {
      MultiForm<PrimeField> xv({nvars}, {1});
      std::vector<int> e(nvars, 0);
      e[v] = 1;
      xv.add_term(F, e, F.one());
      euler = multi_add(F, euler, multi_mul(F, xv, g.partial(F, v)));
    }
    auto diff = multi_add(F, euler, multi_scale(F, F.neg(F.from_int(deg)), g));
    tally.note(diff.is_zero(), index, "euler identity failed on form " + std::to_string(i));
  } catch (const std::exception& e) {
    tally.note(false, index, std::string("selfcheck item threw: ") + e.what());
  }
}

/// Unseeded exact-arithmetic grids: the intersection form is preserved by
/// the even-to-F0 transport, canonical classes correspond, and h0_class
/// agrees with a literal lattice-point count.
void selfcheck_grids(Tally& tally) {
  using namespace hirzebruch;
  for (int e = 0; e <= 6; e += 2) {
    for (int a1 = -3; a1 <= 3; ++a1)
      for (int b1 = -3; b1 <= 3; ++b1)
        for (int a2 = -3; a2 <= 3; ++a2)
          for (int b2 = -3; b2 <= 3; ++b2) {
            auto c1 = make_class(e, a1, b1), c2 = make_class(e, a2, b2);
            bool ok = intersect(c1, c2) == intersect(transport_to_f0(c1), transport_to_f0(c2));
            tally.note(ok, INT_MAX, "transport is not an isometry");
          }
    tally.note(transport_to_f0(canonical_class(e)) == canonical_class(0), INT_MAX,
               "transport misses the canonical class");
  }
  for (int e = 0; e <= 5; ++e)
    for (long long a = -10; a <= 10; ++a)
      for (long long b = -10; b <= 10; ++b) {
        long long lattice = 0;
        for (long long i = 0; a >= 0 && i <= a; ++i)
          for (long long j = 0; j <= b - i * e; ++j) ++lattice;
        tally.note(h0_class(make_class(e, a, b)) == lattice, INT_MAX,
                   "h0_class disagrees with the lattice count");
      }
}

Json run_selfcheck(const PrimeField& F, std::uint64_t seed, int threads) {
  const auto combos = instance_combos();
  const int items = kSelfcheckInstances + kSelfcheckForms;
  const int workers = std::clamp(threads, 1, 8);

  Tally tally;
  if (workers == 1) {
    for (int i = 0; i < items; ++i) selfcheck_item(F, combos, seed, i, tally);
  } else {
    std::vector<Tally> parts(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (int i = t; i < items; i += workers) selfcheck_item(F, combos, seed, i, parts[t]);
      });
    for (auto& th : pool) th.join();
    for (const auto& p : parts) tally.merge(p);
  }
  selfcheck_grids(tally);

  Json out = Json::object();
  out["checks_run"] = tally.run;
  out["failures"] = tally.fail;
  if (tally.fail > 0) out["first_failure"] = tally.first_message;
  return out;
}

// --- job dispatch ------------------------------------------------------------------

std::string effective_field(const Json& job, const RunOptions& opts, const std::string& command) {
  if (job.contains("field")) {
    if (!job.at("field").is_string())
      throw ValidationError("BadField", "field must be a string");
    return job.at("field").get<std::string>();
  }
  if (opts.field) return *opts.field;
  return command == "selfcheck" ? "Fp:101" : "Q";
}

std::uint64_t effective_seed(const Json& job, const RunOptions& opts) {
  if (job.contains("seed")) {
    const Json& s = job.at("seed");
    if (s.is_number_unsigned()) return s.get<std::uint64_t>();
    if (s.is_number_integer() && s.get<long long>() >= 0)
      return static_cast<std::uint64_t>(s.get<long long>());
    throw ValidationError("BadDocument", "seed must be an unsigned integer");
  }
  return opts.seed.value_or(0);
}

/// Runs one job object; never throws. severity: 0 ok, 2 validation,
/// 3 precondition (internal faults also map to 3: the input was valid).
Json run_single(const Json& job, const RunOptions& opts, int threads, int& severity) {
  severity = 0;
  try {
    if (!job.is_object())
      throw ValidationError("BadDocument", "a job is an object with a \"command\"");
    if (!job.contains("command") || !job.at("command").is_string())
      throw ValidationError("BadDocument", "a job needs a \"command\" string");
    const std::string command = job.at("command").get<std::string>();
    const Json payload = job.contains("payload") ? job.at("payload") : Json::object();
    const std::string field = effective_field(job, opts, command);

    if (command == "splitting")
      return dispatch_field(field, [&](const auto& F) { return run_splitting(F, payload); });
    if (command == "formulas") return run_formulas(payload);
    if (command == "lines")
      return run_lines(prime_field_of(field, "line enumeration"), payload, threads);
    if (command == "hirzebruch") return run_hirzebruch(payload);
    if (command == "selfcheck")
      return run_selfcheck(prime_field_of(field, "selfcheck"), effective_seed(job, opts), threads);
    throw ValidationError("BadCommand", "unknown command '" + command + "'");
  } catch (const ValidationError& e) {
    severity = 2;
    return error_doc(e.kind(), message_of(e));
  } catch (const PreconditionError& e) {
    severity = 3;
    return error_doc(e.kind(), message_of(e));
  } catch (const Error& e) {
    severity = 3;
    return error_doc(e.kind(), message_of(e));
  } catch (const nlohmann::json::exception& e) {
    severity = 2;
    return error_doc("BadDocument", e.what());
  } catch (const std::exception& e) {
    severity = 3;
    return error_doc("Internal", e.what());
  }
}

}  // namespace

RunResult run_jobs_text(const std::string& input, const RunOptions& options) {
  RunResult result;
  Json in;
  try {
    in = Json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    result.exit_code = 2;
    result.output = error_doc("BadJson", e.what()).dump() + "\n";
    return result;
  }

  Json out;
  std::vector<int> severities;
  if (in.is_array()) {
    const int n = static_cast<int>(in.size());
    std::vector<Json> docs(n);
    severities.assign(n, 0);
    const int workers = std::clamp(std::min(options.parallel, n), 1, 64);
    if (workers > 1) {
      // Jobs shard across workers; each job then runs single-threaded.
      // Results land by index, so the output order is the input order.
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
          for (int i = t; i < n; i += workers) docs[i] = run_single(in[i], options, 1, severities[i]);
        });
      for (auto& th : pool) th.join();
    } else {
      for (int i = 0; i < n; ++i) docs[i] = run_single(in[i], options, options.parallel, severities[i]);
    }
    out = Json::array();
    for (auto& d : docs) out.push_back(std::move(d));
  } else {
    severities.assign(1, 0);
    out = run_single(in, options, options.parallel, severities[0]);
  }

  result.exit_code = 0;
  for (int s : severities)
    if (s == 2) result.exit_code = 2;
  if (result.exit_code == 0)
    for (int s : severities)
      if (s == 3) result.exit_code = 3;
  result.output = out.dump() + "\n";
  return result;
}

}  // namespace rcurves::jobs
