#include "loopdual/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "loopdual/equivariant.hpp"

namespace loopdual {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
  }
  fs::rename(tmp, target);
}

std::vector<std::string> split_rings(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream s(item);
    std::string part;
    while (std::getline(s, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

ordered_json group_json(const FiniteAbelianGroup& g) {
  return ordered_json{{"invariant_factors", g.invariant_factors},
                      {"order", g.is_finite() ? json(g.torsion_order()) : json(nullptr)},
                      {"free_rank", g.free_rank()},
                      {"display", g.to_string()}};
}

ordered_json verdict_json(const Verdict& v) {
  return ordered_json{{"datum", v.datum},
                      {"ring", v.ring},
                      {"truncation", v.truncation},
                      {"series_equal", v.series_equal},
                      {"first_difference", v.first_difference},
                      {"dimension_ok", v.dimension_ok},
                      {"flatness_ok", v.flatness_ok},
                      {"zcenter_ok", v.zcenter_ok},
                      {"observed", v.observed},
                      {"oracle", v.oracle},
                      {"oracle_source", "loop-space exponent formula"},
                      {"pass", v.pass()}};
}

Verdict verdict_from_json(const ordered_json& j) {
  Verdict v;
  v.datum = j.at("datum").get<std::string>();
  v.ring = j.at("ring").get<std::string>();
  v.truncation = j.at("truncation").get<int>();
  v.series_equal = j.at("series_equal").get<bool>();
  v.first_difference = j.at("first_difference").get<int>();
  v.dimension_ok = j.at("dimension_ok").get<bool>();
  v.flatness_ok = j.at("flatness_ok").get<bool>();
  v.zcenter_ok = j.at("zcenter_ok").get<bool>();
  v.observed = j.at("observed").get<std::string>();
  v.oracle = j.at("oracle").get<std::string>();
  return v;
}

ordered_json presentation_json(const CentralizerPresentation& pres) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : pres.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  std::vector<std::string> rels;
  for (const auto& r : pres.relations) rels.push_back(r.to_string());
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"datum", pres.datum_name},
                      {"base", pres.base.name()},
                      {"ell", pres.ell},
                      {"zcenter", pres.zcenter.invariant_factors},
                      {"dimension", pres.dimension},
                      {"generators", gens},
                      {"relations", rels},
                      {"hilbert",
                       {{"series", pres.hilbert.coefficients}, {"closed_form", pres.hilbert.closed_form()}}}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& doc) {
  if (cfg.out.empty())
    out << dump(doc);
  else
    write_file(cfg.out, dump(doc));
}

GroebnerOptions groebner_options(const RunConfig& cfg) {
  GroebnerOptions o;
  if (cfg.budget) o.max_pairs = *cfg.budget;
  return o;
}

bool divides_ell(const Ring& ring, const RootDatum& d) {
  return ring.kind() == RingKind::prime_field && length_ratio(d) % static_cast<int>(ring.characteristic()) == 0;
}

template <class F>
void parallel_for(std::size_t count, std::size_t jobs, F&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

Check make_check(std::string name, bool pass, std::string detail = {}) {
  return Check{std::move(name), pass, std::move(detail)};
}

std::vector<Check> datum_checks(const RootDatum& d, const RunConfig& cfg) {
  std::vector<Check> out;
  const std::string n = d.name();
  const RootDatum dual = dual_datum(d);
  out.push_back(make_check("root_datum/" + n + "/dual_involution", dual_datum(dual) == d));
  const auto pi0 = component_group(d);
  const auto zdual = center_group(dual);
  out.push_back(make_check("root_datum/" + n + "/component_group_vs_dual_center", pi0 == zdual,
                           pi0.to_string() + " vs " + zdual.to_string()));
  // exponents sum to the number of positive roots
  const IntVector m = exponents(d);
  const auto msum = std::accumulate(m.begin(), m.end(), std::int64_t{0});
  out.push_back(make_check("root_datum/" + n + "/exponents",
                           static_cast<int>(m.size()) == d.rank() && msum == static_cast<std::int64_t>(d.num_positive())));

  const ChevalleyBasis basis = build_chevalley(dual, cfg.inject_sign_error);
  const auto violations = jacobi_violations(basis, 3);
  out.push_back(make_check("chevalley/" + n + "/jacobi", violations.empty(),
                           violations.empty() ? std::string() : violations.front()));
  std::string exp_detail;
  try {
    for (std::size_t a = 0; a < dual.roots().size(); ++a) exp_ad_terms(basis, a);
  } catch (const Error& e) {
    exp_detail = e.what();
  }
  out.push_back(make_check("chevalley/" + n + "/exp_integrality", exp_detail.empty(), exp_detail));

  const std::int64_t kil = killing_form(d, d.theta(), d.theta());
  const std::int64_t dad = degree_dV(d, adjoint_rep(d));
  out.push_back(make_check("loop_oracle/" + n + "/d_Ad", 2 * dad == kil,
                           "d_Ad = " + std::to_string(dad) + ", Kil(theta,theta) = " + std::to_string(kil)));

  const ScalarMatrix f = f_form(d);
  const std::size_t dim = f.size();
  bool f_ok = true;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector lambda(dim, 0);
    lambda[i] = 1;
    const ScalarVector loc = localization_restriction(d, lambda);
    const IntVector w = fixed_point_chern_weight(d, adjoint_rep(d), lambda);
    for (std::size_t j = 0; j < dim; ++j) {
      f_ok = f_ok && loc[j] == f[i][j];
      f_ok = f_ok && Scalar(static_cast<long>(w[j])) / static_cast<long>(dad) == loc[j];
    }
  }
  out.push_back(make_check("loop_oracle/" + n + "/f_consistency", f_ok));
  const std::int64_t ng = compute_nG(d);
  bool integral = true;
  for (const auto& row : f)
    for (const auto& v : row) integral = integral && Scalar(v * static_cast<long>(ng)).get_den() == 1;
  out.push_back(make_check("equivariant/" + n + "/n_G", integral, "n_G = " + std::to_string(ng)));
  return out;
}

std::vector<Check> centralizer_checks(const RootDatum& d, const std::vector<Ring>& rings, const RunConfig& cfg) {
  std::vector<Check> out;
  const std::string n = d.name();
  std::vector<CentralizerRun> runs;
  std::vector<std::string> names;
  for (const auto& ring : rings) {
    if (divides_ell(ring, d)) {
      const int dim = centralizer_dimension(d, ring, groebner_options(cfg));
      out.push_back(make_check("centralizer/" + n + "/" + ring.name() + "/non_regular", dim > d.rank(),
                               "bad prime, dimension " + std::to_string(dim)));
      continue;
    }
    runs.push_back(run_centralizer(d, ring, cfg.truncation, groebner_options(cfg), cfg.cache_dir));
    names.push_back(ring.name());
  }
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Verdict& v = runs[i].verdict;
    std::string detail = v.observed;
    if (!v.series_equal) detail += ", first difference at t^" + std::to_string(v.first_difference);
    out.push_back(make_check("centralizer/" + n + "/" + names[i] + "/oracle", v.pass(), detail));
  }
  if (runs.size() > 1) {
    bool flat = true;
    for (const auto& r : runs) flat = flat && r.series == runs.front().series;
    out.push_back(make_check("centralizer/" + n + "/flatness", flat, std::to_string(runs.size()) + " rings"));
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (truncation < 1) throw InvalidInput("truncation must be at least 1");
  if (!preset.empty() && !datum_file.empty()) throw InvalidInput("give either --preset or --datum-file, not both");
  if (budget && *budget == 0) throw InvalidInput("budget must be positive");
  parsed_rings();
}

RootDatum RunConfig::load_datum() const {
  if (!datum_file.empty()) return loopdual::load_datum(read_file(datum_file));
  if (preset.empty()) throw InvalidInput("no datum given (use --preset or --datum-file)");
  return loopdual::preset(preset);
}

std::vector<Ring> RunConfig::parsed_rings() const {
  std::vector<Ring> out;
  for (const auto& name : split_rings(rings)) {
    const Ring r = Ring::parse(name);
    if (r.kind() == RingKind::integers) throw InvalidInput("the base ring must be Q or a prime field");
    out.push_back(r);
  }
  return out;
}

std::string presentation_document(const CentralizerPresentation& pres) { return dump(presentation_json(pres)); }

std::string verdict_document(const Verdict& v) {
  ordered_json doc = verdict_json(v);
  doc.insert(doc.begin(), {"schema_version", kSchemaVersion});
  return dump(doc);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CentralizerRun run_centralizer(const RootDatum& d, const Ring& ring, int truncation, const GroebnerOptions& options,
                               const std::string& cache_dir) {
  const std::string key_text = std::string(kCacheVersion) + "\n" + datum_to_json(d) + "\n" + ring.name() +
                               "\norder=canonical\nN=" + std::to_string(truncation);
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key_text);
  const fs::path file = cache_dir.empty() ? fs::path() : fs::path(cache_dir) / (hex.str() + ".json");

  if (!cache_dir.empty() && fs::exists(file)) {
    try {
      const ordered_json entry = ordered_json::parse(read_file(file.string()));
      if (entry.at("version") == kCacheVersion && entry.at("key") == key_text) {
        CentralizerRun run;
        run.presentation = dump(entry.at("presentation"));
        run.verdict = verdict_from_json(entry.at("verdict"));
        run.series = entry.at("series").get<std::vector<std::int64_t>>();
        run.from_cache = true;
        return run;
      }
    } catch (const std::exception&) {
      // unreadable or stale entries are recomputed
    }
  }

  PresentOptions opts;
  opts.groebner = options;
  opts.truncation = truncation;
  const CentralizerPresentation pres = present_centralizer(d, ring, opts);
  CentralizerRun run;
  run.verdict = compare_report(pres, d, truncation);
  const ordered_json pj = presentation_json(pres);
  run.presentation = dump(pj);
  run.series = pres.hilbert.coefficients;
  run.series.resize(static_cast<std::size_t>(truncation) + 1, 0);
  if (!cache_dir.empty()) {
    const ordered_json entry{{"version", kCacheVersion},
                             {"key", key_text},
                             {"presentation", pj},
                             {"verdict", verdict_json(run.verdict)},
                             {"series", run.series}};
    write_file(file.string(), entry.dump());
  }
  return run;
}

int cmd_datum_info(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const RootDatum d = cfg.load_datum();
  const RootDatum dual = dual_datum(d);
  ordered_json doc{{"schema_version", kSchemaVersion},
                   {"command", "datum-info"},
                   {"datum", d.name()},
                   {"rank", d.rank()},
                   {"torus_dim", d.dim()},
                   {"cartan", d.cartan()},
                   {"roots", d.roots().size()},
                   {"positive_roots", d.num_positive()},
                   {"ell", length_ratio(d)},
                   {"exponents", exponents(d)},
                   {"pi0", group_json(component_group(d))},
                   {"dual_center", group_json(center_group(dual))},
                   {"n_G", compute_nG(d)},
                   {"e_coefficients", coroot_lengths(d)}};
  emit(cfg, out, doc);
  return kExitPass;
}

int cmd_centralizer(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const RootDatum d = cfg.load_datum();
  if (d.rank() > 3) throw InvalidInput("centralizer presentations are limited to rank <= 3");
  std::vector<Ring> rings = cfg.parsed_rings();
  if (rings.empty()) rings.push_back(Ring::rationals());
  for (const auto& ring : rings)
    if (divides_ell(ring, d))
      throw BadPrime("characteristic " + std::to_string(ring.characteristic()) + " divides ell_G = " +
                     std::to_string(length_ratio(d)) + " for " + d.name() + "; e is not regular there");

  std::vector<CentralizerRun> runs(rings.size());
  parallel_for(rings.size(), cfg.jobs, [&](std::size_t i) {
    runs[i] = run_centralizer(d, rings[i], cfg.truncation, groebner_options(cfg), cfg.cache_dir);
  });
  for (auto& run : runs)
    for (const auto& other : runs) run.verdict.flatness_ok = run.verdict.flatness_ok && run.series == other.series;

  bool pass = true;
  ordered_json results = ordered_json::array();
  for (const auto& run : runs) {
    ordered_json pres = ordered_json::parse(run.presentation);
    pres.erase("schema_version");
    results.push_back({{"presentation", pres}, {"verdict", verdict_json(run.verdict)}});
    pass = pass && run.verdict.pass();
  }
  const ordered_json doc{{"schema_version", kSchemaVersion},
                         {"command", "centralizer"},
                         {"datum", d.name()},
                         {"truncation", cfg.truncation},
                         {"results", results},
                         {"pass", pass}};
  emit(cfg, out, doc);
  return pass ? kExitPass : kExitMismatch;
}

int cmd_check_all(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  std::vector<RootDatum> data;
  if (!cfg.preset.empty() || !cfg.datum_file.empty()) {
    data.push_back(cfg.load_datum());
  } else {
    for (const auto& name : preset_names()) {
      RootDatum d = preset(name);
      if (d.rank() <= cfg.max_rank) data.push_back(std::move(d));
    }
  }
  std::vector<Ring> rings = cfg.parsed_rings();
  if (rings.empty()) {
    rings.push_back(Ring::rationals());
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) rings.push_back(Ring::prime_field(p));
  }

  std::vector<std::vector<Check>> per_datum(data.size());
  parallel_for(data.size(), cfg.jobs, [&](std::size_t i) {
    per_datum[i] = datum_checks(data[i], cfg);
    if (data[i].rank() <= 3) {
      auto more = centralizer_checks(data[i], rings, cfg);
      per_datum[i].insert(per_datum[i].end(), more.begin(), more.end());
    }
  });

  bool pass = true;
  std::size_t passed = 0, total = 0;
  ordered_json checks = ordered_json::array();
  for (const auto& list : per_datum)
    for (const auto& c : list) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      pass = pass && c.pass;
      passed += c.pass ? 1 : 0;
      ++total;
    }
  out << (pass ? "ALL PASS " : "FAILURES ") << passed << "/" << total << "\n";
  if (!cfg.out.empty()) {
    const ordered_json doc{{"schema_version", kSchemaVersion},
                           {"command", "check-all"},
                           {"truncation", cfg.truncation},
                           {"checks", checks},
                           {"passed", passed},
                           {"total", total},
                           {"pass", pass}};
    write_file(cfg.out, dump(doc));
  }
  return pass ? kExitPass : kExitMismatch;
}

int run_guarded(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  auto report = [&](const char* kind, const std::exception& e, int code) {
    err << "error (" << kind << "): " << e.what() << "\n";
    return code;
  };
  try {
    return command(cfg, out);
  } catch (const BadPrime& e) {
    return report("bad prime", e, kExitBadInput);
  } catch (const BudgetExceeded& e) {
    return report("budget exceeded", e, kExitBudget);
  } catch (const InvalidInput& e) {
    return report("invalid input", e, kExitBadInput);
  } catch (const RingMismatch& e) {
    return report("invalid input", e, kExitBadInput);
  } catch (const std::exception& e) {
    return report("internal", e, kExitError);
  }
}

}  // namespace loopdual
