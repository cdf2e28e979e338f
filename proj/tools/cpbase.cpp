// Command-line harness: group reports, base-probability runs, bound
// calculators, and the verification suites, all driven by a JSON config.
//
// Exit codes: 0 success; 2 configuration / parameter errors; 3 a cap was
// exceeded (enumeration, tuple space, field size); 4 a verification suite
// found a violation; 1 unexpected failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpbase/characters.hpp"
#include "cpbase/constructions.hpp"
#include "cpbase/io.hpp"
#include "cpbase/probability.hpp"

using nlohmann::json;

namespace {

using namespace cpb;

// ---------------------------------------------------------------- plumbing

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
}

// The per-family size parameter may be spelled by its conventional letter.
unsigned read_size(const json& jg) {
  for (const char* key : {"n", "m", "r", "size"})
    if (jg.contains(key)) return jg.at(key).get<unsigned>();
  throw ConfigError("group spec needs a size parameter (n, m, r or size)");
}

GroupSpec parse_group(const json& jg) {
  if (!jg.is_object()) throw ConfigError("\"group\" must be an object");
  GroupSpec s;
  if (!jg.contains("family")) throw ConfigError("group spec needs \"family\"");
  s.family = family_from_name(jg.at("family").get<std::string>());
  if (s.family == Family::Tensor) {
    if (!jg.contains("factors") || !jg.at("factors").is_array() || jg.at("factors").size() != 2)
      throw ConfigError("tensor group needs \"factors\": [spec, spec]");
    for (const json& f : jg.at("factors")) s.factors.push_back(parse_group(f));
  } else {
    s.size = read_size(jg);
    if (!jg.contains("p")) throw ConfigError("group spec needs the characteristic \"p\"");
    s.p = jg.at("p").get<std::uint64_t>();
    s.e = jg.value("e", 1u);
  }
  if (jg.contains("with_scalars")) s.with_scalars = jg.at("with_scalars").get<bool>();
  return s;
}

std::vector<unsigned> parse_c_list(const json& cfg, const std::vector<unsigned>& flag_c) {
  if (!flag_c.empty()) return flag_c;
  if (cfg.contains("c")) {
    const json& jc = cfg.at("c");
    if (jc.is_number_unsigned() || jc.is_number_integer()) return {jc.get<unsigned>()};
    if (jc.is_array()) {
      std::vector<unsigned> out;
      for (const json& v : jc) out.push_back(v.get<unsigned>());
      if (!out.empty()) return out;
    }
    throw ConfigError("\"c\" must be a positive integer or a non-empty list");
  }
  return {1};
}

void put_rational(json& rec, const std::string& prefix, const Rational& r) {
  rec[prefix + "_num"] = boost::multiprecision::numerator(r).str();
  rec[prefix + "_den"] = boost::multiprecision::denominator(r).str();
}

void flatten(const std::string& prefix, const json& value, std::vector<std::string>& keys,
             std::map<std::string, std::string>& row) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it)
      flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), keys, row);
    return;
  }
  std::string text;
  if (value.is_string()) text = value.get<std::string>();
  else if (value.is_null()) text = "";
  else text = value.dump();
  keys.push_back(prefix);
  row[prefix] = text;
}

std::string records_to_csv(const std::vector<json>& records) {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  for (const json& rec : records) {
    std::vector<std::string> keys;
    std::map<std::string, std::string> row;
    flatten("", rec, keys, row);
    for (const std::string& k : keys)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ",";
      auto it = row.find(header[i]);
      if (it == row.end()) continue;
      const std::string& v = it->second;
      os << (v.find_first_of(",\"\n") == std::string::npos ? v : csv_quote(v));
    }
    os << "\n";
  }
  return os.str();
}

void emit(const std::vector<json>& records, const std::string& format, const std::string& out) {
  std::string text;
  if (format == "csv") {
    text = records_to_csv(records);
  } else {
    json arr = json::array();
    for (const json& r : records) arr.push_back(r);
    text = arr.dump(2) + "\n";
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot open output file: " + out);
    f << text;
  }
}

// ------------------------------------------------------------- subcommands

struct Common {
  std::string config_path;
  std::vector<unsigned> c_list;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t trials = 0;
  bool trials_set = false;
  std::uint64_t enum_cap = 0;
  std::uint64_t tuple_cap = 0;
  unsigned workers = 0;
  std::string out;
  std::string format;

  std::uint64_t pick_enum_cap(const json& cfg) const {
    if (enum_cap) return enum_cap;
    return cfg.value("enum_cap", kDefaultEnumCap);
  }
  std::uint64_t pick_tuple_cap(const json& cfg) const {
    if (tuple_cap) return tuple_cap;
    return cfg.value("tuple_cap", kDefaultTupleCap);
  }
  unsigned pick_workers(const json& cfg) const {
    if (workers) return workers;
    return cfg.value("workers", default_workers());
  }
  std::string pick_format(const json& cfg) const {
    std::string f = !format.empty() ? format : cfg.value("format", std::string("json"));
    if (f != "json" && f != "csv") throw ConfigError("format must be json or csv");
    return f;
  }
  std::string pick_out(const json& cfg) const {
    return !out.empty() ? out : cfg.value("out", std::string());
  }
};

void add_common_flags(CLI::App* cmd, Common& o, bool with_pb_flags) {
  cmd->add_option("--config", o.config_path, "JSON run configuration")->required();
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "json | csv");
  if (with_pb_flags) {
    cmd->add_option("--c", o.c_list, "tuple lengths (overrides config)")->delimiter(',');
    cmd->add_option("--seed", o.seed, "RNG seed (overrides config)")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--trials", o.trials, "Monte Carlo trials (overrides config)")
        ->each([&o](const std::string&) { o.trials_set = true; });
    cmd->add_option("--enum-cap", o.enum_cap, "max group size to enumerate");
    cmd->add_option("--tuple-cap", o.tuple_cap, "max tuple-space size for exhaustive runs");
    cmd->add_option("--workers", o.workers, "worker thread count");
  }
}

json spectrum_json(const SupportSpectrum& s) {
  json out = json::object();
  for (auto [supp, count] : s.counts) out[std::to_string(supp)] = count;
  return out;
}

int cmd_group_info(const Common& o) {
  json cfg = load_config(o.config_path);
  if (!cfg.contains("group")) throw ConfigError("config needs a \"group\" object");
  GroupSpec spec = parse_group(cfg.at("group"));
  Timer timer;
  MatrixGroup g = build(spec);
  enumerate(g, o.pick_enum_cap(cfg));

  json rec;
  rec["spec"] = g.label;
  rec["dim"] = g.dim;
  rec["field"] = {{"p", g.field->characteristic()},
                  {"e", g.field->degree()},
                  {"q", g.field->order()}};
  rec["order"] = g.order();
  rec["coprime"] = coprime_check(g);
  auto ms = min_supp(g);
  auto mp = min_supp_projective(g);
  rec["min_supp"] = ms ? json(*ms) : json(nullptr);
  rec["min_supp_projective"] = mp ? json(*mp) : json(nullptr);
  rec["spectrum_fixed"] = spectrum_json(support_spectrum(g, SupportKind::Fixed));
  rec["spectrum_projective"] = spectrum_json(support_spectrum(g, SupportKind::Projective));
  rec["wall_time_ms"] = timer.ms();
  emit({rec}, o.pick_format(cfg), o.pick_out(cfg));
  return 0;
}

json bound_report(const MatrixGroup& g, unsigned c, const json& cfg) {
  json b;
  SupportSpectrum sp = support_spectrum(g, SupportKind::Fixed);
  Rational u = union_bound(sp, g.field->order(), c);
  json ju;
  put_rational(ju, "value", u);
  b["union"] = ju;
  if (auto ms = min_supp(g)) {
    Rational m = minsupp_bound(g.order(), *ms, g.field->order(), c);
    json jm;
    put_rational(jm, "value", m);
    jm["min_supp"] = *ms;
    b["min_supp"] = jm;
  }
  if (cfg.contains("mr")) {
    const json& jmr = cfg.at("mr");
    if (!jmr.is_array() || jmr.size() != 2)
      throw ConfigError("\"mr\" must be [numerator, denominator]");
    Rational mr(Int(jmr[0].get<std::int64_t>()), Int(jmr[1].get<std::int64_t>()));
    json jb;
    jb["value_float"] = mr_bound(g.field->characteristic(), g.dim * g.field->degree(), mr, c);
    Rational mc = min_c(mr, Rational(1));
    put_rational(jb, "min_c_eps1", mc);
    b["character_ratio"] = jb;
  }
  return b;
}

int cmd_pb(const Common& o) {
  json cfg = load_config(o.config_path);
  if (!cfg.contains("group")) throw ConfigError("config needs a \"group\" object");
  GroupSpec spec = parse_group(cfg.at("group"));
  const std::string method = cfg.value("method", std::string("bruteforce"));
  const std::vector<unsigned> cs = parse_c_list(cfg, o.c_list);
  const unsigned workers = o.pick_workers(cfg);

  MatrixGroup g = build(spec);
  if (method != "formula") enumerate(g, o.pick_enum_cap(cfg));

  std::vector<json> records;
  for (unsigned c : cs) {
    Timer timer;
    json rec;
    rec["spec"] = spec.label();
    rec["c"] = c;
    rec["method"] = method;
    if (method == "bruteforce") {
      PbEstimate est = pb_bruteforce(g, c, o.pick_tuple_cap(cfg), workers);
      put_rational(rec, "value", est.value);
      rec["value_float"] = rational_to_double(est.value);
    } else if (method == "formula") {
      Rational v;
      if (spec.family == Family::Diagonal) {
        v = pb_formula_diagonal(spec.size, Field::make(spec.p, spec.e)->order(), c);
      } else if (spec.family == Family::SymNatural || spec.family == Family::DeletedPerm) {
        // The sum-zero module has the same base counts as the natural one.
        v = pb_formula_sym(spec.size, Field::make(spec.p, spec.e)->order(), c);
      } else {
        throw ConfigError("no closed-form product for family " + family_name(spec.family));
      }
      put_rational(rec, "value", v);
      rec["value_float"] = rational_to_double(v);
    } else if (method == "montecarlo") {
      if (!o.seed_set && !cfg.contains("seed"))
        throw ConfigError("montecarlo needs an explicit seed");
      const std::uint64_t seed = o.seed_set ? o.seed : cfg.at("seed").get<std::uint64_t>();
      const std::uint64_t trials = o.trials_set ? o.trials : cfg.value("trials", 100000ull);
      PbEstimate est = pb_monte_carlo(g, c, trials, seed, workers);
      put_rational(rec, "value", est.value);
      rec["value_float"] = est.value_float;
      rec["ci_lo"] = est.ci_lo;
      rec["ci_hi"] = est.ci_hi;
      rec["trials"] = est.trials;
      rec["seed"] = est.seed;
    } else if (method == "bounds") {
      rec["bounds"] = bound_report(g, c, cfg);
    } else {
      throw ConfigError("unknown method: " + method);
    }
    rec["wall_time_ms"] = timer.ms();
    records.push_back(std::move(rec));
  }
  emit(records, o.pick_format(cfg), o.pick_out(cfg));
  return 0;
}

BoundCase case_from_name(const std::string& name) {
  if (name == "1") return BoundCase::Case1;
  if (name == "2a") return BoundCase::Case2a;
  if (name == "2b") return BoundCase::Case2b;
  if (name == "2c") return BoundCase::Case2c;
  throw ConfigError("unknown bound case: " + name + " (expected 1, 2a, 2b or 2c)");
}

const char* case_name(BoundCase c) {
  switch (c) {
    case BoundCase::Case1: return "1";
    case BoundCase::Case2a: return "2a";
    case BoundCase::Case2b: return "2b";
    case BoundCase::Case2c: return "2c";
  }
  return "?";
}

int cmd_bounds(const Common& o) {
  json cfg = load_config(o.config_path);
  if (!cfg.contains("bounds")) throw ConfigError("config needs a \"bounds\" object");
  const json& jb = cfg.at("bounds");
  std::vector<std::string> cases;
  if (jb.contains("cases"))
    for (const json& c : jb.at("cases")) cases.push_back(c.get<std::string>());
  else if (jb.contains("case"))
    cases.push_back(jb.at("case").get<std::string>());
  else
    cases = {"1", "2a", "2b", "2c"};

  BoundCaseParams params;
  params.q = jb.value("q", 0ull);
  params.n = jb.value("n", 0u);
  params.dimV = jb.value("dimV", 0u);
  std::vector<unsigned> cs = o.c_list;
  if (cs.empty()) {
    if (jb.contains("c")) cs = {jb.at("c").get<unsigned>()};
    else cs = parse_c_list(cfg, {});
  }

  std::vector<json> records;
  for (const std::string& name : cases)
    for (unsigned c : cs) {
      params.c = c;
      BoundCaseValue v = bound_case(case_from_name(name), params);
      json rec;
      rec["case"] = case_name(v.which);
      rec["q"] = params.q;
      rec["n"] = params.n;
      rec["dimV"] = params.dimV;
      rec["c"] = c;
      rec["value_float"] = v.value;
      rec["vacuous"] = v.vacuous;
      rec["in_regime"] = v.in_regime;
      records.push_back(std::move(rec));
    }
  emit(records, o.pick_format(cfg), o.pick_out(cfg));
  return 0;
}

// ------------------------------------------------------------ verify suite

class Verifier {
 public:
  explicit Verifier(std::ostream& os) : os_(os) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++total_;
    if (!ok) ++failures_;
    os_ << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) os_ << " — " << detail;
    os_ << "\n";
  }

  int finish() {
    os_ << (failures_ ? "FAILED: " : "passed: ") << (total_ - failures_) << "/" << total_
        << " checks\n";
    return failures_ ? 4 : 0;
  }

 private:
  std::ostream& os_;
  unsigned total_ = 0;
  unsigned failures_ = 0;
};

MatrixGroup built_group(Family f, unsigned size, std::uint64_t p, bool with_scalars = false) {
  GroupSpec s;
  s.family = f;
  s.size = size;
  s.p = p;
  if (with_scalars) s.with_scalars = true;
  MatrixGroup g = build(s);
  enumerate(g);
  return g;
}

void verify_chars(Verifier& v, unsigned m_max) {
  for (unsigned m = 15; m <= std::max(16u, std::min(m_max, 22u)); ++m) {
    bool ok = true;
    for (const auto& row : shallow_character_rows(m))
      ok = ok && row.degree == row.degree_closed && row.three_cycle == row.three_cycle_closed;
    v.check("chars/closed-form-rows m=" + std::to_string(m), ok);
  }
  for (unsigned m = 3; m <= std::min(m_max, 22u); ++m) {
    auto rep = verify_three_cycle_gap(m);
    v.check("chars/three-cycle-gap m=" + std::to_string(m), rep.violations.empty(),
            "min slack " + rational_to_string(rep.min_slack) + " at " + rep.min_slack_at.to_string());
  }
  for (unsigned m = 2; m <= 7; ++m) {
    CharTable t = char_table(m);
    bool ok = true;
    const std::size_t k = t.index.size();
    for (std::size_t r1 = 0; r1 < k && ok; ++r1)
      for (std::size_t r2 = r1; r2 < k && ok; ++r2) {
        Int dot = 0;
        for (std::size_t c = 0; c < k; ++c) dot += t.sizes[c] * t.values[r1][c] * t.values[r2][c];
        ok = dot == (r1 == r2 ? factorial(m) : Int(0));
      }
    v.check("chars/row-orthogonality m=" + std::to_string(m), ok);
  }
  for (unsigned m = 1; m <= 12; ++m) {
    Int sum = 0;
    for (const Partition& lambda : partitions(m)) {
      Int d = hook_degree(lambda);
      sum += d * d;
    }
    v.check("chars/degree-squares m=" + std::to_string(m), sum == factorial(m));
  }
}

void verify_lemmas(Verifier& v, std::uint64_t pairs, std::uint64_t seed) {
  // Commutator support: Supp([g,h]) <= 2 Supp(g) over random pairs.
  for (const auto& [f, size, p] : std::vector<std::tuple<Family, unsigned, std::uint64_t>>{
           {Family::Heisenberg, 3, 7},
           {Family::SymNatural, 4, 7},
           {Family::DiagonalWreath, 2, 5}}) {
    MatrixGroup g = built_group(f, size, p);
    SplitMix64 rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t t = 0; t < pairs; ++t) {
      Matrix a = random_element(g, rng);
      Matrix b = random_element(g, rng);
      if (support(commutator(a, b)) > 2 * support(a)) ++bad;
    }
    v.check("lemmas/commutator-support " + g.label, bad == 0,
            std::to_string(pairs) + " pairs");
  }

  {
    MatrixGroup zs = built_group(Family::SymNatural, 3, 7, true);
    MatrixGroup h = built_group(Family::Heisenberg, 3, 7);
    TensorSupportReport rep = verify_tensor_lemma(zs, h);
    v.check("lemmas/tensor-support Z*sym(3) x heisenberg(3,7)",
            rep.holds && rep.product_min == 3U && rep.min_formula_branch,
            "product MinSupp 3");
  }
  {
    MatrixGroup a = built_group(Family::Scalars, 2, 5);
    MatrixGroup b = built_group(Family::Scalars, 2, 5);
    v.check("lemmas/tensor-support scalars x scalars", verify_tensor_lemma(a, b).holds);
  }
  {
    MatrixGroup d = built_group(Family::Diagonal, 2, 5);
    MatrixGroup zs = built_group(Family::SymNatural, 3, 5, true);
    v.check("lemmas/tensor-support diagonal(2,5) x Z*sym(3)", verify_tensor_lemma(d, zs).holds);
  }
}

void verify_formulas(Verifier& v, unsigned workers) {
  for (auto [n, q, c] : std::vector<std::tuple<unsigned, std::uint64_t, unsigned>>{
           {1, 5, 1}, {2, 5, 1}, {2, 5, 2}, {3, 5, 1}, {2, 7, 2}}) {
    MatrixGroup g = built_group(Family::Diagonal, n, q);
    bool ok = pb_bruteforce(g, c, kDefaultTupleCap, workers).value == pb_formula_diagonal(n, q, c);
    v.check("formulas/diagonal n=" + std::to_string(n) + " q=" + std::to_string(q) +
                " c=" + std::to_string(c),
            ok);
  }
  for (auto [m, q, c] : std::vector<std::tuple<unsigned, std::uint64_t, unsigned>>{
           {3, 7, 1}, {3, 7, 2}, {4, 7, 1}, {3, 11, 1}}) {
    MatrixGroup g = built_group(Family::SymNatural, m, q);
    bool ok = pb_bruteforce(g, c, kDefaultTupleCap, workers).value == pb_formula_sym(m, q, c);
    v.check("formulas/natural-product m=" + std::to_string(m) + " q=" + std::to_string(q) +
                " c=" + std::to_string(c),
            ok);
  }
  for (auto [m, q, c] : std::vector<std::tuple<unsigned, std::uint64_t, unsigned>>{
           {3, 7, 1}, {3, 7, 2}, {4, 7, 1}}) {
    MatrixGroup g = built_group(Family::DeletedPerm, m, q);
    bool ok = pb_bruteforce(g, c, kDefaultTupleCap, workers).value == pb_formula_sym(m, q, c);
    v.check("formulas/sum-zero-transfer m=" + std::to_string(m) + " q=" + std::to_string(q) +
                " c=" + std::to_string(c),
            ok);
  }
  for (const auto& [f, size, p] : std::vector<std::tuple<Family, unsigned, std::uint64_t>>{
           {Family::Scalars, 2, 5},
           {Family::Diagonal, 2, 5},
           {Family::DeletedPerm, 3, 7},
           {Family::Heisenberg, 3, 7}}) {
    MatrixGroup g = built_group(f, size, p);
    SupportSpectrum sp = support_spectrum(g, SupportKind::Fixed);
    bool ok = true;
    for (unsigned c = 1; c <= 3 && ok; ++c) {
      Rational exact = pb_bruteforce(g, c, kDefaultTupleCap, workers).value;
      Rational u = union_bound(sp, g.field->order(), c);
      Rational m = minsupp_bound(g.order(), *min_supp(g), g.field->order(), c);
      ok = m <= u && u <= exact;
    }
    v.check("formulas/bound-chain " + g.label, ok, "c in {1,2,3}");
  }
}

int cmd_verify(const std::string& suite, unsigned m_max, std::uint64_t pairs, std::uint64_t seed,
               unsigned workers) {
  if (suite != "chars" && suite != "lemmas" && suite != "formulas" && suite != "all")
    throw ConfigError("unknown suite: " + suite);
  Verifier v(std::cout);
  if (suite == "chars" || suite == "all") verify_chars(v, m_max);
  if (suite == "lemmas" || suite == "all") verify_lemmas(v, pairs, seed);
  if (suite == "formulas" || suite == "all") verify_formulas(v, workers);
  return v.finish();
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const TupleSpaceTooLarge*>(&e) ||
      dynamic_cast<const FieldTooLarge*>(&e))
    return 3;
  return 2;  // configuration / parameter problem
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base-probability toolkit for coprime matrix groups"};
  app.require_subcommand(1);

  Common info_opts, pb_opts, bounds_opts;
  std::string suite = "all";
  unsigned m_max = 18;
  std::uint64_t pairs = 10000;
  std::uint64_t verify_seed = 12345;
  unsigned verify_workers = 0;

  CLI::App* info = app.add_subcommand("group-info", "construct, enumerate and summarize a group");
  add_common_flags(info, info_opts, false);
  info->add_option("--enum-cap", info_opts.enum_cap, "max group size to enumerate");

  CLI::App* pb = app.add_subcommand("pb", "base-probability runs (exact, sampled, or bounds)");
  add_common_flags(pb, pb_opts, true);

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form case bounds");
  add_common_flags(bounds, bounds_opts, false);
  bounds->add_option("--c", bounds_opts.c_list, "tuple lengths (overrides config)")
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "chars | lemmas | formulas | all");
  verify->add_option("--m-max", m_max, "largest symmetric-group degree for character sweeps");
  verify->add_option("--pairs", pairs, "random pairs per commutator check");
  verify->add_option("--seed", verify_seed, "RNG seed for sampled checks");
  verify->add_option("--workers", verify_workers, "worker thread count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_group_info(info_opts);
    if (pb->parsed()) return cmd_pb(pb_opts);
    if (bounds->parsed()) return cmd_bounds(bounds_opts);
    if (verify->parsed())
      return cmd_verify(suite, m_max, pairs, verify_seed,
                        verify_workers ? verify_workers : default_workers());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
