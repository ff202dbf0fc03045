// Command-line front end: wlp, slp, sweep, apery, lemma, hilbert, classify.
//
// Exit codes: 0 success / HOLDS, 1 INCONCLUSIVE, 2 FAILS_PROBABLY found,
// 3 usage or validation error, 4 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lefschetz/lefschetz.hpp"

namespace {

using namespace lefschetz;
using nlohmann::json;

constexpr int kExitInconclusive = 1;
constexpr int kExitFails = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInvariant = 4;

struct ParamFlags {
  std::optional<int> a, b, c, beta, gamma;

  void add(CLI::App* cmd, bool with_beta = true) {
    cmd->add_option("-a,--a", a, "exponent of x");
    cmd->add_option("-b,--b", b, "exponent of y");
    cmd->add_option("-c,--c", c, "exponent of z");
    if (with_beta) cmd->add_option("--beta", beta, "colon exponent beta");
    cmd->add_option("--gamma", gamma, "binomial exponent gamma");
  }

  bool any() const { return a || b || c || beta || gamma; }

  GorensteinParams params() const {
    if (!(a && b && c && beta && gamma)) throw Error(Errc::InvalidArgument, "need all of -a -b -c --beta --gamma");
    return validate(*a, *b, *c, *beta, *gamma);
  }
};

struct StrategyFlags {
  unsigned trials = 8;
  long bound = 10000;
  std::uint64_t seed = 0;
  bool no_default = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--trials", trials, "random linear forms to try after x-y-z")->capture_default_str();
    cmd->add_option("--bound", bound, "coefficient bound B for random forms")->capture_default_str()->check(
        CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "seed for random forms")->capture_default_str();
    cmd->add_flag("--no-default", no_default, "skip the x-y-z form");
  }

  Strategy strategy() const { return Strategy{trials, bound, seed, !no_default}; }
};

json ranks_json(const std::vector<DegreeRank>& ranks) {
  json out = json::array();
  for (const auto& r : ranks)
    out.push_back({{"d", r.degree}, {"s", r.power}, {"h_d", r.source_dim}, {"h_target", r.target_dim},
                   {"rank", r.rank}, {"maximal", r.maximal}});
  return out;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::FailsProbably: return kExitFails;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

/// wlp / slp on an ad-hoc ideal given as text.
int lefschetz_on_ideal(const std::string& text, int cap, const Strategy& strategy, bool strong) {
  GradedQuotient q(parse_ideal(text), cap);
  json out;
  out["ideal"] = q.ideal().to_string();
  LefschetzReport report;
  try {
    const HilbertData hd = hilbert_data(q);
    out["D"] = hd.socle_degree;
    out["h"] = hd.h;
    report = strong ? check_slp(q, strategy) : check_wlp(q, strategy);
  } catch (const Error& e) {
    if (e.code() != Errc::NotArtinianWithinCap && e.code() != Errc::CapExceeded) throw;
    out["error"] = e.what();
    report.verdict = Verdict::Inconclusive;
    report.strategy = strategy;
  }
  out[strong ? "slp" : "wlp"] = verdict_name(report.verdict);
  out["certificate"] = report.certificate ? json(report.certificate->to_string()) : json(nullptr);
  out["ranks"] = ranks_json(report.per_degree);
  std::cout << out.dump() << '\n';
  return verdict_exit(report.verdict);
}

int cmd_wlp(const ParamFlags& pf, const StrategyFlags& sf, const std::optional<std::string>& ideal, int cap,
            bool strong) {
  const Strategy strategy = sf.strategy();
  if (ideal) {
    if (pf.any()) throw Error(Errc::InvalidArgument, "--ideal cannot be combined with family parameters");
    return lefschetz_on_ideal(*ideal, cap, strategy, strong);
  }
  const GorensteinParams p = pf.params();
  SweepRecord rec = evaluate(p, strategy, strong);
  json out = to_json(rec);
  GradedQuotient q(build_ideal(p), default_degree_cap(p));
  LefschetzReport report = strong ? check_slp(q, strategy) : check_wlp(q, strategy);
  out["ranks"] = ranks_json(report.per_degree);
  std::cout << out.dump() << '\n';
  return verdict_exit(strong ? *rec.slp : rec.wlp);
}

int cmd_sweep(SweepSpec spec, const std::string& format, const std::optional<std::string>& output) {
  if (!spec.cache_path) spec.cache_path = default_cache_path();
  SweepResult result = run_sweep(spec);

  std::ofstream file;
  if (output) {
    file.open(*output);
    if (!file) throw std::runtime_error("cannot open output file " + *output);
  }
  std::ostream& os = output ? static_cast<std::ostream&>(file) : std::cout;
  if (format == "csv") os << csv_header(spec.slp) << '\n';
  bool failed = false;
  for (const auto& r : result.records) {
    os << (format == "csv" ? to_csv(r, spec.slp) : to_json(r).dump()) << '\n';
    failed = failed || r.wlp == Verdict::FailsProbably || (r.slp && *r.slp == Verdict::FailsProbably);
  }
  os.flush();
  std::cerr << "sweep: " << result.records.size() << " tuples, " << result.computed << " computed, " << result.cached
            << " from cache\n";
  return failed ? kExitFails : 0;
}

int cmd_apery(const std::string& gens_text) {
  NumericalSemigroup p(parse_generators(gens_text));
  AperySet ap = apery(p);
  MPureCheck mp = is_m_pure_symmetric(p);
  json failures = json::array();
  for (const auto& f : mp.failures) failures.push_back({{"i", f.index}, {"sum", f.sum}, {"order", f.order}});
  json out{{"generators", p.generators()}, {"apery", ap.elements}, {"orders", ap.orders},
           {"m_pure", mp.symmetric},       {"failures", failures},  {"histogram", order_histogram(p)}};
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_lemma(std::size_t n_min, std::size_t n_max, unsigned trials, long max_entry, std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) throw Error(Errc::InvalidArgument, "need 2 <= n-min <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
  json counterexamples = json::array();
  bool all_equal = true, all_positive = true;
  for (unsigned t = 0; t < trials; ++t) {
    const std::size_t n = pick_n(rng);
    const std::uint64_t sub_seed = rng();
    SnDeterminantCheck chk = sn_det_identity(random_sn(n, max_entry, sub_seed));
    all_equal = all_equal && chk.equal;
    all_positive = all_positive && chk.positive;
    if (!chk.equal || !chk.positive)
      counterexamples.push_back({{"n", n}, {"seed", sub_seed}, {"det", chk.det.get_str()},
                                 {"alpha_n", chk.alpha_n.get_str()}});
  }
  json out{{"checked", trials},
           {"all_equal", all_equal},
           {"all_positive", all_positive},
           {"counterexamples", counterexamples}};
  std::cout << out.dump() << '\n';
  return counterexamples.empty() ? 0 : kExitInvariant;
}

int cmd_hilbert(const ParamFlags& pf, const std::optional<std::string>& ideal, bool ci, int cap,
                std::optional<int> dmin, std::optional<int> dmax, const std::string& format) {
  std::optional<GradedQuotient> q;
  if (ideal) {
    if (pf.any()) throw Error(Errc::InvalidArgument, "--ideal cannot be combined with family parameters");
    q.emplace(parse_ideal(*ideal), cap);
  } else if (ci) {
    if (!(pf.a && pf.b && pf.c && pf.gamma)) throw Error(Errc::InvalidArgument, "--ci needs -a -b -c --gamma");
    q.emplace(build_ci(*pf.a, *pf.b, *pf.c, *pf.gamma), *pf.a + *pf.b + *pf.c);
  } else {
    const GorensteinParams p = pf.params();
    q.emplace(build_ideal(p), default_degree_cap(p));
  }
  const int lo = dmin.value_or(0);
  int hi;
  if (dmax) {
    hi = *dmax;
  } else {
    hi = hilbert_data(*q).socle_degree + 1;
  }
  if (lo < 0 || hi < lo) throw Error(Errc::InvalidArgument, "bad degree range");
  json rows = json::array();
  if (format == "csv") std::cout << "d,h\n";
  for (int d = lo; d <= hi; ++d) {
    const std::size_t h = q->hilbert(d);
    if (format == "csv") std::cout << d << ',' << h << '\n';
    rows.push_back({{"d", d}, {"h", h}});
  }
  if (format != "csv") std::cout << json{{"ideal", q->ideal().to_string()}, {"hilbert", rows}}.dump() << '\n';
  return 0;
}

int cmd_classify(const ParamFlags& pf) {
  const GorensteinParams p = pf.params();
  const CoverageReport r = classify(p);
  json out{{"a", p.a},         {"b", p.b},         {"c", p.c},           {"beta", p.beta},
           {"gamma", p.gamma}, {"thm37", r.thm37}, {"thm38", r.thm38},   {"cor313a", r.cor313a},
           {"cor313b", r.cor313b}, {"small2", r.small2}, {"small3", r.small3}, {"small4", r.small4},
           {"small5", r.small5}, {"covered", r.covered}, {"D", expected_socle_degree(p)}};
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lefschetz-property checks for codimension-three Gorenstein algebras"};
  app.require_subcommand(1);

  ParamFlags wlp_p, slp_p, hil_p, cls_p;
  StrategyFlags wlp_s, slp_s, sweep_s;
  std::optional<std::string> wlp_ideal, slp_ideal, hil_ideal;
  int wlp_cap = 40, slp_cap = 40, hil_cap = 40;

  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz check for one tuple or an ideal");
  wlp_p.add(wlp);
  wlp_s.add(wlp);
  wlp->add_option("--ideal", wlp_ideal, "comma-separated generators in x,y,z");
  wlp->add_option("--cap", wlp_cap, "degree cap for --ideal")->capture_default_str();

  auto* slp = app.add_subcommand("slp", "strong Lefschetz check for one tuple or an ideal");
  slp_p.add(slp);
  slp_s.add(slp);
  slp->add_option("--ideal", slp_ideal, "comma-separated generators in x,y,z");
  slp->add_option("--cap", slp_cap, "degree cap for --ideal")->capture_default_str();

  SweepSpec spec;
  std::string sweep_format = "json", filter = "all";
  std::optional<std::string> sweep_out, sweep_cache;
  auto* sweep = app.add_subcommand("sweep", "check every valid tuple with a_min <= a <= a_max");
  sweep->add_option("--a-max", spec.a_max, "largest a")->required();
  sweep->add_option("--a-min", spec.a_min, "smallest a")->capture_default_str();
  sweep->add_option("--filter", filter, "all | covered | uncovered")
      ->check(CLI::IsMember({"all", "covered", "uncovered"}))
      ->capture_default_str();
  sweep_s.add(sweep);
  sweep->add_flag("--slp", spec.slp, "also run the strong Lefschetz check");
  sweep->add_option("--jobs", spec.jobs, "worker threads (0 = all cores)")->capture_default_str();
  sweep->add_option("--cache", sweep_cache, "JSON-lines result cache (default $LEFSCHETZ_CACHE_DIR/sweep-cache.jsonl)");
  sweep->add_option("--format", sweep_format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_option("--output", sweep_out, "write records here instead of stdout");

  std::string gens;
  auto* ap = app.add_subcommand("apery", "Apery set, orders and M-pure symmetry of a numerical semigroup");
  ap->add_option("generators", gens, "comma-separated generators, e.g. 5,6,7,8")->required();

  std::size_t lemma_n = 8, lemma_n_min = 2;
  unsigned lemma_trials = 1000;
  long lemma_max = 9;
  std::uint64_t lemma_seed = 0;
  auto* lemma = app.add_subcommand("lemma", "batch check det = alpha_n > 0 on random unipotent-plus-row matrices");
  lemma->add_option("--n", lemma_n, "largest matrix order")->capture_default_str();
  lemma->add_option("--n-min", lemma_n_min, "smallest matrix order")->capture_default_str();
  lemma->add_option("--trials", lemma_trials, "number of matrices")->capture_default_str();
  lemma->add_option("--max-entry", lemma_max, "entries drawn from [0, max-entry]")->capture_default_str()->check(
      CLI::PositiveNumber);
  lemma->add_option("--seed", lemma_seed, "seed")->capture_default_str();

  bool hil_ci = false;
  std::optional<int> dmin, dmax;
  std::string hil_format = "json";
  auto* hil = app.add_subcommand("hilbert", "Hilbert function table");
  hil_p.add(hil);
  hil->add_flag("--ci", hil_ci, "use the complete intersection (x^a, y^b - x^{b-gamma} z^gamma, z^c)");
  hil->add_option("--ideal", hil_ideal, "comma-separated generators in x,y,z");
  hil->add_option("--cap", hil_cap, "degree cap for --ideal")->capture_default_str();
  hil->add_option("--dmin", dmin, "first degree");
  hil->add_option("--dmax", dmax, "last degree (default: socle degree + 1)");
  hil->add_option("--format", hil_format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* cls = app.add_subcommand("classify", "which published WLP results cover a tuple");
  cls_p.add(cls);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*wlp) return cmd_wlp(wlp_p, wlp_s, wlp_ideal, wlp_cap, false);
    if (*slp) return cmd_wlp(slp_p, slp_s, slp_ideal, slp_cap, true);
    if (*sweep) {
      spec.strategy = sweep_s.strategy();
      spec.filter = filter == "covered"     ? SweepFilter::CoveredOnly
                    : filter == "uncovered" ? SweepFilter::UncoveredOnly
                                            : SweepFilter::All;
      spec.cache_path = sweep_cache;
      return cmd_sweep(spec, sweep_format, sweep_out);
    }
    if (*ap) return cmd_apery(gens);
    if (*lemma) return cmd_lemma(lemma_n_min, lemma_n, lemma_trials, lemma_max, lemma_seed);
    if (*hil) return cmd_hilbert(hil_p, hil_ideal, hil_ci, hil_cap, dmin, dmax, hil_format);
    if (*cls) return cmd_classify(cls_p);
  } catch (const InvariantViolation& e) {
    std::cerr << "INVARIANT VIOLATION: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
