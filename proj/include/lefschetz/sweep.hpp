#pragma once

// Per-tuple evaluation records, their JSON-lines / CSV encodings, the
// append-only result cache and the parallel parameter sweep.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lefschetz/family.hpp"
#include "lefschetz/quotient.hpp"

namespace lefschetz {

/// Raised when the engine contradicts itself or a published theorem; the
/// CLI maps it to exit code 4.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SweepFilter { All, CoveredOnly, UncoveredOnly };

struct SweepSpec {
  int a_min = 2;
  int a_max = 2;
  SweepFilter filter = SweepFilter::All;
  Strategy strategy;
  bool slp = false;
  unsigned jobs = 1;
  std::optional<std::string> cache_path;
};

struct SweepRecord {
  GorensteinParams params;
  int socle_degree = 0;
  std::vector<std::size_t> h;
  CoverageReport coverage;
  Verdict wlp = Verdict::Inconclusive;
  std::optional<std::string> certificate;
  std::optional<Verdict> slp;
  double ms = 0;
  Strategy strategy;
};

inline std::optional<Verdict> verdict_from_name(const std::string& s) {
  for (Verdict v : {Verdict::Holds, Verdict::FailsProbably, Verdict::Inconclusive})
    if (s == verdict_name(v)) return v;
  return std::nullopt;
}

/// Builds the family quotient, checks its Hilbert data, WLP (and optionally
/// SLP), and cross-checks: socle degree formula, Gorenstein symmetry, the
/// middle-degree criterion for x-y-z against the full definition, and that
/// every covered tuple holds.
inline SweepRecord evaluate(const GorensteinParams& params, const Strategy& strategy, bool with_slp) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.params = validate(params);
  rec.strategy = strategy;
  rec.coverage = classify(params);

  GradedQuotient q(build_ideal(params), default_degree_cap(params));
  const HilbertData hd = hilbert_data(q);
  rec.socle_degree = hd.socle_degree;
  rec.h = hd.h;
  if (hd.socle_degree != expected_socle_degree(params) || !is_gorenstein_symmetric(hd))
    throw InvariantViolation("Hilbert data of " + params.to_string() + " is not Gorenstein with D = a+b+c-beta-3");

  const WlpReport wlp = check_wlp(q, strategy);
  rec.wlp = wlp.verdict;
  if (wlp.certificate) rec.certificate = wlp.certificate->to_string();

  if (strategy.try_default_first) {
    const bool middle = check_wlp_gorenstein_middle(q, LinearForm::first_minus_rest(3));
    const bool full = wlp.certificate_index && *wlp.certificate_index == 0;
    if (middle != full)
      throw InvariantViolation("middle-degree criterion disagrees with the per-degree check for x-y-z at " +
                               params.to_string());
  }
  if (rec.coverage.covered && rec.wlp != Verdict::Holds)
    throw InvariantViolation("tuple " + params.to_string() + " is covered by a theorem but the WLP check returned " +
                             verdict_name(rec.wlp));

  if (with_slp) rec.slp = check_slp(q, strategy).verdict;
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline nlohmann::json to_json(const SweepRecord& r) {
  nlohmann::json flags = nlohmann::json::object();
  flags["thm37"] = r.coverage.thm37;
  flags["thm38"] = r.coverage.thm38;
  flags["cor313a"] = r.coverage.cor313a;
  flags["cor313b"] = r.coverage.cor313b;
  flags["small2"] = r.coverage.small2;
  flags["small3"] = r.coverage.small3;
  flags["small4"] = r.coverage.small4;
  flags["small5"] = r.coverage.small5;
  nlohmann::json j;
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["c"] = r.params.c;
  j["beta"] = r.params.beta;
  j["gamma"] = r.params.gamma;
  j["D"] = r.socle_degree;
  j["h"] = r.h;
  j["covered"] = r.coverage.covered;
  j["flags"] = flags;
  j["wlp"] = verdict_name(r.wlp);
  j["certificate"] = r.certificate ? nlohmann::json(*r.certificate) : nlohmann::json(nullptr);
  j["slp"] = r.slp ? nlohmann::json(verdict_name(*r.slp)) : nlohmann::json(nullptr);
  j["ms"] = r.ms;
  j["strategy"] = {{"trials", r.strategy.trials},
                   {"bound", r.strategy.bound},
                   {"seed", r.strategy.seed},
                   {"default_first", r.strategy.try_default_first}};
  return j;
}

inline SweepRecord record_from_json(const nlohmann::json& j) {
  SweepRecord r;
  r.params = {j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>(), j.at("beta").get<int>(),
              j.at("gamma").get<int>()};
  r.socle_degree = j.at("D").get<int>();
  r.h = j.at("h").get<std::vector<std::size_t>>();
  const auto& f = j.at("flags");
  r.coverage.thm37 = f.at("thm37").get<bool>();
  r.coverage.thm38 = f.at("thm38").get<bool>();
  r.coverage.cor313a = f.at("cor313a").get<bool>();
  r.coverage.cor313b = f.at("cor313b").get<bool>();
  r.coverage.small2 = f.at("small2").get<bool>();
  r.coverage.small3 = f.at("small3").get<bool>();
  r.coverage.small4 = f.at("small4").get<bool>();
  r.coverage.small5 = f.at("small5").get<bool>();
  r.coverage.covered = j.at("covered").get<bool>();
  auto v = verdict_from_name(j.at("wlp").get<std::string>());
  if (!v) throw std::runtime_error("unknown verdict in record");
  r.wlp = *v;
  if (!j.at("certificate").is_null()) r.certificate = j.at("certificate").get<std::string>();
  if (!j.at("slp").is_null()) {
    auto s = verdict_from_name(j.at("slp").get<std::string>());
    if (!s) throw std::runtime_error("unknown slp verdict in record");
    r.slp = *s;
  }
  r.ms = j.at("ms").get<double>();
  const auto& st = j.at("strategy");
  r.strategy.trials = st.at("trials").get<unsigned>();
  r.strategy.bound = st.at("bound").get<long>();
  r.strategy.seed = st.at("seed").get<std::uint64_t>();
  r.strategy.try_default_first = st.at("default_first").get<bool>();
  return r;
}

inline std::string csv_header(bool with_slp) {
  return std::string("a,b,c,beta,gamma,D,h,covered,flags,verdict,certificate,ms") + (with_slp ? ",slp" : "");
}

/// One CSV line; h is ';'-joined, flags '|'-joined ("-" when none).
inline std::string to_csv(const SweepRecord& r, bool with_slp) {
  std::ostringstream os;
  const auto& p = r.params;
  os << p.a << ',' << p.b << ',' << p.c << ',' << p.beta << ',' << p.gamma << ',' << r.socle_degree << ',';
  for (std::size_t i = 0; i < r.h.size(); ++i) os << (i ? ";" : "") << r.h[i];
  os << ',' << (r.coverage.covered ? "true" : "false") << ',';
  auto names = r.coverage.names();
  if (names.empty()) os << '-';
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "|" : "") << names[i];
  os << ',' << verdict_name(r.wlp) << ',' << (r.certificate ? *r.certificate : "-") << ',';
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  os << ms;
  if (with_slp) os << ',' << (r.slp ? verdict_name(*r.slp) : "-");
  return os.str();
}

inline std::string cache_key(const GorensteinParams& p, const Strategy& s, bool slp) {
  std::ostringstream os;
  os << p.a << ',' << p.b << ',' << p.c << ',' << p.beta << ',' << p.gamma << '|' << s.trials << ',' << s.bound << ','
     << s.seed << ',' << s.try_default_first << '|' << slp;
  return os.str();
}

/// Append-only JSON-lines cache keyed by (params, strategy, slp).
/// Unparseable lines (e.g. a torn final write) are skipped on load.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      needs_newline_ = in.eof();
      if (line.empty()) continue;
      try {
        SweepRecord r = record_from_json(nlohmann::json::parse(line));
        entries_[cache_key(r.params, r.strategy, r.slp.has_value())] = r;
      } catch (const std::exception&) {
        ++skipped_;
      }
    }
  }

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t skipped_lines() const noexcept { return skipped_; }

  std::optional<SweepRecord> find(const GorensteinParams& p, const Strategy& s, bool slp) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(cache_key(p, s, slp));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void append(const SweepRecord& r) {
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_);
    if (needs_newline_) out << '\n';
    needs_newline_ = false;
    out << to_json(r).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed writing cache file " + path_);
    entries_[cache_key(r.params, r.strategy, r.slp.has_value())] = r;
  }

 private:
  std::string path_;
  std::map<std::string, SweepRecord> entries_;
  std::size_t skipped_ = 0;
  bool needs_newline_ = false;  // last line on disk lacks its terminator
  mutable std::mutex mu_;
};

/// Cache file from the environment: $LEFSCHETZ_CACHE_DIR/sweep-cache.jsonl.
inline std::optional<std::string> default_cache_path() {
  const char* dir = std::getenv("LEFSCHETZ_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir) + "/sweep-cache.jsonl";
}

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by parameter tuple
  std::size_t computed = 0;
  std::size_t cached = 0;
};

inline std::vector<GorensteinParams> sweep_tuples(const SweepSpec& spec) {
  std::vector<GorensteinParams> out;
  for (const auto& p : enumerate_params(spec.a_min, spec.a_max)) {
    const bool covered = classify(p).covered;
    if (spec.filter == SweepFilter::CoveredOnly && !covered) continue;
    if (spec.filter == SweepFilter::UncoveredOnly && covered) continue;
    out.push_back(p);
  }
  return out;
}

inline SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.strategy.trials < 1) throw Error(Errc::InvalidArgument, "sweeps need trials >= 1");
  const auto tuples = sweep_tuples(spec);
  std::optional<ResultCache> cache;
  if (spec.cache_path) cache.emplace(*spec.cache_path);

  SweepResult result;
  result.records.resize(tuples.size());
  std::atomic<std::size_t> next{0}, computed{0}, cached{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tuples.size() || stop.load()) return;
      try {
        if (cache) {
          if (auto hit = cache->find(tuples[i], spec.strategy, spec.slp)) {
            result.records[i] = *hit;
            ++cached;
            continue;
          }
        }
        result.records[i] = evaluate(tuples[i], spec.strategy, spec.slp);
        ++computed;
        if (cache) cache->append(result.records[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  unsigned jobs = spec.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.jobs;
  if (jobs <= 1 || tuples.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  result.computed = computed;
  result.cached = cached;
  return result;
}

}  // namespace lefschetz
