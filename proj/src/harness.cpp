#include "pwm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pwm/comparison.hpp"
#include "pwm/errors.hpp"
#include "pwm/estimators.hpp"
#include "pwm/jel.hpp"

namespace pwm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxFailureFraction = 0.01;

// Runs f(i) for i in [0, count) on `threads` workers. Results are stored by
// index, so the output never depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F&& f) {
  std::vector<T> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // unbiased
  std::size_t count = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  m.count = xs.size();
  if (xs.empty()) return {kNaN, kNaN, 0};
  double s = 0.0;
  for (double x : xs) s += x;
  m.mean = s / static_cast<double>(xs.size());
  if (xs.size() < 2) {
    m.var = kNaN;
    return m;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.var = ss / static_cast<double>(xs.size() - 1);
  return m;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return kNaN;
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

double proportion_se(double p, std::size_t reps) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
}

bool aborted(std::size_t failures, std::size_t reps) {
  return static_cast<double>(failures) > kMaxFailureFraction * static_cast<double>(reps);
}

void require_kind(const ExperimentConfig& c, ExperimentKind k) {
  c.validate();
  if (c.kind != k) {
    throw InputError("experiment kind is '" + kind_name(c.kind) + "', expected '" + kind_name(k) + "'");
  }
}

std::vector<double> draw_sample(const ExperimentConfig& c, int r, std::size_t n, std::size_t rep) {
  SeededRng rng(seed_for_rep(c.base_seed, cell_id(r, n), rep));
  return draw(c.dist, n, rng);
}

const std::vector<std::string> kEstimators = {"DN", "VXL", "JACK", "ADJJACK_LIT", "ADJJACK_CTR"};

// The five point estimators on one sample; centered adjusted estimator uses `center`.
std::vector<double> all_estimates(const SortedSample& s, PwmOrder r, double center) {
  const PseudoValues pv = jackknife_pseudo_values(s, r);
  const double jack = pv.mean();
  AjelOptions lit;
  lit.rule = AdjustRule::Literal;
  const double adj_lit = adjust(pv, lit).adjusted_jackknife_estimate();
  const double adj_ctr = adjust(pv, {}).adjusted_jackknife_estimate(center);
  return {dn_estimate(s, r), vexler_estimate(s, r), jack, adj_lit, adj_ctr};
}

struct EstimateRep {
  std::vector<double> values;  // empty on failure
};

std::vector<EstimateRep> estimate_cell(const ExperimentConfig& c, int r, std::size_t n, double beta,
                                       const RunOptions& run) {
  return parallel_map<EstimateRep>(c.replications, run.threads, [&](std::size_t rep) {
    try {
      const auto s = SortedSample::from_unsorted(draw_sample(c, r, n, rep));
      return EstimateRep{all_estimates(s, PwmOrder(r), beta)};
    } catch (const Error&) {
      return EstimateRep{};
    }
  });
}

ExperimentReport make_report(const ExperimentConfig& c) {
  ExperimentReport rep;
  rep.config = c;
  return rep;
}

void add_row(ExperimentReport& rep, int r, std::size_t n, const std::string& method, const std::string& metric,
             double value, double se) {
  rep.rows.push_back({label(rep.config.dist), r, n, method, metric, value, se});
}

struct MethodOutcome {
  bool failed = false;
  bool covered = false;
  bool limited = false;
  bool reject = false;
  double length = 0.0;
};

using RepOutcome = std::vector<MethodOutcome>;  // indexed like config.methods

RepOutcome coverage_rep(const ExperimentConfig& c, const SortedSample& s, PwmOrder r, double beta) {
  RepOutcome out(c.methods.size());
  std::optional<PseudoValues> pv;
  for (std::size_t m = 0; m < c.methods.size(); ++m) {
    MethodOutcome& o = out[m];
    try {
      ConfidenceInterval ci;
      switch (c.methods[m]) {
        case Method::JEL:
          if (!pv) pv = jackknife_pseudo_values(s, r);
          ci = jel_confidence_interval(*pv, c.level);
          break;
        case Method::AJEL:
          if (!pv) pv = jackknife_pseudo_values(s, r);
          ci = ajel_confidence_interval(*pv, c.level);
          break;
        case Method::DNEL:
        case Method::VXL:
          ci = plugin_el_ci(s, r, c.level, c.methods[m]);
          break;
      }
      o.covered = ci.contains(beta);
      o.length = ci.length();
      o.limited = ci.lower_at_limit || ci.upper_at_limit;
    } catch (const Error&) {
      o.failed = true;
    }
  }
  return out;
}

RepOutcome test_rep(const ExperimentConfig& c, const SortedSample& s, PwmOrder r, double beta0) {
  RepOutcome out(c.methods.size());
  std::optional<PseudoValues> pv;
  for (std::size_t m = 0; m < c.methods.size(); ++m) {
    MethodOutcome& o = out[m];
    try {
      TestResult t;
      switch (c.methods[m]) {
        case Method::JEL:
          if (!pv) pv = jackknife_pseudo_values(s, r);
          t = jel_test(*pv, beta0, c.alpha);
          break;
        case Method::AJEL:
          if (!pv) pv = jackknife_pseudo_values(s, r);
          t = ajel_test(*pv, beta0, c.alpha);
          break;
        case Method::DNEL:
        case Method::VXL:
          t = plugin_el_test(s, r, beta0, c.alpha, c.methods[m]);
          break;
      }
      o.reject = t.reject;
    } catch (const Error&) {
      o.failed = true;
    }
  }
  return out;
}

ExperimentReport rejection_experiment(const ExperimentConfig& c, const DistSpec& null_dist, const RunOptions& run) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = make_report(c);
  for (int r : c.r_values) {
    const double beta0 = true_beta(null_dist, PwmOrder(r));
    for (std::size_t n : c.n_values) {
      const auto outcomes = parallel_map<RepOutcome>(c.replications, run.threads, [&](std::size_t i) {
        const auto s = SortedSample::from_unsorted(draw_sample(c, r, n, i));
        return test_rep(c, s, PwmOrder(r), beta0);
      });
      for (std::size_t m = 0; m < c.methods.size(); ++m) {
        std::size_t failures = 0;
        std::size_t rejects = 0;
        for (const auto& o : outcomes) {
          failures += o[m].failed;
          rejects += o[m].reject;
        }
        const std::string name = method_name(c.methods[m]);
        const double p = static_cast<double>(rejects) / static_cast<double>(c.replications);
        if (aborted(failures, c.replications)) {
          add_row(rep, r, n, name, "rejection_rate", kNaN, kNaN);
        } else {
          add_row(rep, r, n, name, "rejection_rate", p, proportion_se(p, c.replications));
        }
        add_row(rep, r, n, name, "failures", static_cast<double>(failures), 0.0);
      }
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw InputError("config key '" + key + "': '" + v + "' is not a number");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw InputError("config key '" + key + "': '" + v + "' is not an integer");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fixed4(double v) {
  if (!std::isfinite(v)) return format_exact(v);
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

}  // namespace

std::string kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Variance: return "variance";
    case ExperimentKind::CoverageLength: return "coverage_length";
    case ExperimentKind::Size: return "size";
    case ExperimentKind::Power: return "power";
    case ExperimentKind::EstimatorBoxdata: return "estimator_boxdata";
  }
  return "?";
}

ExperimentKind parse_kind(const std::string& name) {
  if (name == "variance") return ExperimentKind::Variance;
  if (name == "coverage_length" || name == "coverage") return ExperimentKind::CoverageLength;
  if (name == "size") return ExperimentKind::Size;
  if (name == "power") return ExperimentKind::Power;
  if (name == "estimator_boxdata" || name == "boxdata") return ExperimentKind::EstimatorBoxdata;
  throw InputError("unknown experiment kind '" + name + "'");
}

std::vector<std::size_t> default_n_values(ExperimentKind kind) {
  if (kind == ExperimentKind::EstimatorBoxdata) return {25, 50, 150, 300};
  if (kind == ExperimentKind::Variance) return {25, 50, 150, 300};
  return {25, 50, 100, 200, 300};
}

void ExperimentConfig::validate() const {
  dist.validate();
  if (replications < 1) throw InputError("replications must be at least 1");
  if (!(level > 0.0 && level < 1.0)) throw InputError("level must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (r_values.empty()) throw InputError("r list is empty");
  if (n_values.empty()) throw InputError("n list is empty");
  if (methods.empty()) throw InputError("method list is empty");
  for (int r : r_values) {
    if (r < 1) throw InputError("r values must be >= 1");
    for (std::size_t n : n_values) {
      if (n < static_cast<std::size_t>(r) + 2) {
        throw InputError("n = " + std::to_string(n) + " is too small for r = " + std::to_string(r) +
                         " (jackknife needs n >= r+2)");
      }
    }
  }
  if (kind == ExperimentKind::Power) {
    if (!null_dist) throw InputError("power experiments need null_family / null_param");
    null_dist->validate();
  }
}

const ReportRow* ExperimentReport::find(int r, std::size_t n, const std::string& method,
                                        const std::string& metric) const {
  for (const auto& row : rows) {
    if (row.r == r && row.n == n && row.method == method && row.metric == metric) return &row;
  }
  return nullptr;
}

std::uint64_t seed_for_rep(std::uint64_t base_seed, std::uint64_t cell, std::uint64_t rep_index) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ (cell * 0xD1B54A32D192ED03ULL));
  // x -> x + odd * rep is injective mod 2^64 and splitmix64 is a bijection.
  return splitmix64(h + rep_index * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t cell_id(int r, std::size_t n) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(r)) << 32) | static_cast<std::uint64_t>(n);
}

ExperimentReport run_variance_experiment(const ExperimentConfig& c, const RunOptions& run) {
  require_kind(c, ExperimentKind::Variance);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = make_report(c);
  for (int r : c.r_values) {
    const double beta = true_beta(c.dist, PwmOrder(r));
    for (std::size_t n : c.n_values) {
      const auto reps = estimate_cell(c, r, n, beta, run);
      std::size_t failures = 0;
      for (const auto& e : reps) failures += e.values.empty();
      const bool abort = aborted(failures, c.replications);
      for (std::size_t k = 0; k < kEstimators.size(); ++k) {
        std::vector<double> xs;
        xs.reserve(reps.size());
        for (const auto& e : reps) {
          if (!e.values.empty()) xs.push_back(e.values[k]);
        }
        const Moments m = moments(xs);
        const double nn = static_cast<double>(n);
        const double nvar = abort ? kNaN : nn * m.var;
        const double nvar_se = xs.size() > 1 ? nvar * std::sqrt(2.0 / static_cast<double>(xs.size() - 1)) : kNaN;
        add_row(rep, r, n, kEstimators[k], "n_var", nvar, nvar_se);
        add_row(rep, r, n, kEstimators[k], "bias", abort ? kNaN : m.mean - beta,
                std::sqrt(m.var / static_cast<double>(std::max<std::size_t>(xs.size(), 1))));
      }
      add_row(rep, r, n, "ALL", "failures", static_cast<double>(failures), 0.0);
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

ExperimentReport run_coverage_experiment(const ExperimentConfig& c, const RunOptions& run) {
  require_kind(c, ExperimentKind::CoverageLength);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = make_report(c);
  for (int r : c.r_values) {
    const double beta = true_beta(c.dist, PwmOrder(r));
    for (std::size_t n : c.n_values) {
      const auto outcomes = parallel_map<RepOutcome>(c.replications, run.threads, [&](std::size_t i) {
        const auto s = SortedSample::from_unsorted(draw_sample(c, r, n, i));
        return coverage_rep(c, s, PwmOrder(r), beta);
      });
      for (std::size_t m = 0; m < c.methods.size(); ++m) {
        std::size_t failures = 0;
        std::size_t covered = 0;
        std::size_t limited = 0;
        std::vector<double> lengths;
        for (const auto& o : outcomes) {
          const auto& mo = o[m];
          failures += mo.failed;
          if (mo.failed) continue;  // counted as non-coverage
          covered += mo.covered;
          limited += mo.limited;
          lengths.push_back(mo.length);
        }
        const std::string name = method_name(c.methods[m]);
        const double p = static_cast<double>(covered) / static_cast<double>(c.replications);
        const Moments lm = moments(lengths);
        if (aborted(failures, c.replications)) {
          add_row(rep, r, n, name, "coverage", kNaN, kNaN);
          add_row(rep, r, n, name, "avg_length", kNaN, kNaN);
        } else {
          add_row(rep, r, n, name, "coverage", p, proportion_se(p, c.replications));
          add_row(rep, r, n, name, "avg_length", lm.mean,
                  std::sqrt(lm.var / static_cast<double>(std::max<std::size_t>(lengths.size(), 1))));
        }
        add_row(rep, r, n, name, "failures", static_cast<double>(failures), 0.0);
        add_row(rep, r, n, name, "hull_limited", static_cast<double>(limited), 0.0);
      }
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

ExperimentReport run_size_experiment(const ExperimentConfig& c, const RunOptions& run) {
  require_kind(c, ExperimentKind::Size);
  return rejection_experiment(c, c.dist, run);
}

ExperimentReport run_power_experiment(const ExperimentConfig& c, const RunOptions& run) {
  require_kind(c, ExperimentKind::Power);
  return rejection_experiment(c, *c.null_dist, run);
}

ExperimentReport run_estimator_boxdata(const ExperimentConfig& c, const RunOptions& run) {
  require_kind(c, ExperimentKind::EstimatorBoxdata);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = make_report(c);
  for (int r : c.r_values) {
    const double beta = true_beta(c.dist, PwmOrder(r));
    for (std::size_t n : c.n_values) {
      const auto reps = estimate_cell(c, r, n, beta, run);
      std::size_t failures = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].values.empty()) {
          ++failures;
          continue;
        }
        for (std::size_t k = 0; k < kEstimators.size(); ++k) {
          rep.boxdata.push_back({r, n, i, kEstimators[k], reps[i].values[k]});
        }
      }
      for (std::size_t k = 0; k < kEstimators.size(); ++k) {
        std::vector<double> xs;
        for (const auto& e : reps) {
          if (!e.values.empty()) xs.push_back(e.values[k]);
        }
        const Moments m = moments(xs);
        add_row(rep, r, n, kEstimators[k], "mean", m.mean,
                std::sqrt(m.var / static_cast<double>(std::max<std::size_t>(xs.size(), 1))));
        add_row(rep, r, n, kEstimators[k], "median", median(xs), 0.0);
      }
      add_row(rep, r, n, "REF", "true_beta", beta, 0.0);
      add_row(rep, r, n, "ALL", "failures", static_cast<double>(failures), 0.0);
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& c, const RunOptions& run) {
  switch (c.kind) {
    case ExperimentKind::Variance: return run_variance_experiment(c, run);
    case ExperimentKind::CoverageLength: return run_coverage_experiment(c, run);
    case ExperimentKind::Size: return run_size_experiment(c, run);
    case ExperimentKind::Power: return run_power_experiment(c, run);
    case ExperimentKind::EstimatorBoxdata: return run_estimator_boxdata(c, run);
  }
  throw InputError("unknown experiment kind");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw InputError("config key '" + key + "' given twice");
    kv[key] = value;
  }

  static const std::vector<std::string> known = {"kind", "family", "param", "location", "r", "n_list",
                                                 "reps", "level", "alpha", "methods", "seed", "null_family",
                                                 "null_param", "null_location"};
  for (const auto& [k, v] : kv) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InputError("unknown config key '" + k + "'");
  }
  auto get = [&](const std::string& k) -> std::optional<std::string> {
    auto it = kv.find(k);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };

  if (auto v = get("kind")) c.kind = parse_kind(*v);
  if (auto v = get("family")) c.dist.family = parse_family(*v);
  if (auto v = get("param")) c.dist.param1 = parse_double("param", *v);
  if (auto v = get("location")) c.dist.param2 = parse_double("location", *v);
  if (auto v = get("r")) {
    c.r_values.clear();
    for (const auto& item : split_list(*v)) c.r_values.push_back(static_cast<int>(parse_int("r", item)));
  }
  c.n_values = default_n_values(c.kind);
  if (auto v = get("n_list")) {
    c.n_values.clear();
    for (const auto& item : split_list(*v)) {
      const long long n = parse_int("n_list", item);
      if (n < 1) throw InputError("n_list entries must be positive");
      c.n_values.push_back(static_cast<std::size_t>(n));
    }
  }
  if (auto v = get("reps")) {
    const long long reps = parse_int("reps", *v);
    if (reps < 1) throw InputError("reps must be at least 1");
    c.replications = static_cast<std::size_t>(reps);
  }
  if (auto v = get("level")) c.level = parse_double("level", *v);
  if (auto v = get("alpha")) c.alpha = parse_double("alpha", *v);
  if (auto v = get("methods")) {
    c.methods.clear();
    for (const auto& item : split_list(*v)) c.methods.push_back(parse_method(item));
  }
  if (auto v = get("seed")) c.base_seed = static_cast<std::uint64_t>(parse_int("seed", *v));
  if (get("null_family") || get("null_param") || get("null_location")) {
    DistSpec nd = c.dist;
    if (auto v = get("null_family")) nd.family = parse_family(*v);
    if (auto v = get("null_param")) nd.param1 = parse_double("null_param", *v);
    if (auto v = get("null_location")) nd.param2 = parse_double("null_location", *v);
    c.null_dist = nd;
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string format_exact(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "dist,r,n,method,metric,value,stderr\n";
  for (const auto& row : report.rows) {
    out << row.dist << ',' << row.r << ',' << row.n << ',' << row.method << ',' << row.metric << ','
        << format_exact(row.value) << ',' << format_exact(row.std_error) << '\n';
  }
}

void write_report_markdown(const ExperimentReport& report, std::ostream& out) {
  const auto& c = report.config;
  out << "# " << kind_name(c.kind) << ": " << label(c.dist);
  if (c.null_dist) out << " (H0 from " << label(*c.null_dist) << ")";
  out << "\n\nreplications " << c.replications << ", level " << c.level << ", alpha " << c.alpha << ", seed "
      << c.base_seed << "\n";

  std::vector<std::string> metrics;
  std::vector<std::string> methods;
  for (const auto& row : report.rows) {
    if (std::find(metrics.begin(), metrics.end(), row.metric) == metrics.end()) metrics.push_back(row.metric);
  }
  for (const auto& metric : metrics) {
    methods.clear();
    for (const auto& row : report.rows) {
      if (row.metric == metric && std::find(methods.begin(), methods.end(), row.method) == methods.end()) {
        methods.push_back(row.method);
      }
    }
    out << "\n## " << metric << "\n\n| r | n |";
    for (const auto& m : methods) out << ' ' << m << " |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) out << "---|";
    out << '\n';
    for (int r : c.r_values) {
      for (std::size_t n : c.n_values) {
        out << "| " << r << " | " << n << " |";
        for (const auto& m : methods) {
          const ReportRow* row = report.find(r, n, m, metric);
          out << ' ' << (row ? fixed4(row->value) : std::string("")) << " |";
        }
        out << '\n';
      }
    }
  }
  out << "\nelapsed " << std::fixed << std::setprecision(2) << report.elapsed.count() << " s\n";
}

void write_boxdata_csv(const ExperimentReport& report, std::ostream& out) {
  out << "dist,r,n,rep,estimator,value\n";
  const std::string d = label(report.config.dist);
  for (const auto& b : report.boxdata) {
    out << d << ',' << b.r << ',' << b.n << ',' << b.rep << ',' << b.estimator << ',' << format_exact(b.value)
        << '\n';
  }
}

}  // namespace pwm
