#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pwm/distributions.hpp"
#include "pwm/inference_types.hpp"

namespace pwm {

enum class ExperimentKind { Variance, CoverageLength, Size, Power, EstimatorBoxdata };

std::string kind_name(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::CoverageLength;
  DistSpec dist = exponential(1.0);
  std::optional<DistSpec> null_dist;  ///< power runs: H0 is beta_r of this distribution
  std::vector<int> r_values{1, 2, 3, 4};
  std::vector<std::size_t> n_values{25, 50, 100, 200, 300};
  std::size_t replications = 2000;
  double level = 0.95;
  double alpha = 0.05;
  std::vector<Method> methods{Method::DNEL, Method::VXL, Method::JEL, Method::AJEL};
  std::uint64_t base_seed = 20190101;

  /// Throws InputError on any violated invariant.
  void validate() const;
};

/// n grid used when a config does not list one.
std::vector<std::size_t> default_n_values(ExperimentKind kind);

struct ReportRow {
  std::string dist;
  int r = 1;
  std::size_t n = 0;
  std::string method;
  std::string metric;
  double value = 0.0;
  double std_error = 0.0;
};

/// One per-replication estimate, for external box plots.
struct BoxdataRow {
  int r = 1;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::string estimator;
  double value = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::vector<BoxdataRow> boxdata;
  std::chrono::duration<double> elapsed{0.0};

  /// First row matching all keys, or nullptr.
  const ReportRow* find(int r, std::size_t n, const std::string& method, const std::string& metric) const;
};

struct RunOptions {
  unsigned threads = 1;
};

/// Mixes (base seed, cell, replication) into a 64-bit stream seed. Injective
/// in `rep` for fixed (base, cell); independent of scheduling.
std::uint64_t seed_for_rep(std::uint64_t base_seed, std::uint64_t cell_id, std::uint64_t rep_index);

/// Stable identifier for the (r, n) cell; shared by every experiment kind so
/// that identical seeds give identical samples across kinds and levels.
std::uint64_t cell_id(int r, std::size_t n);

ExperimentReport run_variance_experiment(const ExperimentConfig& config, const RunOptions& run = {});
ExperimentReport run_coverage_experiment(const ExperimentConfig& config, const RunOptions& run = {});
ExperimentReport run_size_experiment(const ExperimentConfig& config, const RunOptions& run = {});
ExperimentReport run_power_experiment(const ExperimentConfig& config, const RunOptions& run = {});
ExperimentReport run_estimator_boxdata(const ExperimentConfig& config, const RunOptions& run = {});
ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& run = {});

/// Flat `key = value` file; `#` starts a comment. Keys: kind, family, param,
/// location, r, n_list, reps, level, alpha, methods, seed, null_family,
/// null_param, null_location. Lists are comma separated.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Header `dist,r,n,method,metric,value,stderr`, full round-trip precision.
void write_report_csv(const ExperimentReport& report, std::ostream& out);
/// One table per metric: rows (r, n), columns methods, 4 decimals.
void write_report_markdown(const ExperimentReport& report, std::ostream& out);
/// Header `dist,r,n,rep,estimator,value`.
void write_boxdata_csv(const ExperimentReport& report, std::ostream& out);

/// Shortest text that parses back to exactly `v` ("nan", "inf", "-inf" for non-finite).
std::string format_exact(double v);

}  // namespace pwm
