// Copyright 2026 The wtlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTL_EXPERIMENT_H_
#define WTL_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtl/channel.h"
#include "wtl/construction_a.h"

namespace wtl {

// Flat key = value configuration. Lines starting with '#' are comments.
// Numeric keys: n_a n_b n_e p T k_b k_e sigma_s snr_b snr_e gain_b gain_e
// c_b c_e trials seed workers flatness_tol epsilon_threshold delta beta.
// String keys: name out channel (isotropic | shell | file) h_b_file h_e_file
// pair_file region (shell | ball).
//
// Capacities default to min(n_rx, n_a) ln(1 + snr * gain), the isotropic
// channel with H^H H = gain I; c_b / c_e override them.
struct ExperimentConfig {
  std::string name = "run";
  int n_a = 2;
  int n_b = 2;
  int n_e = 2;
  int64_t p = 5;
  int t = 2;
  int k_b = 8;
  int k_e = 6;
  double sigma_s = 2.0;
  double snr_b = 100.0;
  double snr_e = 4.0;
  double gain_b = 1.0;
  double gain_e = 1.0;
  std::optional<double> c_b;
  std::optional<double> c_e;
  std::string channel = "isotropic";
  std::string h_b_file;
  std::string h_e_file;
  std::string pair_file;
  int64_t trials = 1000;
  std::optional<uint64_t> seed;
  int workers = 1;
  std::string out = ".";
  double flatness_tol = 1e-12;
  double epsilon_threshold = 0.1;
  double delta = 0.1;
  std::string region = "ball";
  double beta = 1e-3;

  double power() const { return sigma_s * sigma_s; }
  double sigma_b() const;
  double sigma_e() const;
  double capacity_b() const;
  double capacity_e() const;
  CompoundSet compound() const;
};

// Throws Error(kConfig) on unknown keys, malformed values, a missing seed or
// inconsistent parameters.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);
void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value);
void ValidateConfig(const ExperimentConfig& config);
bool IsNumericKey(const std::string& key);

// Sorted key = value lines with 17 significant digits.
std::string CanonicalText(const ExperimentConfig& config);
// FNV-1a (64 bit, hex) of the canonical text without `workers`, `out` and
// `name`, so the hash identifies the computation rather than its execution.
std::string ConfigHash(const ExperimentConfig& config);

struct TrialRecord {
  int64_t trial = 0;
  int64_t message = 0;
  int64_t decoded = 0;
  double power = 0.0;
};

struct SecuritySummary {
  double epsilon = 0.0;
  double epsilon_tail = 0.0;
  double leakage_bound = 0.0;
  double gamma_secrecy = 0.0;
  bool secrecy_pass = false;
  bool secrecy_volume_pass = false;
  double gamma_reliability = 0.0;
  bool reliability_pass = false;
  bool reliability_volume_pass = false;
  double rate = 0.0;
  double achievable_rate = 0.0;
  double c_b = 0.0;
  double c_e = 0.0;
};

struct SimulationReport {
  std::string config_hash;
  uint64_t seed = 0;
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  int64_t errors = 0;
  double error_rate = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
  double mean_power = 0.0;
  SecuritySummary security;
  double runtime_seconds = 0.0;
};

// Channel state used by a run: isotropic shell points, a seeded shell draw,
// or matrices loaded from files.
ChannelState ExperimentChannel(const ExperimentConfig& config);
NestedPair ExperimentPair(const ExperimentConfig& config);
SecuritySummary AnalyzeSecurity(const ExperimentConfig& config,
                                const NestedPair& pair,
                                const ChannelState& state);

// Deterministic given the seed: trial i draws from the substream
// DeriveSeed(seed, i), so the worker count never changes the records. Writes
// <name>.cfg, <name>_trials.csv and <name>_summary.json into config.out when
// `write` is set.
SimulationReport RunExperiment(const ExperimentConfig& config,
                               bool write = true);

// One run per value with name point_NNN and seed DeriveSeed(seed, index);
// also writes sweep.csv. Throws kConfig for non-numeric axes.
std::vector<SimulationReport> Sweep(const ExperimentConfig& config,
                                    const std::string& axis,
                                    const std::vector<double>& values,
                                    bool write = true);

std::string TrialsCsv(const SimulationReport& report);
std::string SummaryJson(const SimulationReport& report);
std::string SecurityJson(const ExperimentConfig& config,
                         const SecuritySummary& security);

// Recomputes the security analysis for every *.cfg in `dir`, reading error
// counts from the matching *_trials.csv, and writes <name>_security.json and
// report.csv (snr_b, err_rate, epsilon, leakage_bound, secrecy and
// reliability margins). Returns the CSV text.
std::string BuildReport(const std::string& dir);

// "fig1": the periodic Gaussian on Z^2 over a g x g grid of [0, 1)^2 for
// Sigma = 0.25 I and Sigma = 0.25 diag(6, 1/6). "metrics": one row per
// report. Other ids throw kConfig.
std::string EmitFigureData(const std::string& figure_id,
                           const std::vector<SimulationReport>& reports,
                           int grid = 32);

}  // namespace wtl

#endif  // WTL_EXPERIMENT_H_
