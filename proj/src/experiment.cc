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

#include "wtl/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wtl/codec.h"
#include "wtl/errors.h"
#include "wtl/gaussian.h"
#include "wtl/matrix_io.h"
#include "wtl/rng.h"
#include "wtl/security.h"
#include "wtl/stats.h"

namespace wtl {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
// Substream indices reserved outside the trial range.
constexpr uint64_t kCodeStream = uint64_t{1} << 62;
constexpr uint64_t kChannelStream = (uint64_t{1} << 62) + 1;

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(const std::string& key, const std::string& value) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    Fail(ErrorCode::kConfig, "key '" + key + "' expects a number, got '" +
                                 value + "'");
  }
  return v;
}

int64_t ParseInt(const std::string& key, const std::string& value) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    Fail(ErrorCode::kConfig, "key '" + key + "' expects an integer, got '" +
                                 value + "'");
  }
  return v;
}

uint64_t ParseSeed(const std::string& value) {
  size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!value.empty() && value[0] != '-') v = std::stoull(value, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    Fail(ErrorCode::kConfig, "seed must be a non-negative integer");
  }
  return v;
}

struct KeySpec {
  const char* name;
  bool numeric;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::optional<std::string>(const ExperimentConfig&)> get;
};

template <typename T>
KeySpec IntKey(const char* name, T ExperimentConfig::*field) {
  return {name, true,
          [name, field](ExperimentConfig& c, const std::string& v) {
            c.*field = static_cast<T>(ParseInt(name, v));
          },
          [field](const ExperimentConfig& c) -> std::optional<std::string> {
            return std::to_string(c.*field);
          }};
}

KeySpec DoubleKey(const char* name, double ExperimentConfig::*field) {
  return {name, true,
          [name, field](ExperimentConfig& c, const std::string& v) {
            c.*field = ParseDouble(name, v);
          },
          [field](const ExperimentConfig& c) -> std::optional<std::string> {
            return FormatDouble(c.*field);
          }};
}

KeySpec OptionalDoubleKey(const char* name,
                          std::optional<double> ExperimentConfig::*field) {
  return {name, true,
          [name, field](ExperimentConfig& c, const std::string& v) {
            c.*field = ParseDouble(name, v);
          },
          [field](const ExperimentConfig& c) -> std::optional<std::string> {
            if (!(c.*field)) return std::nullopt;
            return FormatDouble(*(c.*field));
          }};
}

KeySpec StringKey(const char* name, std::string ExperimentConfig::*field) {
  return {name, false,
          [field](ExperimentConfig& c, const std::string& v) { c.*field = v; },
          [field](const ExperimentConfig& c) -> std::optional<std::string> {
            return c.*field;
          }};
}

const std::vector<KeySpec>& Keys() {
  static const std::vector<KeySpec> keys = [] {
    std::vector<KeySpec> k = {
        IntKey("T", &ExperimentConfig::t),
        OptionalDoubleKey("c_b", &ExperimentConfig::c_b),
        OptionalDoubleKey("c_e", &ExperimentConfig::c_e),
        DoubleKey("beta", &ExperimentConfig::beta),
        StringKey("channel", &ExperimentConfig::channel),
        DoubleKey("delta", &ExperimentConfig::delta),
        DoubleKey("epsilon_threshold", &ExperimentConfig::epsilon_threshold),
        DoubleKey("flatness_tol", &ExperimentConfig::flatness_tol),
        DoubleKey("gain_b", &ExperimentConfig::gain_b),
        DoubleKey("gain_e", &ExperimentConfig::gain_e),
        StringKey("h_b_file", &ExperimentConfig::h_b_file),
        StringKey("h_e_file", &ExperimentConfig::h_e_file),
        IntKey("k_b", &ExperimentConfig::k_b),
        IntKey("k_e", &ExperimentConfig::k_e),
        IntKey("n_a", &ExperimentConfig::n_a),
        IntKey("n_b", &ExperimentConfig::n_b),
        IntKey("n_e", &ExperimentConfig::n_e),
        StringKey("name", &ExperimentConfig::name),
        StringKey("out", &ExperimentConfig::out),
        IntKey("p", &ExperimentConfig::p),
        StringKey("pair_file", &ExperimentConfig::pair_file),
        StringKey("region", &ExperimentConfig::region),
        DoubleKey("sigma_s", &ExperimentConfig::sigma_s),
        DoubleKey("snr_b", &ExperimentConfig::snr_b),
        DoubleKey("snr_e", &ExperimentConfig::snr_e),
        IntKey("trials", &ExperimentConfig::trials),
        IntKey("workers", &ExperimentConfig::workers),
    };
    k.push_back({"seed", true,
                 [](ExperimentConfig& c, const std::string& v) {
                   c.seed = ParseSeed(v);
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   if (!c.seed) return std::nullopt;
                   return std::to_string(*c.seed);
                 }});
    std::sort(k.begin(), k.end(), [](const KeySpec& a, const KeySpec& b) {
      return std::string(a.name) < std::string(b.name);
    });
    return k;
  }();
  return keys;
}

const KeySpec* FindKey(const std::string& key) {
  for (const KeySpec& k : Keys()) {
    if (key == k.name) return &k;
  }
  return nullptr;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) Fail(ErrorCode::kIo, "cannot write " + path.string());
  os << text;
  if (!os) Fail(ErrorCode::kIo, "write failed for " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) Fail(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Json NumberOrNull(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

double ExperimentConfig::sigma_b() const { return sigma_s / std::sqrt(snr_b); }
double ExperimentConfig::sigma_e() const { return sigma_s / std::sqrt(snr_e); }

double ExperimentConfig::capacity_b() const {
  if (c_b) return *c_b;
  return std::min(n_b, n_a) * std::log1p(snr_b * gain_b);
}

double ExperimentConfig::capacity_e() const {
  if (c_e) return *c_e;
  return std::min(n_e, n_a) * std::log1p(snr_e * gain_e);
}

CompoundSet ExperimentConfig::compound() const {
  CompoundSet set;
  set.n_a = n_a;
  set.n_b = n_b;
  set.n_e = n_e;
  set.power = power();
  set.sigma_b = sigma_b();
  set.sigma_e = sigma_e();
  set.c_b = capacity_b();
  set.c_e = capacity_e();
  return set;
}

bool IsNumericKey(const std::string& key) {
  const KeySpec* k = FindKey(key);
  return k != nullptr && k->numeric;
}

void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
  const KeySpec* k = FindKey(key);
  if (k == nullptr) Fail(ErrorCode::kConfig, "unknown config key '" + key + "'");
  k->set(config, value);
}

void ValidateConfig(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) Fail(ErrorCode::kConfig, what);
  };
  require(c.seed.has_value(), "seed is mandatory");
  require(c.n_a > 0 && c.n_b > 0 && c.n_e > 0, "antenna counts must be > 0");
  require(c.t > 0, "T must be > 0");
  require(IsPrime(c.p), "p must be prime");
  require(c.k_e >= 0 && c.k_e <= c.k_b && c.k_b <= 2 * c.n_a * c.t,
          "need 0 <= k_e <= k_b <= 2 n_a T");
  require(c.sigma_s > 0.0 && c.snr_b > 0.0 && c.snr_e > 0.0,
          "sigma_s and SNRs must be > 0");
  require(c.gain_b >= 0.0 && c.gain_e >= 0.0, "gains must be >= 0");
  require(!c.c_b || *c.c_b >= 0.0, "c_b must be >= 0");
  require(!c.c_e || *c.c_e >= 0.0, "c_e must be >= 0");
  require(c.trials >= 0, "trials must be >= 0");
  require(c.workers > 0, "workers must be > 0");
  require(c.flatness_tol > 0.0, "flatness_tol must be > 0");
  require(c.epsilon_threshold > 0.0, "epsilon_threshold must be > 0");
  require(c.delta > 0.0 && c.beta > 0.0, "delta and beta must be > 0");
  require(c.channel == "isotropic" || c.channel == "shell" ||
              c.channel == "file",
          "channel must be isotropic, shell or file");
  require(c.channel != "file" || (!c.h_b_file.empty() && !c.h_e_file.empty()),
          "channel = file needs h_b_file and h_e_file");
  require(c.region == "ball" || c.region == "shell",
          "region must be ball or shell");
  require(!c.name.empty() && c.name.find('/') == std::string::npos,
          "name must be a plain file stem");
}

ExperimentConfig ParseConfig(const std::string& text) {
  ExperimentConfig config;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string s = Trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      Fail(ErrorCode::kConfig,
           "line " + std::to_string(line_no) + ": expected key = value");
    }
    SetConfigValue(config, Trim(s.substr(0, eq)), Trim(s.substr(eq + 1)));
  }
  ValidateConfig(config);
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kConfig, "cannot read config " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ParseConfig(ss.str());
}

std::string CanonicalText(const ExperimentConfig& config) {
  std::string out;
  for (const KeySpec& k : Keys()) {
    if (auto v = k.get(config)) out += std::string(k.name) + " = " + *v + "\n";
  }
  return out;
}

std::string ConfigHash(const ExperimentConfig& config) {
  uint64_t h = 1469598103934665603ULL;
  for (const KeySpec& k : Keys()) {
    const std::string name = k.name;
    if (name == "workers" || name == "out" || name == "name") continue;
    const auto v = k.get(config);
    if (!v) continue;
    for (char ch : name + "=" + *v + "\n") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ChannelState ExperimentChannel(const ExperimentConfig& config) {
  ChannelState state;
  const double c_b = config.capacity_b(), c_e = config.capacity_e();
  if (config.channel == "file") {
    state.h_b = LoadMatrix(config.h_b_file);
    state.h_e = LoadMatrix(config.h_e_file);
    if (state.h_b.cols() != config.n_a || state.h_e.cols() != config.n_a ||
        state.h_b.rows() != config.n_b || state.h_e.rows() != config.n_e) {
      Fail(ErrorCode::kConfig, "channel files do not match antenna counts");
    }
  } else if (config.channel == "shell") {
    Rng rng(DeriveSeed(*config.seed, kChannelStream));
    state.h_b = SampleOnShell(config.n_b, config.n_a, config.snr_b, c_b, rng);
    state.h_e = SampleOnShell(config.n_e, config.n_a, config.snr_e, c_e, rng);
  } else {
    state.h_b = IsotropicOnShell(config.n_b, config.n_a, config.snr_b, c_b);
    state.h_e = IsotropicOnShell(config.n_e, config.n_a, config.snr_e, c_e);
  }
  return state;
}

NestedPair ExperimentPair(const ExperimentConfig& config) {
  if (!config.pair_file.empty()) {
    NestedPair pair = LoadPair(config.pair_file);
    if (pair.n_a != config.n_a || pair.t != config.t) {
      Fail(ErrorCode::kConfig, "pair file does not match n_a and T");
    }
    return pair;
  }
  Rng rng(DeriveSeed(*config.seed, kCodeStream));
  return SampleNestedPair(config.p, config.n_a, config.t, config.k_b,
                          config.k_e, rng);
}

SecuritySummary AnalyzeSecurity(const ExperimentConfig& config,
                                const NestedPair& pair,
                                const ChannelState& state) {
  SecuritySummary s;
  const CMatrix h_e = ReduceAntennaMismatch(state.h_e, config.beta);
  const CovarianceBundle bundle =
      EveCovariances(h_e, config.sigma_s, config.sigma_e());
  const FlatnessResult flat =
      FlatnessFactor(pair.lattice_e, SlotCovariance(bundle.sigma, config.t),
                     config.flatness_tol);
  s.epsilon = flat.epsilon;
  s.epsilon_tail = flat.tail_bound;
  s.rate = pair.rate;
  s.leakage_bound = LeakageBound(flat.epsilon, pair.rate, config.n_e, config.t);
  const VnrCheck sec =
      CheckSecrecy(pair.lattice_e, h_e, config.sigma_s, config.sigma_e(), config.t);
  s.gamma_secrecy = sec.gamma;
  s.secrecy_pass = sec.pass_vnr;
  s.secrecy_volume_pass = sec.pass_volume;
  const VnrCheck rel = CheckReliability(pair.lattice_b, state.h_b, config.snr_b,
                                        config.sigma_b(), config.t);
  s.gamma_reliability = rel.gamma;
  s.reliability_pass = rel.pass_vnr;
  s.reliability_volume_pass = rel.pass_volume;
  s.c_b = MutualInformation(state.h_b, config.snr_b);
  s.c_e = MutualInformation(state.h_e, config.snr_e);
  s.achievable_rate = AchievableRate(s.c_b, s.c_e, config.n_a);
  return s;
}

SimulationReport RunExperiment(const ExperimentConfig& config, bool write) {
  ValidateConfig(config);
  const auto start = std::chrono::steady_clock::now();
  SimulationReport report;
  report.config = config;
  report.seed = *config.seed;
  report.config_hash = ConfigHash(config);

  const NestedPair pair = ExperimentPair(config);
  const ChannelState state = ExperimentChannel(config);
  const WiretapEncoder encoder(pair, config.sigma_s);
  const WiretapDecoder decoder(pair, MmseGdfe(state.h_b, config.snr_b));
  report.security = AnalyzeSecurity(config, pair, state);

  report.trials.resize(config.trials);
  std::atomic<int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const int64_t i = next.fetch_add(1);
        if (i >= config.trials) break;
        Rng rng(DeriveSeed(report.seed, static_cast<uint64_t>(i)));
        TrialRecord& rec = report.trials[i];
        rec.trial = i;
        rec.message = static_cast<int64_t>(
            rng.UniformInt(static_cast<uint64_t>(pair.num_messages())));
        const CMatrix x = encoder.Encode(rec.message, rng);
        rec.power = x.squaredNorm() / static_cast<double>(x.size());
        const CMatrix y = ApplyChannel(x, state.h_b, config.sigma_b(), rng);
        rec.decoded = decoder.Decode(y);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(config.trials);
    }
  };
  const int workers =
      static_cast<int>(std::min<int64_t>(config.workers, std::max<int64_t>(1, config.trials)));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);

  double power = 0.0;
  for (const TrialRecord& rec : report.trials) {
    report.errors += rec.decoded != rec.message ? 1 : 0;
    power += rec.power;
  }
  if (config.trials > 0) {
    report.error_rate = static_cast<double>(report.errors) / config.trials;
    report.mean_power = power / config.trials;
  }
  const Interval ci = WilsonInterval(report.errors, config.trials);
  report.wilson_lo = ci.lo;
  report.wilson_hi = ci.hi;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (write) {
    const fs::path dir(config.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    WriteFile(dir / (config.name + ".cfg"), CanonicalText(config));
    WriteFile(dir / (config.name + "_trials.csv"), TrialsCsv(report));
    WriteFile(dir / (config.name + "_summary.json"), SummaryJson(report));
  }
  return report;
}

std::vector<SimulationReport> Sweep(const ExperimentConfig& config,
                                    const std::string& axis,
                                    const std::vector<double>& values,
                                    bool write) {
  if (!IsNumericKey(axis) || axis == "seed" || axis == "workers") {
    Fail(ErrorCode::kConfig, "cannot sweep over '" + axis + "'");
  }
  ValidateConfig(config);
  std::vector<SimulationReport> reports;
  std::string csv =
      "axis,value,name,seed,error_rate,wilson_lo,wilson_hi,epsilon,"
      "leakage_bound\n";
  for (size_t i = 0; i < values.size(); ++i) {
    ExperimentConfig point = config;
    SetConfigValue(point, axis, FormatDouble(values[i]));
    point.seed = DeriveSeed(*config.seed, i);
    char name[32];
    std::snprintf(name, sizeof(name), "point_%03zu", i);
    point.name = name;
    reports.push_back(RunExperiment(point, write));
    const SimulationReport& r = reports.back();
    csv += axis + "," + FormatDouble(values[i]) + "," + point.name + "," +
           std::to_string(r.seed) + "," + FormatDouble(r.error_rate) + "," +
           FormatDouble(r.wilson_lo) + "," + FormatDouble(r.wilson_hi) + "," +
           FormatDouble(r.security.epsilon) + "," +
           FormatDouble(r.security.leakage_bound) + "\n";
  }
  if (write) {
    std::error_code ec;
    fs::create_directories(config.out, ec);
    WriteFile(fs::path(config.out) / "sweep.csv", csv);
  }
  return reports;
}

std::string TrialsCsv(const SimulationReport& report) {
  std::string out = "config_hash,seed,trial,m,m_hat,err,power\n";
  for (const TrialRecord& r : report.trials) {
    out += report.config_hash + "," + std::to_string(report.seed) + "," +
           std::to_string(r.trial) + "," + std::to_string(r.message) + "," +
           std::to_string(r.decoded) + "," +
           (r.decoded != r.message ? "1" : "0") + "," + FormatDouble(r.power) +
           "\n";
  }
  return out;
}

namespace {

Json SecurityToJson(const SecuritySummary& s) {
  Json j;
  j["epsilon"] = s.epsilon;
  j["epsilon_tail_bound"] = s.epsilon_tail;
  j["leakage_bound"] = NumberOrNull(s.leakage_bound);
  j["leakage_finite"] = std::isfinite(s.leakage_bound);
  j["rate"] = s.rate;
  j["achievable_rate"] = s.achievable_rate;
  j["c_b"] = s.c_b;
  j["c_e"] = s.c_e;
  j["gamma_secrecy"] = s.gamma_secrecy;
  j["secrecy_margin"] = kPi - s.gamma_secrecy;
  j["secrecy_pass"] = s.secrecy_pass;
  j["secrecy_volume_pass"] = s.secrecy_volume_pass;
  j["gamma_reliability"] = s.gamma_reliability;
  j["reliability_margin"] = s.gamma_reliability - kPi * kE;
  j["reliability_pass"] = s.reliability_pass;
  j["reliability_volume_pass"] = s.reliability_volume_pass;
  return j;
}

}  // namespace

std::string SummaryJson(const SimulationReport& r) {
  Json j;
  j["config_hash"] = r.config_hash;
  j["seed"] = r.seed;
  j["name"] = r.config.name;
  j["trials"] = r.config.trials;
  j["errors"] = r.errors;
  j["error_rate"] = r.error_rate;
  j["wilson_lo"] = r.wilson_lo;
  j["wilson_hi"] = r.wilson_hi;
  j["mean_power"] = r.mean_power;
  j["power_limit"] = r.config.power();
  j["epsilon_threshold"] = r.config.epsilon_threshold;
  j["epsilon_below_threshold"] =
      r.security.epsilon < r.config.epsilon_threshold;
  j["security"] = SecurityToJson(r.security);
  j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

std::string SecurityJson(const ExperimentConfig& config,
                         const SecuritySummary& security) {
  Json j = SecurityToJson(security);
  j["config_hash"] = ConfigHash(config);
  j["seed"] = *config.seed;
  return j.dump(2) + "\n";
}

std::string BuildReport(const std::string& dir) {
  std::vector<fs::path> configs;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".cfg") configs.push_back(entry.path());
  }
  if (ec) Fail(ErrorCode::kIo, "cannot list " + dir);
  std::sort(configs.begin(), configs.end());
  std::string csv =
      "name,config_hash,seed,snr_b,snr_e,trials,err_rate,epsilon,"
      "leakage_bound,gamma_secrecy,secrecy_margin,gamma_reliability,"
      "reliability_margin\n";
  for (const fs::path& path : configs) {
    const ExperimentConfig config = LoadConfig(path.string());
    const std::string stem = path.stem().string();
    const NestedPair pair = ExperimentPair(config);
    const SecuritySummary s =
        AnalyzeSecurity(config, pair, ExperimentChannel(config));
    WriteFile(path.parent_path() / (stem + "_security.json"),
              SecurityJson(config, s));
    std::string err_rate;
    int64_t trials = 0;
    const fs::path trials_path = path.parent_path() / (stem + "_trials.csv");
    if (fs::exists(trials_path)) {
      std::istringstream is(ReadFile(trials_path));
      std::string line;
      std::getline(is, line);
      int64_t errors = 0;
      while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 7) Fail(ErrorCode::kIo, "malformed trial row");
        errors += fields[5] == "1" ? 1 : 0;
        ++trials;
      }
      if (trials > 0) err_rate = FormatDouble(static_cast<double>(errors) / trials);
    }
    csv += stem + "," + ConfigHash(config) + "," + std::to_string(*config.seed) +
           "," + FormatDouble(config.snr_b) + "," + FormatDouble(config.snr_e) +
           "," + std::to_string(trials) + "," + err_rate + "," +
           FormatDouble(s.epsilon) + "," +
           (std::isfinite(s.leakage_bound) ? FormatDouble(s.leakage_bound)
                                           : std::string("inf")) +
           "," + FormatDouble(s.gamma_secrecy) + "," +
           FormatDouble(kPi - s.gamma_secrecy) + "," +
           FormatDouble(s.gamma_reliability) + "," +
           FormatDouble(s.gamma_reliability - kPi * kE) + "\n";
  }
  WriteFile(fs::path(dir) / "report.csv", csv);
  return csv;
}

std::string EmitFigureData(const std::string& figure_id,
                           const std::vector<SimulationReport>& reports,
                           int grid) {
  if (figure_id == "fig1") {
    if (grid <= 0) Fail(ErrorCode::kConfig, "grid must be > 0");
    const Lattice z2 = Lattice::GaussianIntegers(1);
    RMatrix iso = 0.25 * RMatrix::Identity(2, 2);
    RMatrix corr = RMatrix::Zero(2, 2);
    corr(0, 0) = 0.25 * 6.0;
    corr(1, 1) = 0.25 / 6.0;
    const CovarianceSpec s_iso = CovarianceSpec::FromReal(iso);
    const CovarianceSpec s_corr = CovarianceSpec::FromReal(corr);
    std::string csv = "x1,x2,f_isotropic,f_correlated\n";
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const double x1 = static_cast<double>(i) / grid;
        const double x2 = static_cast<double>(j) / grid;
        CVector x(1);
        x(0) = Complex(x1, x2);
        csv += FormatDouble(x1) + "," + FormatDouble(x2) + "," +
               FormatDouble(PeriodicGaussian(z2, s_iso, x)) + "," +
               FormatDouble(PeriodicGaussian(z2, s_corr, x)) + "\n";
      }
    }
    return csv;
  }
  if (figure_id == "metrics") {
    std::string csv =
        "config_hash,seed,name,snr_b,snr_e,sigma_s,trials,error_rate,"
        "wilson_lo,wilson_hi,epsilon,leakage_bound,gamma_secrecy,"
        "gamma_reliability\n";
    for (const SimulationReport& r : reports) {
      csv += r.config_hash + "," + std::to_string(r.seed) + "," +
             r.config.name + "," + FormatDouble(r.config.snr_b) + "," +
             FormatDouble(r.config.snr_e) + "," +
             FormatDouble(r.config.sigma_s) + "," +
             std::to_string(r.config.trials) + "," +
             FormatDouble(r.error_rate) + "," + FormatDouble(r.wilson_lo) +
             "," + FormatDouble(r.wilson_hi) + "," +
             FormatDouble(r.security.epsilon) + "," +
             FormatDouble(r.security.leakage_bound) + "," +
             FormatDouble(r.security.gamma_secrecy) + "," +
             FormatDouble(r.security.gamma_reliability) + "\n";
    }
    return csv;
  }
  Fail(ErrorCode::kConfig, "unknown figure id '" + figure_id + "'");
}

}  // namespace wtl
