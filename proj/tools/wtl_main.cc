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

// Command-line front end for the wiretap lattice experiments.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtl/channel.h"
#include "wtl/errors.h"
#include "wtl/experiment.h"
#include "wtl/gaussian.h"
#include "wtl/lattice.h"
#include "wtl/matrix_io.h"
#include "wtl/rng.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct CommonFlags {
  std::string config;
  std::string seed;
  std::string out;
  int workers = 0;
};

void AddCommon(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config, "key = value config file");
  app->add_option("--seed", flags.seed, "master seed (overrides config)");
  app->add_option("--out", flags.out, "output directory");
  app->add_option("--workers", flags.workers, "worker threads")
      ->check(CLI::PositiveNumber);
}

std::string ReadText(const std::string& path) {
  std::ifstream is(path);
  if (!is) wtl::Fail(wtl::ErrorCode::kConfig, "cannot read config " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Command-line flags are appended so that they win over file values.
wtl::ExperimentConfig LoadWithOverrides(const CommonFlags& flags) {
  std::string text;
  if (!flags.config.empty()) text = ReadText(flags.config) + "\n";
  if (!flags.seed.empty()) text += "seed = " + flags.seed + "\n";
  if (!flags.out.empty()) text += "out = " + flags.out + "\n";
  if (flags.workers > 0) text += "workers = " + std::to_string(flags.workers) + "\n";
  return wtl::ParseConfig(text);
}

void WriteOrPrint(const std::string& dir, const std::string& file,
                  const std::string& text) {
  if (dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / file;
  std::ofstream os(path);
  if (!os) wtl::Fail(wtl::ErrorCode::kIo, "cannot write " + path.string());
  os << text;
  std::cout << path.string() << "\n";
}

std::vector<double> ParseValues(const std::string& list) {
  std::vector<double> values;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      wtl::Fail(wtl::ErrorCode::kConfig, "bad sweep value '" + item + "'");
    }
  }
  if (values.empty()) wtl::Fail(wtl::ErrorCode::kConfig, "no sweep values");
  return values;
}

int ExitCodeFor(wtl::ErrorCode code) {
  switch (code) {
    case wtl::ErrorCode::kConfig:
    case wtl::ErrorCode::kIo:
    case wtl::ErrorCode::kInvalidArgument:
    case wtl::ErrorCode::kShapeError:
    case wtl::ErrorCode::kUnsupportedShape:
    case wtl::ErrorCode::kDimensionTooLarge:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

std::string SummaryLine(const wtl::SimulationReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%s seed=%llu trials=%lld errors=%lld rate=%.4g "
                "[%.4g, %.4g] eps=%.4g leak=%.4g\n",
                r.config_hash.c_str(), static_cast<unsigned long long>(r.seed),
                static_cast<long long>(r.config.trials),
                static_cast<long long>(r.errors), r.error_rate, r.wilson_lo,
                r.wilson_hi, r.security.epsilon, r.security.leakage_bound);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice wiretap coding experiments"};
  app.require_subcommand(1);

  CommonFlags flat_flags, sim_flags, sweep_flags, quant_flags, fig_flags;
  std::string lattice_file, cov_file, route = "auto";
  double sigma = 0.0, tol = wtl::kDefaultSeriesTol;
  auto* flat = app.add_subcommand("flatness", "flatness factor of a lattice");
  AddCommon(flat, flat_flags);
  flat->add_option("--lattice", lattice_file, "complex generator matrix file");
  flat->add_option("--sigma", sigma, "spherical noise scale");
  flat->add_option("--cov", cov_file, "Hermitian covariance matrix file");
  flat->add_option("--route", route, "auto, dual or primal")
      ->check(CLI::IsMember({"auto", "dual", "primal"}));
  flat->add_option("--tol", tol, "truncation tolerance")
      ->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "run Monte-Carlo trials");
  AddCommon(sim, sim_flags);

  std::string axis, values;
  auto* sweep = app.add_subcommand("sweep", "sweep one numeric config key");
  AddCommon(sweep, sweep_flags);
  sweep->add_option("--axis", axis, "config key to vary")->required();
  sweep->add_option("--values", values, "comma-separated values")->required();

  double delta = 0.0;
  auto* quant = app.add_subcommand("quantize", "delta-cover Eve's covariances");
  AddCommon(quant, quant_flags);
  quant->add_option("--delta", delta, "covering radius")
      ->check(CLI::PositiveNumber);

  std::string report_dir;
  auto* report = app.add_subcommand("report", "security report for a run dir");
  report->add_option("--dir,--out", report_dir, "directory of runs")
      ->required();

  std::string figure_id = "fig1";
  int grid = 32;
  std::string fig_axis, fig_values;
  auto* figure = app.add_subcommand("figure", "emit plot data as CSV");
  AddCommon(figure, fig_flags);
  figure->add_option("--id", figure_id, "fig1 or metrics")
      ->check(CLI::IsMember({"fig1", "metrics"}));
  figure->add_option("--grid", grid, "grid points per axis")
      ->check(CLI::PositiveNumber);
  figure->add_option("--axis", fig_axis, "sweep axis for metrics");
  figure->add_option("--values", fig_values, "sweep values for metrics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*flat) {
      wtl::Lattice lattice = wtl::Lattice::GaussianIntegers(1);
      std::optional<wtl::CovarianceSpec> spread;
      std::optional<wtl::ExperimentConfig> config;
      if (!flat_flags.config.empty() || !flat_flags.seed.empty()) {
        config = LoadWithOverrides(flat_flags);
        const auto pair = wtl::ExperimentPair(*config);
        const auto state = wtl::ExperimentChannel(*config);
        lattice = pair.lattice_e;
        const auto bundle = wtl::EveCovariances(
            wtl::ReduceAntennaMismatch(state.h_e, config->beta),
            config->sigma_s, config->sigma_e());
        spread = wtl::SlotCovariance(bundle.sigma, config->t);
      }
      if (!lattice_file.empty()) {
        lattice = wtl::Lattice::FromComplexGenerator(wtl::LoadMatrix(lattice_file));
      }
      if (!cov_file.empty()) {
        spread = wtl::CovarianceSpec::FromHermitian(wtl::LoadMatrix(cov_file));
      } else if (sigma > 0.0) {
        spread = wtl::CovarianceSpec::Spherical(lattice.complex_dim(), sigma);
      }
      if (!spread) {
        wtl::Fail(wtl::ErrorCode::kConfig, "flatness needs --sigma, --cov or --config");
      }
      const wtl::FlatnessRoute r = route == "dual"     ? wtl::FlatnessRoute::kDual
                                   : route == "primal" ? wtl::FlatnessRoute::kPrimal
                                                       : wtl::FlatnessRoute::kAuto;
      const auto result = wtl::FlatnessFactor(lattice, *spread, tol, r);
      Json j;
      j["epsilon"] = result.epsilon;
      j["tail_bound"] = result.tail_bound;
      j["points"] = result.points;
      j["route"] = result.route == wtl::FlatnessRoute::kPrimal ? "primal" : "dual";
      j["vnr"] = wtl::Vnr(lattice, *spread);
      if (config) {
        j["config_hash"] = wtl::ConfigHash(*config);
        j["seed"] = *config->seed;
      }
      WriteOrPrint(flat_flags.out, "flatness.json", j.dump(2) + "\n");
    } else if (*sim) {
      const auto config = LoadWithOverrides(sim_flags);
      std::cout << SummaryLine(wtl::RunExperiment(config));
    } else if (*sweep) {
      const auto config = LoadWithOverrides(sweep_flags);
      for (const auto& r : wtl::Sweep(config, axis, ParseValues(values))) {
        std::cout << SummaryLine(r);
      }
    } else if (*quant) {
      auto config = LoadWithOverrides(quant_flags);
      if (delta > 0.0) config.delta = delta;
      wtl::Rng rng(wtl::DeriveSeed(*config.seed, 0));
      const auto region = config.region == "shell" ? wtl::ChannelRegion::kShell
                                                   : wtl::ChannelRegion::kBall;
      const auto covering =
          wtl::QuantizeChannelSpace(config.compound(), config.delta, region, rng);
      Json j;
      j["config_hash"] = wtl::ConfigHash(config);
      j["seed"] = *config.seed;
      j["delta"] = covering.delta;
      j["centers"] = covering.centers.size();
      j["max_validated_gap"] = covering.max_validated_gap;
      j["validation_probes"] = covering.validation_probes;
      Json centers = Json::array();
      for (const auto& c : covering.centers) {
        std::ostringstream ss;
        wtl::WriteMatrix(ss, c);
        centers.push_back(ss.str());
      }
      j["center_matrices"] = centers;
      WriteOrPrint(quant_flags.out.empty() ? config.out : quant_flags.out,
                   config.name + "_covering.json", j.dump(2) + "\n");
    } else if (*report) {
      std::cout << wtl::BuildReport(report_dir);
    } else if (*figure) {
      std::vector<wtl::SimulationReport> reports;
      if (figure_id == "metrics" && !fig_flags.config.empty()) {
        const auto config = LoadWithOverrides(fig_flags);
        if (fig_axis.empty()) {
          reports.push_back(wtl::RunExperiment(config, false));
        } else {
          reports = wtl::Sweep(config, fig_axis, ParseValues(fig_values), false);
        }
      }
      WriteOrPrint(fig_flags.out, figure_id + ".csv",
                   wtl::EmitFigureData(figure_id, reports, grid));
    }
  } catch (const wtl::TruncationError& e) {
    std::cerr << "truncation: " << e.what() << " (partial sum "
              << e.partial_sum() << ", tail bound " << e.tail_bound() << ")\n";
    return kExitNumerical;
  } catch (const wtl::Error& e) {
    std::cerr << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
