// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qswitch: capacity sweeps, violation boundaries and oracle checks for Pauli
// channels composed in a definite order and in a quantum switch.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qswitch/qswitch.hpp"

namespace {

using namespace qswitch;

const std::map<std::string, FamilyKind> kFamilies = {
    {"bitphase", FamilyKind::BitPhaseFlip},
    {"entanglement-breaking", FamilyKind::EntanglementBreaking},
    {"eb", FamilyKind::EntanglementBreaking},
    {"depolarizing", FamilyKind::Depolarizing},
};
const std::map<std::string, SweepMode> kModes = {
    {"curve", SweepMode::Curve}, {"grid", SweepMode::Grid},
    {"boundary", SweepMode::Boundary}, {"point", SweepMode::Point}};
const std::map<std::string, OutputFormat> kFormats = {{"csv", OutputFormat::CSV},
                                                      {"json", OutputFormat::JSON}};
const std::map<std::string, CapacityType> kCapacityTypes = {
    {"classical", CapacityType::Classical}, {"quantum", CapacityType::Quantum}};

// "lo:hi" or a single value "x" (meaning x:x).
ParamRange parse_range(const std::string& text, std::size_t steps) {
  ParamRange r;
  r.steps = steps;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
      r.lo = std::stod(lo, &used);
      if (used != lo.size()) throw std::invalid_argument(text);
      r.hi = std::stod(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse range '" + text + "' (expected x or lo:hi)");
  }
  return r;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(out, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted capacities of Pauli channels in a quantum switch"};
  app.require_subcommand(1);

  std::string family = "bitphase";
  std::string mode = "curve";
  std::string p_text = "0:1";
  std::string q_text = "0:1";
  std::size_t steps = 101;
  std::string format = "csv";
  std::string out = "-";
  unsigned threads = 1;
  double tol = 1e-6;
  std::string capacity = "classical";
  std::uint64_t seed = 1;
  std::size_t pairs = 100;
  std::uint64_t mc_samples = 0;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "Channel family")
        ->transform(CLI::IsMember(kFamilies))
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
    cmd->add_option("--out", out, "Output file, '-' for stdout")->capture_default_str();
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a family on a curve, grid, point or boundary");
  add_family(sweep);
  sweep->add_option("--mode", mode, "curve | grid | point | boundary")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  sweep->add_option("--p", p_text, "p value or lo:hi range")->capture_default_str();
  sweep->add_option("--q", q_text, "q value or lo:hi range (grid/point)")->capture_default_str();
  sweep->add_option("--steps", steps, "Points per axis, endpoints included")->capture_default_str();
  sweep->add_option("--threads", threads, "Grid workers")->capture_default_str();
  sweep->add_option("--tol", tol, "Bisection tolerance (boundary mode)")->capture_default_str();
  add_output(sweep);

  CLI::App* point = app.add_subcommand("point", "Full capacity record at one (p, q)");
  add_family(point);
  point->add_option("--p", p_text, "p")->required();
  point->add_option("--q", q_text, "q")->required();
  add_output(point);

  CLI::App* boundary = app.add_subcommand("boundary", "Where C_EQ crosses the bottleneck along p = q");
  add_family(boundary);
  boundary->add_option("--tol", tol, "Bisection tolerance")->capture_default_str();
  boundary->add_option("--capacity", capacity, "classical | quantum")
      ->check(CLI::IsMember(kCapacityTypes))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Exact oracle and Monte Carlo against the closed forms");
  verify->add_option("--pairs", pairs, "Random channel pairs")->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--mc-samples", mc_samples, "Monte Carlo samples for the depolarizing 0.75 check (0 = skip)")
      ->capture_default_str();

  CLI::App* reference = app.add_subcommand("reference", "Single depolarizing channel reference curves");
  reference->add_option("--steps", steps, "Points on [0,1]")->capture_default_str();
  reference->add_option("--out", out, "Output file, '-' for stdout")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep || *point) {
      SweepConfig cfg;
      cfg.family = kFamilies.at(family);
      cfg.mode = *point ? SweepMode::Point : kModes.at(mode);
      cfg.p_range = parse_range(p_text, steps);
      cfg.q_range = parse_range(q_text, steps);
      cfg.format = kFormats.at(format);
      cfg.threads = threads;
      cfg.boundary_tolerance = tol;
      if (cfg.mode == SweepMode::Point && (cfg.p_range.lo != cfg.p_range.hi || cfg.q_range.lo != cfg.q_range.hi)) {
        throw std::invalid_argument("point mode takes single values for --p and --q");
      }
      write_output(render(run_sweep(cfg), cfg.format), out);
      return 0;
    }

    if (*boundary) {
      const BoundaryResult b = find_violation_boundary(kFamilies.at(family), tol, kCapacityTypes.at(capacity));
      if (b.kind == BoundaryResult::Kind::ViolationEverywhere) {
        std::cout << "degenerate: violation everywhere on 0 < p < 1 (boundary at 0+)\n";
      } else {
        std::printf("boundary p=%.9f\n", b.p);
      }
      return 0;
    }

    if (*verify) {
      constexpr double kLimit = 1e-9;
      const OracleDeviation dev = verify_random_pairs(pairs, seed);
      std::printf("pairs                  %zu (seed %llu)\n", pairs, static_cast<unsigned long long>(seed));
      std::printf("classical cell         %.3e\n", dev.classical_cell);
      std::printf("classical capacity     %.3e\n", dev.classical_capacity);
      std::printf("switch cell            %.3e\n", dev.switch_cell);
      std::printf("switch p_plus          %.3e\n", dev.switch_p_plus);
      std::printf("switch capacity        %.3e\n", dev.switch_capacity);
      std::printf("kraus completeness     %.3e\n", dev.kraus_completeness);
      std::printf("max deviation          %.3e\n", dev.max());
      bool ok = dev.max() <= kLimit;
      if (mc_samples > 0) {
        // 4-sigma band on every (branch, cell) frequency for a fixed channel pair.
        const PauliChannel d = PauliChannel::depolarizing(0.75);
        const SwitchOracleResult exact = oracle_switch(d, d);
        const MonteCarloEstimate mc = monte_carlo_switch(d, d, mc_samples, seed);
        double worst_sigma = 0.0;
        for (int b = 0; b < 2; ++b)
          for (std::size_t k = 0; k < 4; ++k) {
            const double w = b == 0 ? exact.p_plus : 1.0 - exact.p_plus;
            const double truth = w * (b == 0 ? exact.transition_plus[k] : exact.transition_minus[k]);
            const double se = mc.standard_error[b][k];
            const double diff = std::abs(mc.frequency[b][k] - truth);
            if (diff > 1e-12) worst_sigma = std::max(worst_sigma, se > 0 ? diff / se : 1e300);
          }
        std::printf("monte carlo (depolarizing 0.75, n=%llu) worst %.2f sigma\n",
                    static_cast<unsigned long long>(mc_samples), worst_sigma);
        ok = ok && worst_sigma <= 4.0;
      }
      if (!ok) {
        std::cerr << "qswitch: verification failed\n";
        return 1;
      }
      return 0;
    }

    if (*reference) {
      write_output(render_reference_curves(steps), out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "qswitch: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
