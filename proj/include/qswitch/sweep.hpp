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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qswitch/capacity.hpp"

namespace qswitch {

enum class SweepMode { Curve, Grid, Boundary, Point };
enum class OutputFormat { CSV, JSON };
enum class CapacityType { Classical, Quantum };

/// Closed interval sampled at `steps` evenly spaced points, endpoints included.
struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 101;

  double at(std::size_t k) const {
    if (steps <= 1) return lo;
    if (k + 1 == steps) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
};

struct SweepConfig {
  FamilyKind family = FamilyKind::BitPhaseFlip;
  SweepMode mode = SweepMode::Curve;
  ParamRange p_range;
  ParamRange q_range;  // ignored in Curve mode (q = p)
  OutputFormat format = OutputFormat::CSV;
  std::filesystem::path output_path;
  unsigned threads = 1;                 // grid workers; output order does not depend on it
  double boundary_tolerance = 1e-6;     // Boundary mode only
};

struct SweepRecord {
  double p = 0.0;
  double q = 0.0;
  CapacityReport report;
  // Only defined for the bit-flip/phase-flip family on the p = q diagonal.
  std::optional<double> q_lb;
  std::optional<double> q_ub;
};

inline void validate(const SweepConfig& cfg) {
  if (cfg.family == FamilyKind::GeneralPauli) {
    throw std::invalid_argument("sweeps need a parametric family");
  }
  auto check = [](const ParamRange& r, const char* name, bool need_steps) {
    if (!(r.lo >= 0.0 && r.hi <= 1.0 && r.lo <= r.hi)) {
      throw std::invalid_argument(std::string(name) + " range must be a subinterval of [0,1]");
    }
    if (need_steps && r.steps < 2) {
      throw std::invalid_argument(std::string(name) + " range needs at least 2 steps");
    }
  };
  switch (cfg.mode) {
    case SweepMode::Curve: check(cfg.p_range, "p", true); break;
    case SweepMode::Grid:
      check(cfg.p_range, "p", true);
      check(cfg.q_range, "q", true);
      break;
    case SweepMode::Point:
      check(cfg.p_range, "p", false);
      check(cfg.q_range, "q", false);
      break;
    case SweepMode::Boundary:
      if (!(cfg.boundary_tolerance > 0.0)) {
        throw std::invalid_argument("boundary tolerance must be positive");
      }
      break;
  }
}

inline SweepRecord evaluate_point(FamilyKind family, double p, double q) {
  const auto [d, e] = ChannelFamily::parametric(family, p, q).channels();
  SweepRecord rec;
  rec.p = p;
  rec.q = q;
  rec.report = gain_and_violation(d, e);
  if (family == FamilyKind::BitPhaseFlip && p == q) {
    const BitPhaseQuantumBounds b = quantum_bounds_bitphase(p);
    rec.q_lb = b.q_lb;
    rec.q_ub = b.q_ub;
  }
  return rec;
}

struct BoundaryResult {
  enum class Kind {
    Crossing,             // sign change of C_EQ - C_EB at `p`
    ViolationEverywhere,  // C_EQ > C_EB on all of (0,1); `p` is 0
  };
  Kind kind = Kind::Crossing;
  double p = 0.0;
};

namespace detail {

inline constexpr double kDeadband = 1e-12;

inline int deadband_sign(double v) { return v > kDeadband ? 1 : (v < -kDeadband ? -1 : 0); }

inline double switch_minus_bottleneck(FamilyKind family, double p, CapacityType type) {
  const CapacityReport r = evaluate_point(family, p, p).report;
  return type == CapacityType::Classical ? r.c_eq - r.c_eb : r.q_eq - r.q_eb;
}

}  // namespace detail

/// Locates where the switch capacity crosses the bottleneck along p = q.
/// A 1001-point scan of [0,1] brackets the first sign change (values within
/// 1e-12 of zero count as zero), then bisection narrows it to `tolerance`.
/// Throws std::domain_error when the curve never changes sign.
inline BoundaryResult find_violation_boundary(FamilyKind family, double tolerance,
                                              CapacityType type = CapacityType::Classical) {
  if (family == FamilyKind::GeneralPauli) {
    throw std::invalid_argument("boundary search needs a parametric family");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  constexpr std::size_t kScan = 1000;
  auto f = [&](double p) { return detail::switch_minus_bottleneck(family, p, type); };

  bool all_positive = true;
  std::optional<std::pair<double, int>> last_signed;
  std::optional<std::pair<double, double>> bracket;
  for (std::size_t k = 0; k <= kScan; ++k) {
    const double p = static_cast<double>(k) / kScan;
    const int s = detail::deadband_sign(f(p));
    if (k > 0 && k < kScan && s <= 0) all_positive = false;
    if (s == 0) continue;
    if (!bracket && last_signed && last_signed->second != s) bracket.emplace(last_signed->first, p);
    last_signed.emplace(p, s);
  }
  if (!bracket) {
    if (all_positive) return {BoundaryResult::Kind::ViolationEverywhere, 0.0};
    throw std::domain_error("no sign change of C_EQ - C_EB on the p = q curve");
  }

  auto [lo, hi] = *bracket;
  const int s_lo = detail::deadband_sign(f(lo));
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const int s = detail::deadband_sign(f(mid));
    if (s == 0) return {BoundaryResult::Kind::Crossing, mid};
    (s == s_lo ? lo : hi) = mid;
  }
  return {BoundaryResult::Kind::Crossing, 0.5 * (lo + hi)};
}

/// Records in row-major order (p outer, q inner). Grid points are evaluated by
/// `cfg.threads` workers writing into their own slots.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  switch (cfg.mode) {
    case SweepMode::Point:
      return {evaluate_point(cfg.family, cfg.p_range.lo, cfg.q_range.lo)};
    case SweepMode::Boundary: {
      const BoundaryResult b = find_violation_boundary(cfg.family, cfg.boundary_tolerance);
      if (b.kind != BoundaryResult::Kind::Crossing) {
        throw std::domain_error("no finite violation boundary: violation on the whole open interval");
      }
      return {evaluate_point(cfg.family, b.p, b.p)};
    }
    case SweepMode::Curve:
    case SweepMode::Grid: break;
  }

  const bool grid = cfg.mode == SweepMode::Grid;
  const std::size_t np = cfg.p_range.steps;
  const std::size_t nq = grid ? cfg.q_range.steps : 1;
  std::vector<SweepRecord> out(np * nq);
  auto fill = [&](std::size_t idx) {
    const std::size_t i = idx / nq, j = idx % nq;
    const double p = cfg.p_range.at(i);
    const double q = grid ? cfg.q_range.at(j) : p;
    out[idx] = evaluate_point(cfg.family, p, q);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(out.size())));
  if (workers == 1) {
    for (std::size_t idx = 0; idx < out.size(); ++idx) fill(idx);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t idx = w; idx < out.size(); idx += workers) fill(idx);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// 12 significant digits, shortest of fixed/scientific ("%.12g"); -0 prints as 0.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline constexpr std::string_view kCsvHeader = "p,q,c_ec,c_eq,c_eb,g,v,q_ec,q_eq,q_eb,q_lb,q_ub";

/// CSV or JSON text for `records`; every record is re-validated first.
inline std::string render(const std::vector<SweepRecord>& records, OutputFormat format) {
  if (records.empty()) throw std::invalid_argument("render: no records");
  static constexpr std::array<std::string_view, 12> fields = {
      "p", "q", "c_ec", "c_eq", "c_eb", "g", "v", "q_ec", "q_eq", "q_eb", "q_lb", "q_ub"};

  std::string s;
  if (format == OutputFormat::CSV) {
    s += kCsvHeader;
    s += '\n';
  } else {
    s += "[\n";
  }
  for (std::size_t n = 0; n < records.size(); ++n) {
    const SweepRecord& r = records[n];
    validate(r.report);
    const CapacityReport& c = r.report;
    const std::array<std::optional<double>, 12> values = {
        r.p, r.q, c.c_ec, c.c_eq, c.c_eb, c.gain, c.violation, c.q_ec, c.q_eq, c.q_eb, r.q_lb, r.q_ub};
    if (format == OutputFormat::CSV) {
      for (std::size_t f = 0; f < values.size(); ++f) {
        if (f) s += ',';
        if (values[f]) s += format_number(*values[f]);
      }
      s += '\n';
    } else {
      s += "  {";
      for (std::size_t f = 0; f < values.size(); ++f) {
        if (f) s += ", ";
        s += '"';
        s += fields[f];
        s += "\": ";
        s += values[f] ? format_number(*values[f]) : std::string("null");
      }
      s += n + 1 < records.size() ? "},\n" : "}\n";
    }
  }
  if (format == OutputFormat::JSON) s += "]\n";
  return s;
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline void emit(const std::vector<SweepRecord>& records, OutputFormat format,
                 const std::filesystem::path& path) {
  write_file(path, render(records, format));
}

/// Single depolarizing channel reference capacities on `steps` points of [0,1].
inline std::string render_reference_curves(std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("reference curves need at least 2 steps");
  const ParamRange range{0.0, 1.0, steps};
  std::string s = "p,c_symbol,c_bit,c_unassisted\n";
  for (std::size_t k = 0; k < steps; ++k) {
    const double p = range.at(k);
    const ReferenceCurves r = depolarizing_reference_curves(p);
    s += format_number(p) + ',' + format_number(r.c_symbol) + ',' + format_number(r.c_bit) + ',' +
         format_number(r.c_unassisted) + '\n';
  }
  return s;
}

}  // namespace qswitch
