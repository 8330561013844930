#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/allocator.hpp"
#include "core/sequence.hpp"

namespace spectralign {

/// One simulation step: either an occupancy sequence given directly, or
/// per-channel powers to be encoded when the scenario runs.
using StepInput = std::variant<Sequence, std::vector<double>>;

/// A replayable trace: one demand sequence aligned against a list of
/// spectrum steps under one scoring scheme.
struct Scenario {
  std::string name = "scenario";
  Sequence su_demand;
  Scoring scoring;
  std::vector<StepInput> steps;
};

/// Per-step simulation output.
struct StepRecord {
  std::size_t step = 0;       // 0-based step index
  Sequence pu_sequence;       // post-encoding spectrum
  std::size_t idle_count = 0;
  std::size_t allocated_count = 0;
  std::size_t waiting_count = 0;
  int moved = 0;
  int evicted = 0;
  int admitted = 0;
  std::int64_t alignment_score = 0;
  std::vector<std::optional<int>> assignments;  // one per SU
};

/// Parses the line-based scenario format:
///
///   # comment
///   name: rush_hour          (optional label)
///   su: AAAA                 (required, exactly once)
///   match: 5                 (optional scoring overrides)
///   mismatch: -3
///   gap: -4
///   pu: GAATTCAGTTA          (one step per pu / pu_power line, in order)
///   pu_power: 0.5,2.3,1.0
///
/// Blank lines are ignored and '#' starts a comment anywhere on a line.
/// Errors carry the offending line number. Power values are only checked
/// for form here; the 0-4 range is enforced when the scenario runs.
Scenario parse_scenario(std::string_view text);

/// Allocates every step against the demand sequence and classifies churn
/// against the previous step. All users start out waiting, so the first
/// step admits whatever it allocates. Errors from encoding or allocation
/// are tagged with the failing step index.
std::vector<StepRecord> run(const Scenario& scenario);

/// Fixed nine-column CSV, one data row per step, newline-terminated.
std::string emit_csv(const std::vector<StepRecord>& records);

/// Human-readable report: per step, the spectrum with idle channels
/// marked, the per-user assignment table and a churn summary.
std::string emit_text(const std::vector<StepRecord>& records);

}  // namespace spectralign
