#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/align.hpp"
#include "core/sequence.hpp"

namespace spectralign {

/// Per-user channel assignments derived from one alignment. Channel
/// numbers are 1-based positions in the spectrum sequence; a disengaged
/// entry means the user is waiting.
struct AllocationResult {
  std::vector<std::optional<int>> assignments;  // one entry per SU, in order
  std::int64_t score = 0;                       // alignment score used
  std::vector<int> idle;                        // sorted idle channel numbers

  std::size_t allocated_count() const {
    std::size_t count = 0;
    for (const auto& a : assignments)
      if (a) ++count;
    return count;
  }
};

enum class Transition { Stable, Moved, Evicted, Admitted, StillWaiting };

/// Step-to-step churn between two allocations over the same users.
struct ReallocationDiff {
  int stable = 0;
  int moved = 0;
  int evicted = 0;
  int admitted = 0;
  std::vector<Transition> transitions;  // one per SU
};

/// 1-based positions of every idle (A) channel in the spectrum sequence.
std::vector<int> idle_channels(const Sequence& pu_seq);

/// Aligns the spectrum sequence against the demand sequence and assigns
/// channels: a column hands its channel to the demand-side user exactly
/// when the spectrum symbol is A and the demand symbol is not a gap.
/// Matching a busy symbol never grants the channel, so assignments can
/// only land on idle spectrum. Both sequences must be non-empty.
AllocationResult allocate(const Sequence& pu_seq, const Sequence& su_seq,
                          const Scoring& scoring);

/// Classifies each user's movement between two allocations. Throws
/// ErrorKind::InvalidArgument when the user counts differ.
ReallocationDiff diff(const AllocationResult& prev,
                      const AllocationResult& next);

}  // namespace spectralign
