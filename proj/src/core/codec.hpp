#pragma once

#include <string_view>
#include <vector>

#include "core/sequence.hpp"

namespace spectralign {

/// Maps a normalized per-channel average power on the 0-4 scale onto the
/// alphabet: [0,1] -> A, (1,2] -> C, (2,3] -> G, (3,4] -> T. Values outside
/// the scale (including NaN) are rejected, never clamped.
Nucleotide encode_power(double power);

/// Elementwise encode_power over one power per channel, preserving channel
/// order. Errors name the offending 1-based channel. At least one channel
/// is required.
Sequence encode_snapshot(const std::vector<double>& powers);

/// Parses the comma-separated power-list form, e.g. "0.5,2.3,1.0".
/// Whitespace around values is ignored; range checking happens later, at
/// encode time.
std::vector<double> parse_power_csv(std::string_view text);

}  // namespace spectralign
