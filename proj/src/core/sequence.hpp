#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectralign {

/// Channel-state alphabet. A marks an idle channel; C, G and T mark
/// increasingly loaded occupancy bands.
enum class Nucleotide : std::uint8_t { A = 0, C, G, T };

char to_char(Nucleotide n);

/// Case-insensitive symbol lookup; nullopt for anything outside ACGT.
std::optional<Nucleotide> nucleotide_from_char(char c);

/// Immutable ordered vector of channel states. The primary-user spectrum
/// and the secondary-user demand are both Sequences.
class Sequence {
 public:
  /// Generous upper bound on channel counts; longer inputs are rejected.
  static constexpr std::size_t kMaxLength = 4096;

  Sequence() = default;

  /// Parses a bare symbol string such as "GAATTCAGTTA" (case-insensitive).
  /// Throws ErrorKind::BadSequence with the offending index, or
  /// ErrorKind::TooLong past kMaxLength.
  static Sequence parse(std::string_view text);

  /// Wraps an already-validated symbol vector; still enforces kMaxLength.
  static Sequence from_symbols(std::vector<Nucleotide> symbols);

  /// Uppercase canonical rendering, one character per symbol.
  std::string str() const;

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Nucleotide operator[](std::size_t i) const { return symbols_[i]; }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool operator==(const Sequence&) const = default;

 private:
  explicit Sequence(std::vector<Nucleotide> symbols)
      : symbols_(std::move(symbols)) {}

  std::vector<Nucleotide> symbols_;
};

}  // namespace spectralign
