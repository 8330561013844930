#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/sequence.hpp"

namespace spectralign {

/// Match / mismatch / linear gap parameters. Defaults are the scheme the
/// rest of the library assumes when no overrides are given.
struct Scoring {
  std::int64_t match = 5;
  std::int64_t mismatch = -3;
  std::int64_t gap = -4;

  std::int64_t pair(Nucleotide a, Nucleotide b) const {
    return a == b ? match : mismatch;
  }
};

/// Filled global-alignment score table. Rows are indexed by seq2 (the
/// demand side, length n), columns by seq1 (the spectrum side, length m),
/// giving an (n+1) x (m+1) grid. Each cell also records every predecessor
/// direction that achieves its maximum, so any optimal alignment can be
/// validated against the stored pointers.
class ScoreMatrix {
 public:
  static constexpr std::uint8_t kDiag = 1;  // consume one symbol of each
  static constexpr std::uint8_t kUp = 2;    // consume a seq2 symbol, gap on top
  static constexpr std::uint8_t kLeft = 4;  // consume a seq1 symbol, gap below

  std::size_t rows() const { return rows_; }  // n + 1
  std::size_t cols() const { return cols_; }  // m + 1

  std::int64_t score_at(std::size_t i, std::size_t j) const {
    return scores_[i * cols_ + j];
  }
  std::uint8_t directions_at(std::size_t i, std::size_t j) const {
    return dirs_[i * cols_ + j];
  }

  /// Optimal global alignment score, i.e. the bottom-right cell.
  std::int64_t final_score() const { return scores_.back(); }

  const Sequence& row_seq() const { return row_seq_; }  // seq2
  const Sequence& col_seq() const { return col_seq_; }  // seq1

 private:
  friend ScoreMatrix build_matrix(const Sequence&, const Sequence&,
                                  const Scoring&);

  ScoreMatrix(Sequence col_seq, Sequence row_seq)
      : rows_(row_seq.size() + 1),
        cols_(col_seq.size() + 1),
        scores_(rows_ * cols_, 0),
        dirs_(rows_ * cols_, 0),
        row_seq_(std::move(row_seq)),
        col_seq_(std::move(col_seq)) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> scores_;
  std::vector<std::uint8_t> dirs_;
  Sequence row_seq_;
  Sequence col_seq_;
};

/// One aligned column. Exactly one side may be a gap (nullopt); top is the
/// seq1 symbol, bottom the seq2 symbol.
struct AlignmentColumn {
  std::optional<Nucleotide> top;
  std::optional<Nucleotide> bottom;
};

/// A concrete global alignment plus the score claimed for it.
struct Alignment {
  std::vector<AlignmentColumn> columns;
  std::int64_t score = 0;

  /// Top row with '-' for gaps, e.g. "GAATTCAGTTA".
  std::string top_string() const;
  /// Bottom row with '-' for gaps, e.g. "GGA-TC-G--A".
  std::string bottom_string() const;
};

/// Fills the (n+1) x (m+1) table: border cells at w*i / w*j, interior cells
/// as the maximum over diagonal, up and left predecessors. All directions
/// achieving the maximum are recorded.
ScoreMatrix build_matrix(const Sequence& seq1, const Sequence& seq2,
                         const Scoring& scoring);

/// Walks the stored pointers from the bottom-right cell back to the origin
/// and returns one optimal alignment. Ties resolve Diagonal, then Up, then
/// Left, so the result is identical across runs and platforms.
Alignment traceback(const ScoreMatrix& matrix);

/// build_matrix followed by traceback.
Alignment align(const Sequence& seq1, const Sequence& seq2,
                const Scoring& scoring);

/// Independent column-wise rescoring of an alignment: match/mismatch where
/// both symbols are present, gap where one is. Throws ErrorKind::Malformed
/// on a gap-gap column. Ignores the alignment's own score field.
std::int64_t alignment_score(const Alignment& alignment,
                             const Scoring& scoring);

/// Rebuilds an Alignment from two gapped rows of equal length ('-' gaps,
/// case-insensitive symbols). Throws ErrorKind::Malformed on bad input.
Alignment alignment_from_rows(std::string_view top, std::string_view bottom);

/// True when the alignment spells the matrix's sequences and every step is
/// backed by a stored pointer, i.e. it is one of the optimal alignments.
bool matrix_contains_path(const ScoreMatrix& matrix, const Alignment& alignment);

/// Testing oracle: enumerates every global alignment of the two sequences
/// (consume a symbol pair, a seq1 symbol against a gap, or a seq2 symbol
/// against a gap) and returns the best complete-alignment score seen.
/// Exponential, so both lengths are capped at 8. Shares no code with the
/// dynamic-programming path above.
std::int64_t brute_force_align(const Sequence& seq1, const Sequence& seq2,
                               const Scoring& scoring);

}  // namespace spectralign
