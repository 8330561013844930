#include "core/align.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "core/error.hpp"

namespace spectralign {

std::string Alignment::top_string() const {
  std::string out;
  out.reserve(columns.size());
  for (const auto& col : columns)
    out.push_back(col.top ? to_char(*col.top) : '-');
  return out;
}

std::string Alignment::bottom_string() const {
  std::string out;
  out.reserve(columns.size());
  for (const auto& col : columns)
    out.push_back(col.bottom ? to_char(*col.bottom) : '-');
  return out;
}

ScoreMatrix build_matrix(const Sequence& seq1, const Sequence& seq2,
                         const Scoring& scoring) {
  // Sequence construction already enforces kMaxLength; recheck so the
  // contract holds even for callers that bypass parse.
  if (seq1.size() > Sequence::kMaxLength || seq2.size() > Sequence::kMaxLength)
    throw Error(ErrorKind::TooLong, "sequence exceeds alignment size limit");

  const std::size_t m = seq1.size();
  const std::size_t n = seq2.size();
  ScoreMatrix mat(seq1, seq2);
  const std::size_t cols = m + 1;

  auto score = [&](std::size_t i, std::size_t j) -> std::int64_t& {
    return mat.scores_[i * cols + j];
  };
  auto dirs = [&](std::size_t i, std::size_t j) -> std::uint8_t& {
    return mat.dirs_[i * cols + j];
  };

  // Border: a run of leading gaps in either sequence.
  for (std::size_t j = 1; j <= m; ++j) {
    score(0, j) = scoring.gap * static_cast<std::int64_t>(j);
    dirs(0, j) = ScoreMatrix::kLeft;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    score(i, 0) = scoring.gap * static_cast<std::int64_t>(i);
    dirs(i, 0) = ScoreMatrix::kUp;
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int64_t diag =
          score(i - 1, j - 1) + scoring.pair(seq1[j - 1], seq2[i - 1]);
      const std::int64_t up = score(i - 1, j) + scoring.gap;
      const std::int64_t left = score(i, j - 1) + scoring.gap;
      const std::int64_t best = std::max({diag, up, left});

      std::uint8_t d = 0;
      if (diag == best) d |= ScoreMatrix::kDiag;
      if (up == best) d |= ScoreMatrix::kUp;
      if (left == best) d |= ScoreMatrix::kLeft;

      score(i, j) = best;
      dirs(i, j) = d;
    }
  }
  return mat;
}

Alignment traceback(const ScoreMatrix& matrix) {
  std::vector<AlignmentColumn> cols;
  cols.reserve(matrix.rows() + matrix.cols());

  std::size_t i = matrix.rows() - 1;
  std::size_t j = matrix.cols() - 1;
  while (i != 0 || j != 0) {
    const std::uint8_t d = matrix.directions_at(i, j);
    if (d & ScoreMatrix::kDiag) {
      cols.push_back({matrix.col_seq()[j - 1], matrix.row_seq()[i - 1]});
      --i;
      --j;
    } else if (d & ScoreMatrix::kUp) {
      cols.push_back({std::nullopt, matrix.row_seq()[i - 1]});
      --i;
    } else {
      cols.push_back({matrix.col_seq()[j - 1], std::nullopt});
      --j;
    }
  }
  std::reverse(cols.begin(), cols.end());
  return Alignment{std::move(cols), matrix.final_score()};
}

Alignment align(const Sequence& seq1, const Sequence& seq2,
                const Scoring& scoring) {
  return traceback(build_matrix(seq1, seq2, scoring));
}

std::int64_t alignment_score(const Alignment& alignment,
                             const Scoring& scoring) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < alignment.columns.size(); ++k) {
    const auto& col = alignment.columns[k];
    if (col.top && col.bottom) {
      total += scoring.pair(*col.top, *col.bottom);
    } else if (col.top || col.bottom) {
      total += scoring.gap;
    } else {
      std::ostringstream msg;
      msg << "gap-gap column at index " << k;
      throw Error(ErrorKind::Malformed, msg.str());
    }
  }
  return total;
}

Alignment alignment_from_rows(std::string_view top, std::string_view bottom) {
  if (top.size() != bottom.size())
    throw Error(ErrorKind::Malformed, "alignment rows differ in length");
  std::vector<AlignmentColumn> cols;
  cols.reserve(top.size());
  for (std::size_t k = 0; k < top.size(); ++k) {
    AlignmentColumn col;
    if (top[k] != '-') {
      const auto n = nucleotide_from_char(top[k]);
      if (!n) {
        std::ostringstream msg;
        msg << "invalid symbol '" << top[k] << "' at top row index " << k;
        throw Error(ErrorKind::Malformed, msg.str());
      }
      col.top = *n;
    }
    if (bottom[k] != '-') {
      const auto n = nucleotide_from_char(bottom[k]);
      if (!n) {
        std::ostringstream msg;
        msg << "invalid symbol '" << bottom[k] << "' at bottom row index " << k;
        throw Error(ErrorKind::Malformed, msg.str());
      }
      col.bottom = *n;
    }
    cols.push_back(col);
  }
  return Alignment{std::move(cols), 0};
}

bool matrix_contains_path(const ScoreMatrix& matrix,
                          const Alignment& alignment) {
  std::size_t i = matrix.rows() - 1;
  std::size_t j = matrix.cols() - 1;
  // Walk the columns in reverse, mirroring a traceback.
  for (auto it = alignment.columns.rbegin(); it != alignment.columns.rend();
       ++it) {
    const auto& col = *it;
    if (col.top && col.bottom) {
      if (i == 0 || j == 0) return false;
      if (*col.top != matrix.col_seq()[j - 1]) return false;
      if (*col.bottom != matrix.row_seq()[i - 1]) return false;
      if (!(matrix.directions_at(i, j) & ScoreMatrix::kDiag)) return false;
      --i;
      --j;
    } else if (col.top) {
      if (j == 0) return false;
      if (*col.top != matrix.col_seq()[j - 1]) return false;
      if (!(matrix.directions_at(i, j) & ScoreMatrix::kLeft)) return false;
      --j;
    } else if (col.bottom) {
      if (i == 0) return false;
      if (*col.bottom != matrix.row_seq()[i - 1]) return false;
      if (!(matrix.directions_at(i, j) & ScoreMatrix::kUp)) return false;
      --i;
    } else {
      return false;  // gap-gap column is never on a path
    }
  }
  return i == 0 && j == 0;
}

namespace {

constexpr std::size_t kOracleLimit = 8;

// Depth-first enumeration of every alignment shape; acc carries the score
// of the partial alignment. No per-cell maximization and no memoization,
// so this stays an independent check on the table-based path.
void enumerate(const Sequence& seq1, const Sequence& seq2,
               const Scoring& scoring, std::size_t i, std::size_t j,
               std::int64_t acc, std::int64_t& best) {
  if (i == seq1.size() && j == seq2.size()) {
    best = std::max(best, acc);
    return;
  }
  if (i < seq1.size() && j < seq2.size())
    enumerate(seq1, seq2, scoring, i + 1, j + 1,
              acc + scoring.pair(seq1[i], seq2[j]), best);
  if (i < seq1.size())
    enumerate(seq1, seq2, scoring, i + 1, j, acc + scoring.gap, best);
  if (j < seq2.size())
    enumerate(seq1, seq2, scoring, i, j + 1, acc + scoring.gap, best);
}

}  // namespace

std::int64_t brute_force_align(const Sequence& seq1, const Sequence& seq2,
                               const Scoring& scoring) {
  if (seq1.size() > kOracleLimit || seq2.size() > kOracleLimit) {
    std::ostringstream msg;
    msg << "exhaustive enumeration limited to sequences of length <= "
        << kOracleLimit;
    throw Error(ErrorKind::TooLong, msg.str());
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  enumerate(seq1, seq2, scoring, 0, 0, 0, best);
  return best;
}

}  // namespace spectralign
