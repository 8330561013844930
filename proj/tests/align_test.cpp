#include "core/align.hpp"

#include <random>
#include <string>

#include "core/error.hpp"
#include "core/sequence.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace spectralign;

namespace {

const Sequence kSeq1 = Sequence::parse("GAATTCAGTTA");
const Sequence kSeq2 = Sequence::parse("GGATCGA");

// Recomputes one interior cell from its predecessors, independent of the
// fill loop's bookkeeping.
std::int64_t expected_cell(const ScoreMatrix& m, const Scoring& sc,
                           std::size_t i, std::size_t j) {
  const std::int64_t diag =
      m.score_at(i - 1, j - 1) + sc.pair(m.col_seq()[j - 1], m.row_seq()[i - 1]);
  const std::int64_t up = m.score_at(i - 1, j) + sc.gap;
  const std::int64_t left = m.score_at(i, j - 1) + sc.gap;
  return std::max({diag, up, left});
}

void check_matrix_invariants(const ScoreMatrix& m, const Scoring& sc) {
  CHECK(m.score_at(0, 0) == 0);
  CHECK(m.directions_at(0, 0) == 0);
  for (std::size_t j = 1; j < m.cols(); ++j) {
    CHECK(m.score_at(0, j) == sc.gap * static_cast<std::int64_t>(j));
    CHECK(m.directions_at(0, j) == ScoreMatrix::kLeft);
  }
  for (std::size_t i = 1; i < m.rows(); ++i) {
    CHECK(m.score_at(i, 0) == sc.gap * static_cast<std::int64_t>(i));
    CHECK(m.directions_at(i, 0) == ScoreMatrix::kUp);
  }
  for (std::size_t i = 1; i < m.rows(); ++i) {
    for (std::size_t j = 1; j < m.cols(); ++j) {
      CHECK(m.score_at(i, j) == expected_cell(m, sc, i, j));
      const std::uint8_t dirs = m.directions_at(i, j);
      CHECK(dirs != 0);
      // Every recorded direction must reproduce the cell's score.
      if (dirs & ScoreMatrix::kDiag)
        CHECK(m.score_at(i, j) ==
              m.score_at(i - 1, j - 1) +
                  sc.pair(m.col_seq()[j - 1], m.row_seq()[i - 1]));
      if (dirs & ScoreMatrix::kUp)
        CHECK(m.score_at(i, j) == m.score_at(i - 1, j) + sc.gap);
      if (dirs & ScoreMatrix::kLeft)
        CHECK(m.score_at(i, j) == m.score_at(i, j - 1) + sc.gap);
    }
  }
}

void check_alignment_structure(const Alignment& al, const Sequence& seq1,
                               const Sequence& seq2) {
  CHECK(al.columns.size() <= seq1.size() + seq2.size());
  std::vector<Nucleotide> top, bottom;
  for (const auto& col : al.columns) {
    CHECK((col.top || col.bottom));
    if (col.top) top.push_back(*col.top);
    if (col.bottom) bottom.push_back(*col.bottom);
  }
  CHECK(Sequence::from_symbols(top) == seq1);
  CHECK(Sequence::from_symbols(bottom) == seq2);
}

}  // namespace

TEST_CASE("border initialization") {
  const Scoring sc;

  SUBCASE("empty against empty is a single zero cell") {
    const ScoreMatrix m = build_matrix(Sequence(), Sequence(), sc);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(m.final_score() == 0);
    CHECK(m.directions_at(0, 0) == 0);
  }

  SUBCASE("top row walks the gap penalty") {
    const ScoreMatrix m = build_matrix(Sequence::parse("GATTACA"), Sequence(), sc);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 8);
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(m.score_at(0, j) == -4 * static_cast<std::int64_t>(j));
  }

  SUBCASE("left column walks the gap penalty") {
    const ScoreMatrix m = build_matrix(Sequence(), Sequence::parse("GGA"), sc);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 1);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(m.score_at(i, 0) == -4 * static_cast<std::int64_t>(i));
  }
}

TEST_CASE("worked example table") {
  const Scoring sc;
  const ScoreMatrix m = build_matrix(kSeq1, kSeq2, sc);

  CHECK(m.rows() == 8);   // n + 1
  CHECK(m.cols() == 12);  // m + 1
  CHECK(m.score_at(1, 1) == 5);
  CHECK(m.final_score() == 11);

  check_matrix_invariants(m, sc);
}

TEST_CASE("traceback of the worked example") {
  const Scoring sc;
  const Alignment al = align(kSeq1, kSeq2, sc);

  CHECK(al.score == 11);
  CHECK(alignment_score(al, sc) == 11);
  check_alignment_structure(al, kSeq1, kSeq2);
}

TEST_CASE("printed worked-example alignment is optimal and on a stored path") {
  const Scoring sc;
  const ScoreMatrix m = build_matrix(kSeq1, kSeq2, sc);
  const Alignment printed = alignment_from_rows("GAATTCAGTTA", "GGA-TC-G--A");

  CHECK(alignment_score(printed, sc) == 11);
  CHECK(matrix_contains_path(m, printed));
}

TEST_CASE("identity alignment is all diagonal") {
  const Scoring sc;
  const Sequence s = Sequence::parse("GATC");
  const Alignment al = align(s, s, sc);

  CHECK(al.score == 4 * sc.match);
  CHECK(al.columns.size() == 4);
  for (const auto& col : al.columns) {
    REQUIRE(col.top);
    REQUIRE(col.bottom);
    CHECK(*col.top == *col.bottom);
  }
  CHECK(align(Sequence::parse("ACGT"), Sequence::parse("ACGT"), sc).score == 20);
}

TEST_CASE("alignments against the empty sequence are pure gap runs") {
  const Scoring sc;
  const Sequence s = Sequence::parse("GATTA");

  const Alignment top_only = align(s, Sequence(), sc);
  CHECK(top_only.score == -4 * 5);
  CHECK(top_only.columns.size() == 5);
  for (const auto& col : top_only.columns) {
    CHECK(col.top);
    CHECK(!col.bottom);
  }

  const Alignment bottom_only = align(Sequence(), s, sc);
  CHECK(bottom_only.score == -4 * 5);
  for (const auto& col : bottom_only.columns) {
    CHECK(!col.top);
    CHECK(col.bottom);
  }

  CHECK(align(Sequence(), Sequence(), sc).columns.empty());
  CHECK(align(Sequence(), Sequence(), sc).score == 0);
}

TEST_CASE("tie-breaking is fixed: diagonal, then up, then left") {
  SUBCASE("diagonal beats left") {
    // AA vs A ties between matching the first or the second A.
    const Alignment al =
        align(Sequence::parse("AA"), Sequence::parse("A"), Scoring{});
    CHECK(al.top_string() == "AA");
    CHECK(al.bottom_string() == "-A");
  }

  SUBCASE("up beats left") {
    // Zero gap cost and a prohibitive mismatch leave up and left tied.
    const Scoring sc{0, -10, 0};
    const Alignment al = align(Sequence::parse("A"), Sequence::parse("T"), sc);
    CHECK(al.top_string() == "A-");
    CHECK(al.bottom_string() == "-T");
  }

  SUBCASE("repeated runs are identical") {
    const Alignment a = align(kSeq1, kSeq2, Scoring{});
    const Alignment b = align(kSeq1, kSeq2, Scoring{});
    CHECK(a.top_string() == b.top_string());
    CHECK(a.bottom_string() == b.bottom_string());
    CHECK(a.score == b.score);
  }
}

TEST_CASE("exhaustive oracle basics") {
  const Scoring sc;
  CHECK(brute_force_align(Sequence(), Sequence(), sc) == 0);
  // A against T: either the single mismatch or two gap columns.
  CHECK(brute_force_align(Sequence::parse("A"), Sequence::parse("T"), sc) == -3);
  CHECK(brute_force_align(Sequence::parse("GATT"), Sequence::parse("GAT"), sc) ==
        build_matrix(Sequence::parse("GATT"), Sequence::parse("GAT"), sc)
            .final_score());

  CHECK_THROWS_AS(brute_force_align(Sequence::parse("AAAAAAAAA"),
                                    Sequence::parse("A"), sc),
                  Error);
}

TEST_CASE("oracle equivalence over random pairs") {
  std::mt19937 rng(20240711);

  SUBCASE("default scoring") {
    const Scoring sc;
    for (int trial = 0; trial < 200; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 6);
      const Sequence s2 = testutil::random_sequence(rng, 0, 6);
      CAPTURE(s1.str());
      CAPTURE(s2.str());
      REQUIRE(build_matrix(s1, s2, sc).final_score() ==
              brute_force_align(s1, s2, sc));
    }
  }

  SUBCASE("randomized scoring") {
    for (int trial = 0; trial < 300; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 6);
      const Sequence s2 = testutil::random_sequence(rng, 0, 6);
      const Scoring sc = testutil::random_scoring(rng);
      CAPTURE(s1.str());
      CAPTURE(s2.str());
      CAPTURE(sc.match);
      CAPTURE(sc.mismatch);
      CAPTURE(sc.gap);
      REQUIRE(build_matrix(s1, s2, sc).final_score() ==
              brute_force_align(s1, s2, sc));
    }
  }
}

TEST_CASE("alignment properties over random pairs") {
  std::mt19937 rng(991);

  SUBCASE("rescoring matches the table score") {
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 30);
      const Sequence s2 = testutil::random_sequence(rng, 0, 30);
      const Scoring sc = testutil::random_scoring(rng);
      const ScoreMatrix m = build_matrix(s1, s2, sc);
      const Alignment al = traceback(m);
      REQUIRE(alignment_score(al, sc) == m.final_score());
      REQUIRE(al.score == m.final_score());
      REQUIRE(matrix_contains_path(m, al));
    }
  }

  SUBCASE("structure invariants") {
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 20);
      const Sequence s2 = testutil::random_sequence(rng, 0, 20);
      const Alignment al = align(s1, s2, Scoring{});
      check_alignment_structure(al, s1, s2);
    }
  }

  SUBCASE("score is symmetric in the two sequences") {
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 15);
      const Sequence s2 = testutil::random_sequence(rng, 0, 15);
      const Scoring sc = testutil::random_scoring(rng);
      REQUIRE(build_matrix(s1, s2, sc).final_score() ==
              build_matrix(s2, s1, sc).final_score());
    }
  }

  SUBCASE("self alignment scores length times match") {
    for (int trial = 0; trial < 50; ++trial) {
      const Sequence s = testutil::random_sequence(rng, 0, 20);
      REQUIRE(align(s, s, Scoring{}).score ==
              static_cast<std::int64_t>(s.size()) * 5);
    }
  }

  SUBCASE("alignment against empty scores length times gap") {
    for (int trial = 0; trial < 50; ++trial) {
      const Sequence s = testutil::random_sequence(rng, 0, 20);
      REQUIRE(align(s, Sequence(), Scoring{}).score ==
              static_cast<std::int64_t>(s.size()) * -4);
    }
  }

  SUBCASE("raising the match bonus never lowers the optimum") {
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s1 = testutil::random_sequence(rng, 0, 10);
      const Sequence s2 = testutil::random_sequence(rng, 0, 10);
      Scoring sc = testutil::random_scoring(rng);
      const std::int64_t base = build_matrix(s1, s2, sc).final_score();
      sc.match += 1;
      REQUIRE(build_matrix(s1, s2, sc).final_score() >= base);
    }
  }
}

TEST_CASE("malformed alignments are rejected") {
  const Scoring sc;

  SUBCASE("gap-gap column") {
    Alignment al;
    al.columns.push_back({Nucleotide::A, Nucleotide::A});
    al.columns.push_back({std::nullopt, std::nullopt});
    CHECK_THROWS_WITH_AS(alignment_score(al, sc),
                         "gap-gap column at index 1", Error);
  }

  SUBCASE("row length mismatch") {
    CHECK_THROWS_AS(alignment_from_rows("GAT", "GA"), Error);
  }

  SUBCASE("invalid symbol") {
    CHECK_THROWS_AS(alignment_from_rows("GXT", "GAT"), Error);
  }

  SUBCASE("zero columns rescore to zero") {
    CHECK(alignment_score(Alignment{}, sc) == 0);
  }

  SUBCASE("one match plus one gap") {
    const Alignment al = alignment_from_rows("AT", "A-");
    CHECK(alignment_score(al, sc) == 1);
  }
}

TEST_CASE("paths not on the optimum are rejected") {
  const Scoring sc;
  const Sequence s = Sequence::parse("GATC");
  const ScoreMatrix m = build_matrix(s, s, sc);

  // A valid but clearly suboptimal alignment: everything gapped.
  CHECK_FALSE(matrix_contains_path(m, alignment_from_rows("GATC----",
                                                          "----GATC")));
  // An alignment of different sequences.
  CHECK_FALSE(matrix_contains_path(m, alignment_from_rows("GGGG", "GGGG")));
  // The true optimum is accepted.
  CHECK(matrix_contains_path(m, alignment_from_rows("GATC", "GATC")));
}

TEST_CASE("sequence length guard") {
  CHECK_THROWS_AS(Sequence::parse(std::string(4097, 'A')), Error);

  const Sequence big = Sequence::parse(std::string(4096, 'A'));
  CHECK(big.size() == 4096);
  CHECK(build_matrix(big, Sequence(), Scoring{}).final_score() == -4 * 4096);
}
