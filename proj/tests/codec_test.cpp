#include "core/codec.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "core/allocator.hpp"
#include "core/error.hpp"
#include "core/sequence.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace spectralign;

TEST_CASE("power bands") {
  CHECK(encode_power(0.0) == Nucleotide::A);
  CHECK(encode_power(0.5) == Nucleotide::A);
  CHECK(encode_power(1.0) == Nucleotide::A);
  CHECK(encode_power(1.0000001) == Nucleotide::C);
  CHECK(encode_power(1.5) == Nucleotide::C);
  CHECK(encode_power(2.0) == Nucleotide::C);
  CHECK(encode_power(2.5) == Nucleotide::G);
  CHECK(encode_power(3.0) == Nucleotide::G);
  CHECK(encode_power(3.5) == Nucleotide::T);
  CHECK(encode_power(4.0) == Nucleotide::T);
}

TEST_CASE("out-of-range powers are rejected, not clamped") {
  CHECK_THROWS_WITH_AS(encode_power(-0.1), "power -0.1 out of range [0, 4]",
                       Error);
  CHECK_THROWS_AS(encode_power(4.1), Error);
  CHECK_THROWS_AS(encode_power(-1000.0), Error);
  CHECK_THROWS_AS(encode_power(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(encode_power(-std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(encode_power(std::nan("")), Error);

  try {
    encode_power(5.0);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PowerRange);
  }
}

TEST_CASE("snapshot encoding") {
  SUBCASE("mixed bands") {
    const Sequence s =
        encode_snapshot({0.2, 1.7, 2.9, 3.6});
    CHECK(s.str() == "ACGT");
  }

  SUBCASE("an eleven-channel busy snapshot") {
    const Sequence s = encode_snapshot(
        {2.5, 0.4, 0.9, 3.3, 3.8, 1.6, 0.0, 2.1, 3.9, 3.1, 1.0});
    CHECK(s.str() == "GAATTCAGTTA");
  }

  SUBCASE("all idle") {
    const Sequence s = encode_snapshot({1.0, 0.0, 0.3});
    CHECK(s.str() == "AAA");
    CHECK(idle_channels(s) == std::vector<int>{1, 2, 3});
  }

  SUBCASE("empty input") {
    CHECK_THROWS_WITH_AS(encode_snapshot({}), "empty power list", Error);
  }

  SUBCASE("errors carry the channel index") {
    CHECK_THROWS_WITH_AS(encode_snapshot({0.5, 1.5, 9.0}),
                         "channel 3: power 9 out of range [0, 4]", Error);
  }
}

TEST_CASE("encoding properties") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> power(0.0, 4.0);

  SUBCASE("a channel is idle exactly when its power is at most one") {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> powers;
      const std::size_t n = 1 + rng() % 16;
      for (std::size_t i = 0; i < n; ++i) powers.push_back(power(rng));
      const Sequence s = encode_snapshot(powers);
      REQUIRE(s.size() == n);
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE((s[i] == Nucleotide::A) == (powers[i] <= 1.0));
    }
  }

  SUBCASE("band midpoints decode to the four symbols") {
    const Sequence s = encode_snapshot({0.5, 1.5, 2.5, 3.5});
    CHECK(s == Sequence::from_symbols({Nucleotide::A, Nucleotide::C,
                                       Nucleotide::G, Nucleotide::T}));
  }
}

TEST_CASE("power CSV parsing") {
  SUBCASE("plain list") {
    CHECK(parse_power_csv("0.5,1.5,2.5,3.5") ==
          std::vector<double>{0.5, 1.5, 2.5, 3.5});
  }

  SUBCASE("whitespace around items") {
    CHECK(parse_power_csv(" 1 , 2 ,3.25 ") ==
          std::vector<double>{1.0, 2.0, 3.25});
  }

  SUBCASE("single value") {
    CHECK(parse_power_csv("4") == std::vector<double>{4.0});
  }

  SUBCASE("garbage is rejected with its position") {
    CHECK_THROWS_WITH_AS(parse_power_csv("1,two,3"),
                         "invalid power value 'two' at position 2", Error);
    CHECK_THROWS_AS(parse_power_csv("1,,3"), Error);
    CHECK_THROWS_AS(parse_power_csv(""), Error);
    CHECK_THROWS_AS(parse_power_csv("1.5x"), Error);
  }

  SUBCASE("parse then encode round-trips through the bands") {
    const Sequence s = encode_snapshot(parse_power_csv("0.9,2.9,1.2,4"));
    CHECK(s.str() == "AGCT");
  }
}
