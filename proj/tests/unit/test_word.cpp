#include <random>

#include "doctest.h"
#include "skeinwb/errors.hpp"
#include "skeinwb/word.hpp"

using namespace skeinwb;

TEST_CASE("parsing and free reduction") {
  CHECK(GroupWord::parse("aA").empty());
  CHECK(GroupWord::parse("1").empty());
  CHECK(GroupWord::parse("").empty());
  CHECK(GroupWord::parse("abBA").empty());
  CHECK(to_string(GroupWord::parse("abBc")) == "ac");
  CHECK(to_string(GroupWord()) == "1");
  CHECK(GroupWord::parse("abc").max_generator() == 3);
  CHECK_THROWS_AS(GroupWord::parse("a1b"), ParseError);
}

TEST_CASE("inverse and products") {
  GroupWord w = GroupWord::parse("abAc");
  CHECK(to_string(w.inverse()) == "CaBA");
  CHECK((w * w.inverse()).empty());
  CHECK(to_string(GroupWord::parse("ab") * GroupWord::parse("Bc")) == "ac");
}

TEST_CASE("rotation, subwords and occurrences") {
  GroupWord w = GroupWord::parse("abAc");
  CHECK(to_string(w.rotated(1)) == "bAca");
  CHECK(to_string(w.subword(1, 3)) == "bA");
  CHECK(w.occurrences(1) == std::vector<std::size_t>{0, 2});
  CHECK(w.occurrences(2) == std::vector<std::size_t>{1});
  CHECK(w.occurrences(4).empty());
  CHECK(to_string(GroupWord::parse("abcA").cyclically_reduced()) == "bc");
}

TEST_CASE("conjugacy classes") {
  ConjClass c(GroupWord::parse("ab"));
  CHECK(c == ConjClass(GroupWord::parse("ba")));
  CHECK(c == ConjClass(GroupWord::parse("BA")));
  CHECK(c == ConjClass(GroupWord::parse("cabC")));
  CHECK(c != ConjClass(GroupWord::parse("aB")));
  CHECK(ConjClass(GroupWord::parse("aA")).trivial());
  CHECK(ConjClass(GroupWord::parse("bAB")).word() == GroupWord::parse("a"));
}

TEST_CASE("canonical form is the least rotation of the word or its inverse") {
  // Brute-force reference over all rotations of both orientations.
  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    GroupWord w = random_word(rng, 3, 1 + static_cast<std::size_t>(s % 9));
    GroupWord r = w.cyclically_reduced();
    GroupWord best = r;
    for (const GroupWord& v : {r, r.inverse()})
      for (std::size_t k = 0; k < v.size(); ++k) best = std::min(best, v.rotated(k));
    ConjClass c(w);
    CHECK(c.word() == best);
    CHECK(c.word() == c.word().cyclically_reduced());
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(ConjClass(w.rotated(k)) == c);
    CHECK(ConjClass(w.inverse()) == c);
  }
}

TEST_CASE("random words are reduced and of the requested length") {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 100; ++s) {
    std::size_t n = static_cast<std::size_t>(s % 10);
    GroupWord w = random_word(rng, 2, n);
    CHECK(w.size() == n);
    CHECK(GroupWord(w.letters()) == w);
    CHECK(w.max_generator() <= 2);
  }
}
