#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace skeinwb {

/// Generator t_gen raised to exp = +-1. Generators are 1-based.
struct Letter {
  int gen = 1;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  /// Order a < A < b < B < ...
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen <=> b.gen;
    return b.exp <=> a.exp;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on t_1, t_2, ...
class GroupWord {
 public:
  GroupWord() = default;
  /// Freely reduces the letters.
  explicit GroupWord(std::vector<Letter> letters);

  /// "abAB": lowercase a,b,c,... are t_1,t_2,t_3,...; uppercase are inverses.
  /// "1" or "" is the empty word.
  static GroupWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  int max_generator() const;

  GroupWord inverse() const;
  /// Letters [begin, end) as a (reduced) word.
  GroupWord subword(std::size_t begin, std::size_t end) const;
  /// Cyclic rotation starting at position k.
  GroupWord rotated(std::size_t k) const;
  /// Removes cancelling letters at the two ends.
  GroupWord cyclically_reduced() const;
  /// Positions of letters with generator `gen` (either exponent).
  std::vector<std::size_t> occurrences(int gen) const;

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord& a, const GroupWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

std::string to_string(const GroupWord& w);

/// Conjugacy class up to inversion: canonical word is the least rotation of
/// the cyclic reduction of w or of w^-1.
class ConjClass {
 public:
  ConjClass() = default;
  explicit ConjClass(const GroupWord& w);

  const GroupWord& word() const { return canonical_; }
  bool trivial() const { return canonical_.empty(); }

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
  friend auto operator<=>(const ConjClass& a, const ConjClass& b) { return a.canonical_ <=> b.canonical_; }

 private:
  GroupWord canonical_;
};

inline std::string to_string(const ConjClass& c) { return to_string(c.word()); }

/// Uniform freely reduced word of exactly `length` letters in `genus` generators.
GroupWord random_word(std::mt19937_64& rng, int genus, std::size_t length);

}  // namespace skeinwb
