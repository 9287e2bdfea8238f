#include "skeinwb/word.hpp"

#include <algorithm>
#include <cctype>

#include "skeinwb/errors.hpp"

namespace skeinwb {

GroupWord::GroupWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

GroupWord GroupWord::parse(const std::string& text) {
  std::vector<Letter> letters;
  if (text == "1") return {};
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c >= 'a' && c <= 'z') {
      letters.push_back({c - 'a' + 1, 1});
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back({c - 'A' + 1, -1});
    } else {
      throw ParseError(std::string("invalid word letter '") + c + "'", k);
    }
  }
  return GroupWord(std::move(letters));
}

int GroupWord::max_generator() const {
  int g = 0;
  for (const Letter& l : letters_) g = std::max(g, l.gen);
  return g;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  GroupWord w;
  w.letters_ = std::move(inv);
  return w;
}

GroupWord GroupWord::subword(std::size_t begin, std::size_t end) const {
  return GroupWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

GroupWord GroupWord::rotated(std::size_t k) const {
  if (letters_.empty()) return {};
  k %= letters_.size();
  std::vector<Letter> r(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  r.insert(r.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return GroupWord(std::move(r));
}

GroupWord GroupWord::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  GroupWord w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::vector<std::size_t> GroupWord::occurrences(int gen) const {
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < letters_.size(); ++k)
    if (letters_[k].gen == gen) pos.push_back(k);
  return pos;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  std::vector<Letter> all = u.letters_;
  all.insert(all.end(), v.letters_.begin(), v.letters_.end());
  return GroupWord(std::move(all));
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) {
    char base = l.exp > 0 ? 'a' : 'A';
    s += static_cast<char>(base + l.gen - 1);
  }
  return s;
}

ConjClass::ConjClass(const GroupWord& w) {
  GroupWord r = w.cyclically_reduced();
  GroupWord best = r;
  for (const GroupWord& base : {r, r.inverse()}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      GroupWord rot = base.rotated(k);
      if (rot < best) best = std::move(rot);
    }
  }
  canonical_ = std::move(best);
}

GroupWord random_word(std::mt19937_64& rng, int genus, std::size_t length) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> gen(1, genus);
  std::uniform_int_distribution<int> sign(0, 1);
  while (letters.size() < length) {
    Letter l{gen(rng), sign(rng) ? 1 : -1};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return GroupWord(std::move(letters));
}

}  // namespace skeinwb
