#pragma once

// Kauffman-bracket resolution of labelled diagrams into loop multisets.
//
// Smoothing convention, with the overpass rotated to run 0 -> 2:
//   coefficient t    joins (0,3) and (1,2)
//   coefficient t^-1 joins (0,1) and (2,3)
// Each loop with trivial holonomy becomes the factor -(t^2 + t^-2).

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skeinwb/diagram.hpp"
#include "skeinwb/dual.hpp"
#include "skeinwb/laurent.hpp"
#include "skeinwb/sl2.hpp"
#include "skeinwb/word.hpp"

namespace skeinwb {

/// Sorted multiset of nontrivial loop classes.
using LoopMultiset = std::vector<ConjClass>;

template <class C>
class SkeinElement {
 public:
  using Terms = std::map<LoopMultiset, C>;

  SkeinElement() = default;
  static SkeinElement unit(C c) {
    SkeinElement s;
    s.add_term({}, std::move(c));
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const LoopMultiset& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(LoopMultiset key, const C& c) {
    if (c == C{}) return;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == C{}) terms_.erase(it);
    }
  }

  SkeinElement& operator+=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SkeinElement& operator-=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const C& s, const SkeinElement& a) {
    SkeinElement r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
  }
  friend bool operator==(const SkeinElement& a, const SkeinElement& b) { return a.terms_ == b.terms_; }

  template <class Fn>
  auto map_coefficients(Fn&& fn) const {
    SkeinElement<decltype(fn(std::declval<const C&>()))> r;
    for (const auto& [k, c] : terms_) r.add_term(k, fn(c));
    return r;
  }

 private:
  Terms terms_;
};

using LaurentSkein = SkeinElement<LaurentPoly>;
using DualSkein = SkeinElement<DualScalar>;
using ExactDualSkein = SkeinElement<ExactDual>;
using ComplexSkein = SkeinElement<GaussianRational>;

enum class Smoothing {
  T,     ///< coefficient t
  TInv,  ///< coefficient t^-1
};

/// The two port pairs joined by the given smoothing.
std::array<std::pair<int, int>, 2> smoothing_pairs(Over over, Smoothing s);

/// Replaces crossing c by a smoothing. Edges meeting at the crossing are
/// concatenated (direction-aware), closed components move to free_loops, and
/// higher crossings are renumbered down by one.
Diagram smooth_crossing(const Diagram& d, std::size_t c, Smoothing s);

/// Full state sum over Z[t^+-1]. Throws MalformedDiagram.
LaurentSkein resolve(const Diagram& d);

/// Image under t -> -1 + e.
DualSkein to_dual(const LaurentSkein& s);
ExactDualSkein to_exact_dual(const LaurentSkein& s);
inline DualSkein resolve_dual(const Diagram& d) { return to_dual(resolve(d)); }

/// Product of -tr rho(loop) over the multiset.
cd loop_product(const LoopMultiset& loops, const Representation& rho);
DualScalar evaluate(const DualSkein& s, const Representation& rho);
inline DualScalar evaluate(const LaurentSkein& s, const Representation& rho) { return evaluate(to_dual(s), rho); }

/// Copy of d with every crossing's over-pair set to the strand of `curve`.
/// Each crossing must have exactly one strand of each curve.
Diagram with_curve_over(const Diagram& d, char curve);

struct GoldmanResult {
  ComplexSkein zeroth;  ///< value part of the stacking commutator (always zero)
  ComplexSkein first;   ///< e-part: the bracket
};

/// resolve(a over b) - resolve(b over a), reduced through t -> -1 + e.
GoldmanResult goldman_bracket(const Diagram& d);

// ---- handle slides ------------------------------------------------------

enum class SlideVariant {
  /// Band sum next to the chosen crossing; every occurrence keeps a crossing.
  Band,
  /// The chosen crossing itself is replaced by its oriented smoothing.
  Smoothed,
};

struct HandleSlide {
  Diagram sum;    ///< gamma # gamma_i
  Diagram plain;  ///< gamma alone, crossingless
  /// Letters of w rotated to start at the band point (not reduced).
  std::vector<Letter> based_letters;
  /// Positions of the occurrences of the generator in based_letters, and their exponents.
  std::vector<std::size_t> based_positions;
  std::vector<int> exponents;
  /// Index (into the occurrence list of w) of the band occurrence.
  std::size_t band_occurrence = 0;

  GroupWord based_word() const { return GroupWord(based_letters); }
};

/// Band sum of the loop w with the meridian curve of generator `gen` at the
/// occurrence with index k (0-based, in order along w). The meridian passes
/// over every strand it meets; `order` lists occurrence indices from left to
/// right along it (identity when empty). Throws OccurrenceNotFound.
HandleSlide build_handle_slide(const GroupWord& w, int gen, std::size_t k, const std::vector<std::size_t>& order = {},
                               SlideVariant variant = SlideVariant::Band);

// ---- text ---------------------------------------------------------------

/// "coeff * [loop1|loop2] + ...", "[ ]" for the empty multiset.
std::string to_string(const LaurentSkein& s);
std::string to_string(const DualSkein& s);
std::string to_string(const ExactDualSkein& s);
std::string to_string(const ComplexSkein& s);
std::string to_string(const LoopMultiset& loops);

}  // namespace skeinwb
