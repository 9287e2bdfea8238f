#include "skeinwb/skein.hpp"

#include <numeric>
#include <unordered_map>

#include "skeinwb/errors.hpp"

namespace skeinwb {

std::array<std::pair<int, int>, 2> smoothing_pairs(Over over, Smoothing s) {
  // The 13-over crossing is the 02-over crossing rotated by one port, which
  // swaps the two smoothings.
  bool first = (over == Over::P02) == (s == Smoothing::T);
  if (first) return {{{0, 3}, {1, 2}}};
  return {{{0, 1}, {2, 3}}};
}

namespace {

std::size_t edge_at(const std::vector<Edge>& edges, const Port& p) {
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].from == p || edges[e].to == p) return e;
  throw MalformedDiagram("dangling port [" + std::to_string(p.crossing) + "," + std::to_string(p.port) + "]");
}

void join_ports(Diagram& d, const Port& p, const Port& q) {
  std::size_t e1 = edge_at(d.edges, p);
  std::size_t e2 = edge_at(d.edges, q);
  const Edge& a = d.edges[e1];
  if (e1 == e2) {
    d.free_loops.push_back(a.label);
    d.edges.erase(d.edges.begin() + static_cast<std::ptrdiff_t>(e1));
    return;
  }
  const Edge& b = d.edges[e2];
  // Walk a towards p, jump to q, then walk b away from q.
  Edge merged;
  GroupWord first = a.to == p ? a.label : a.label.inverse();
  merged.from = a.to == p ? a.from : a.to;
  GroupWord second = b.from == q ? b.label : b.label.inverse();
  merged.to = b.from == q ? b.to : b.from;
  merged.label = first * second;
  if (a.curve == b.curve) merged.curve = a.curve;
  std::size_t hi = std::max(e1, e2);
  std::size_t lo = std::min(e1, e2);
  d.edges.erase(d.edges.begin() + static_cast<std::ptrdiff_t>(hi));
  d.edges.erase(d.edges.begin() + static_cast<std::ptrdiff_t>(lo));
  d.edges.push_back(std::move(merged));
}

}  // namespace

Diagram smooth_crossing(const Diagram& d, std::size_t c, Smoothing s) {
  if (c >= d.crossings.size()) throw IndexOutOfRange("crossing " + std::to_string(c) + " does not exist");
  Diagram r = d;
  int ci = static_cast<int>(c);
  for (const auto& [p, q] : smoothing_pairs(d.crossings[c].over, s)) join_ports(r, {ci, p}, {ci, q});
  r.crossings.erase(r.crossings.begin() + static_cast<std::ptrdiff_t>(c));
  for (Edge& e : r.edges) {
    if (e.from.crossing > ci) --e.from.crossing;
    if (e.to.crossing > ci) --e.to.crossing;
  }
  return r;
}

namespace {

LaurentSkein times_loops(const LaurentSkein& s, const std::vector<GroupWord>& loops) {
  LaurentPoly factor(1);
  LoopMultiset extra;
  for (const GroupWord& w : loops) {
    ConjClass cls(w);
    if (cls.trivial()) {
      factor *= loop_value();
    } else {
      extra.push_back(cls);
    }
  }
  LaurentSkein r;
  for (const auto& [key, c] : s.terms()) {
    LoopMultiset k = key;
    k.insert(k.end(), extra.begin(), extra.end());
    r.add_term(std::move(k), c * factor);
  }
  return r;
}

class Resolver {
 public:
  LaurentSkein run(Diagram d) {
    std::vector<GroupWord> loops = std::move(d.free_loops);
    d.free_loops.clear();
    return times_loops(rec(d), loops);
  }

 private:
  LaurentSkein rec(const Diagram& d) {
    if (d.crossings.empty()) {
      if (!d.edges.empty()) throw MalformedDiagram("edge with no crossing endpoints");
      return LaurentSkein::unit(LaurentPoly(1));
    }
    std::string key = to_json_string(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t c = d.crossings.size() - 1;
    LaurentSkein total;
    for (auto [s, coeff] : {std::pair{Smoothing::T, LaurentPoly::t(1)}, std::pair{Smoothing::TInv, LaurentPoly::t(-1)}}) {
      Diagram sub = smooth_crossing(d, c, s);
      std::vector<GroupWord> loops = std::move(sub.free_loops);
      sub.free_loops.clear();
      total += coeff * times_loops(rec(sub), loops);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::unordered_map<std::string, LaurentSkein> memo_;
};

}  // namespace

LaurentSkein resolve(const Diagram& d) {
  d.validate();
  return Resolver().run(d);
}

DualSkein to_dual(const LaurentSkein& s) {
  return s.map_coefficients([](const LaurentPoly& p) { return eval_dual(p); });
}

ExactDualSkein to_exact_dual(const LaurentSkein& s) {
  return s.map_coefficients([](const LaurentPoly& p) { return eval_dual_exact(p); });
}

cd loop_product(const LoopMultiset& loops, const Representation& rho) {
  cd acc = 1.0;
  for (const ConjClass& cls : loops) acc *= -eval_word(cls.word(), rho).trace();
  return acc;
}

DualScalar evaluate(const DualSkein& s, const Representation& rho) {
  DualScalar acc;
  for (const auto& [loops, c] : s.terms()) acc += c * DualScalar(loop_product(loops, rho));
  return acc;
}

// ---- Goldman bracket ----------------------------------------------------

Diagram with_curve_over(const Diagram& d, char curve) {
  d.validate();
  std::vector<std::array<std::optional<char>, 4>> marks(d.crossings.size());
  for (const Edge& e : d.edges) {
    marks[static_cast<std::size_t>(e.from.crossing)][static_cast<std::size_t>(e.from.port)] = e.curve;
    marks[static_cast<std::size_t>(e.to.crossing)][static_cast<std::size_t>(e.to.port)] = e.curve;
  }
  Diagram r = d;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& m = marks[c];
    if (!m[0] || !m[1] || m[0] != m[2] || m[1] != m[3] || m[0] == m[1])
      throw MalformedDiagram("crossing " + std::to_string(c) + " is not an intersection of the two marked curves");
    r.crossings[c].over = (*m[0] == curve) ? Over::P02 : Over::P13;
  }
  return r;
}

GoldmanResult goldman_bracket(const Diagram& d) {
  ExactDualSkein diff = to_exact_dual(resolve(with_curve_over(d, 'a')) - resolve(with_curve_over(d, 'b')));
  GoldmanResult r;
  r.zeroth = diff.map_coefficients([](const ExactDual& x) { return x.value; });
  r.first = diff.map_coefficients([](const ExactDual& x) { return x.deriv; });
  return r;
}

// ---- handle slides ------------------------------------------------------

namespace {

struct Visit {
  int crossing;
  int in;
  int out;
};

/// A closed path recorded as crossing visits interleaved with letters.
class PathBuilder {
 public:
  void letter(const Letter& l) { pending_.push_back(l); }
  void visit(int crossing, int in, int out) {
    if (visits_.empty()) {
      head_ = std::move(pending_);
    } else {
      gaps_.push_back(std::move(pending_));
    }
    pending_.clear();
    visits_.push_back({crossing, in, out});
  }

  /// Edges of the closed path, or a free loop when it meets no crossing.
  void finish(Diagram& d) {
    if (visits_.empty()) {
      d.free_loops.push_back(GroupWord(pending_));
      return;
    }
    std::vector<Letter> wrap = std::move(pending_);
    wrap.insert(wrap.end(), head_.begin(), head_.end());
    gaps_.push_back(std::move(wrap));
    for (std::size_t v = 0; v < visits_.size(); ++v) {
      const Visit& a = visits_[v];
      const Visit& b = visits_[(v + 1) % visits_.size()];
      d.edges.push_back({{a.crossing, a.out}, {b.crossing, b.in}, GroupWord(gaps_[v]), std::nullopt});
    }
  }

 private:
  std::vector<Visit> visits_;
  std::vector<std::vector<Letter>> gaps_;
  std::vector<Letter> head_;
  std::vector<Letter> pending_;
};

}  // namespace

HandleSlide build_handle_slide(const GroupWord& w, int gen, std::size_t k, const std::vector<std::size_t>& order,
                               SlideVariant variant) {
  std::vector<std::size_t> occ = w.occurrences(gen);
  if (occ.empty()) throw OccurrenceNotFound("word " + to_string(w) + " has no occurrence of t" + std::to_string(gen));
  if (k >= occ.size())
    throw OccurrenceNotFound("occurrence " + std::to_string(k + 1) + " of t" + std::to_string(gen) + " not in " +
                             to_string(w) + " (" + std::to_string(occ.size()) + " occurrences)");
  const std::size_t m = occ.size();

  std::vector<std::size_t> left_to_right = order;
  if (left_to_right.empty()) {
    left_to_right.resize(m);
    std::iota(left_to_right.begin(), left_to_right.end(), std::size_t{0});
  }
  std::vector<std::size_t> position(m, m);
  if (left_to_right.size() != m) throw std::invalid_argument("order must list every occurrence once");
  for (std::size_t p = 0; p < m; ++p) {
    if (left_to_right[p] >= m || position[left_to_right[p]] != m)
      throw std::invalid_argument("order must be a permutation of the occurrences");
    position[left_to_right[p]] = p;
  }

  const auto& letters = w.letters();
  const int eps_k = letters[occ[k]].exp;
  const bool smoothed = variant == SlideVariant::Smoothed;
  auto crossing_of = [&](std::size_t j) {
    return static_cast<int>(smoothed && j > k ? j - 1 : j);
  };
  std::vector<std::size_t> occ_index(letters.size(), m);
  for (std::size_t j = 0; j < m; ++j) occ_index[occ[j]] = j;

  HandleSlide out;
  out.band_occurrence = k;
  out.sum.genus = out.plain.genus = std::max(w.max_generator(), gen);
  out.sum.crossings.assign(smoothed ? m - 1 : m, Crossing{Over::P02});
  out.plain.free_loops.push_back(w);

  PathBuilder path;
  // The strand of w, starting at the band point. It runs up (S -> N) through a
  // crossing placed before a positive letter and down (N -> S) through one
  // placed after a negative letter.
  std::size_t start = eps_k > 0 ? occ[k] : occ[k] + 1;
  for (std::size_t step = 0; step < letters.size(); ++step) {
    std::size_t q = (start + step) % letters.size();
    const Letter& l = letters[q];
    std::size_t j = occ_index[q];
    bool crossing_here = j < m && !(smoothed && j == k);
    if (j < m) {
      out.based_positions.push_back(out.based_letters.size());
      out.exponents.push_back(l.exp);
    }
    if (crossing_here && l.exp > 0) path.visit(crossing_of(j), 3, 1);
    path.letter(l);
    out.based_letters.push_back(l);
    if (crossing_here && l.exp < 0) path.visit(crossing_of(j), 1, 3);
  }
  // The meridian, traversed leftward (E -> W) starting at the band point,
  // which lies just left of the band crossing for a positive occurrence and
  // just right of it for a negative one.
  std::size_t first = eps_k > 0 ? (position[k] + m - 1) % m : position[k];
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t j = left_to_right[(first + m - step) % m];
    if (smoothed && j == k) continue;
    path.visit(crossing_of(j), 0, 2);
  }
  path.finish(out.sum);
  out.sum.validate();
  return out;
}

// ---- text ---------------------------------------------------------------

std::string to_string(const LoopMultiset& loops) {
  if (loops.empty()) return "[ ]";
  std::string s = "[";
  for (std::size_t k = 0; k < loops.size(); ++k) {
    if (k) s += "|";
    s += to_string(loops[k]);
  }
  return s + "]";
}

namespace {

template <class C, class Fmt>
std::string skein_string(const SkeinElement<C>& s, Fmt&& fmt) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [loops, c] : s.terms()) {
    std::string cs = fmt(c);
    std::string term = cs + " * " + to_string(loops);
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentSkein& s) {
  return skein_string(s, [](const LaurentPoly& p) {
    std::string body = to_string(p);
    return p.size() > 1 ? "(" + body + ")" : body;
  });
}

std::string to_string(const DualSkein& s) {
  return skein_string(s, [](const DualScalar& x) { return to_string(x); });
}

std::string to_string(const ExactDualSkein& s) {
  return skein_string(s, [](const ExactDual& x) {
    std::string body = to_string(x);
    return x.value.is_zero() || x.deriv.is_zero() ? body : "(" + body + ")";
  });
}

std::string to_string(const ComplexSkein& s) {
  return skein_string(s, [](const GaussianRational& z) { return to_string(z); });
}

}  // namespace skeinwb
