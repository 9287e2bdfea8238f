#include "skeinwb/state_sum.hpp"

#include <stdexcept>

#include "skeinwb/errors.hpp"

namespace skeinwb {

namespace {

// Partner port inside a crossing for each state bit. Bit 1 means the smoothing
// with coefficient t. Written out per over-pair rather than derived.
int partner(Over over, bool t_state, int port) {
  static const int t02[4] = {3, 2, 1, 0};    // (0,3) (1,2)
  static const int tinv02[4] = {1, 0, 3, 2};  // (0,1) (2,3)
  if (over == Over::P02) return t_state ? t02[port] : tinv02[port];
  return t_state ? tinv02[port] : t02[port];
}

}  // namespace

LaurentSkein state_sum_enumerate(const Diagram& d) {
  d.validate();
  const std::size_t n = d.crossings.size();
  if (n > 20) throw std::invalid_argument("state_sum_enumerate: too many crossings");

  // End-of-edge lookup: for each port, the edge and whether the port is its `to` end.
  std::vector<std::size_t> edge_of(n * 4);
  std::vector<bool> is_to(n * 4);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const Edge& edge = d.edges[e];
    edge_of[static_cast<std::size_t>(edge.from.crossing * 4 + edge.from.port)] = e;
    is_to[static_cast<std::size_t>(edge.from.crossing * 4 + edge.from.port)] = false;
    edge_of[static_cast<std::size_t>(edge.to.crossing * 4 + edge.to.port)] = e;
    is_to[static_cast<std::size_t>(edge.to.crossing * 4 + edge.to.port)] = true;
  }

  LaurentSkein total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    int t_count = 0;
    for (std::size_t c = 0; c < n; ++c) t_count += static_cast<int>((state >> c) & 1U);
    LaurentPoly coeff = LaurentPoly::t(t_count - static_cast<int>(n - static_cast<std::size_t>(t_count)));
    LoopMultiset loops;
    auto take_loop = [&](const std::vector<Letter>& letters) {
      ConjClass cls{GroupWord(letters)};
      if (cls.trivial()) {
        coeff *= loop_value();
      } else {
        loops.push_back(cls);
      }
    };
    for (const GroupWord& w : d.free_loops) take_loop(w.letters());

    std::vector<bool> used(d.edges.size(), false);
    for (std::size_t start = 0; start < d.edges.size(); ++start) {
      if (used[start]) continue;
      std::vector<Letter> letters;
      std::size_t e = start;
      bool forward = true;
      while (!used[e]) {
        used[e] = true;
        const Edge& edge = d.edges[e];
        const auto& lab = edge.label.letters();
        Port exit;
        if (forward) {
          letters.insert(letters.end(), lab.begin(), lab.end());
          exit = edge.to;
        } else {
          for (auto it = lab.rbegin(); it != lab.rend(); ++it) letters.push_back(it->inverse());
          exit = edge.from;
        }
        bool t_state = (state >> exit.crossing) & 1U;
        int next_port = partner(d.crossings[static_cast<std::size_t>(exit.crossing)].over, t_state, exit.port);
        std::size_t slot = static_cast<std::size_t>(exit.crossing * 4 + next_port);
        e = edge_of[slot];
        forward = !is_to[slot];
      }
      take_loop(letters);
    }
    total.add_term(std::move(loops), coeff);
  }
  return total;
}

}  // namespace skeinwb
