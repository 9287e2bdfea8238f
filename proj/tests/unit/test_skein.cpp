#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skeinwb/catalog.hpp"
#include "skeinwb/errors.hpp"
#include "skeinwb/skein.hpp"
#include "skeinwb/state_sum.hpp"

using namespace skeinwb;
using testing::rep;

namespace {

LaurentSkein scalar(const LaurentPoly& p) { return LaurentSkein::unit(p); }
const LaurentPoly delta = loop_value();

}  // namespace

TEST_CASE("unknot") {
  CHECK(resolve(builtin_diagram("unknot")) == scalar(delta));
  CHECK(to_string(resolve(builtin_diagram("unknot"))) == "(-t^2 - t^-2) * [ ]");
}

TEST_CASE("kink is -t^3 times the unknot") {
  LaurentSkein kink = resolve(builtin_diagram("kink"));
  CHECK(kink == LaurentPoly::monomial(-1, 3) * resolve(builtin_diagram("unknot")));
  CHECK(kink == scalar(LaurentPoly::t(5) + LaurentPoly::t(1)));
}

TEST_CASE("trefoil and other knots") {
  CHECK(resolve(builtin_diagram("trefoil")) ==
        scalar(LaurentPoly::t(7) + LaurentPoly::t(3) + LaurentPoly::t(-1) - LaurentPoly::t(-9)));
  CHECK(resolve(builtin_diagram("hopf")) == scalar(delta * (-LaurentPoly::t(4) - LaurentPoly::t(-4))));
  // Figure eight is amphichiral, so its bracket is symmetric under t -> t^-1.
  CHECK(resolve(builtin_diagram("figure8")) == scalar(-LaurentPoly::t(10) - LaurentPoly::t(-10)));
}

TEST_CASE("resolve agrees with the state-sum enumerator") {
  for (const auto& [name, d] : builtin_diagrams()) {
    CAPTURE(name);
    CHECK(resolve(d) == state_sum_enumerate(d));
  }
  std::mt19937_64 rng(41);
  for (int s = 0; s < 60; ++s) {
    Diagram d = random_diagram(rng, 1 + s % 8, s % 3);
    CAPTURE(to_json_string(d));
    CHECK(resolve(d) == state_sum_enumerate(d));
  }
}

TEST_CASE("Kauffman relation at every crossing") {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 20; ++s) {
    Diagram d = random_diagram(rng, 1 + s % 5, 2);
    for (std::size_t c = 0; c < d.num_crossings(); ++c)
      CHECK(resolve(d) == LaurentPoly::t(1) * resolve(smooth_crossing(d, c, Smoothing::T)) +
                              LaurentPoly::t(-1) * resolve(smooth_crossing(d, c, Smoothing::TInv)));
  }
}

TEST_CASE("smoothing pairs") {
  using P = std::array<std::pair<int, int>, 2>;
  CHECK(smoothing_pairs(Over::P02, Smoothing::T) == P{{{0, 3}, {1, 2}}});
  CHECK(smoothing_pairs(Over::P02, Smoothing::TInv) == P{{{0, 1}, {2, 3}}});
  CHECK(smoothing_pairs(Over::P13, Smoothing::T) == P{{{0, 1}, {2, 3}}});
  CHECK_THROWS_AS(smooth_crossing(builtin_diagram("kink"), 3, Smoothing::T), IndexOutOfRange);
}

TEST_CASE("labels travel with loops") {
  LaurentSkein s = resolve(builtin_diagram("labelled_kink"));
  LoopMultiset a = {ConjClass(GroupWord::parse("a"))};
  CHECK(s.size() == 1);
  CHECK(s.coeff(a) == LaurentPoly::monomial(-1, 3));
}

TEST_CASE("dual evaluation") {
  DualSkein u = to_dual(resolve(builtin_diagram("unknot")));
  CHECK(evaluate(u, rep({SL2()})) == DualScalar(-2.0, 0.0));
  DualSkein loop;
  loop.add_term({ConjClass(GroupWord::parse("a"))}, DualScalar(1.0));
  CHECK(evaluate(loop, rep({SL2()})) == DualScalar(-2.0, 0.0));
  CHECK(evaluate(loop, rep({SL2::diag(2.0)})) == DualScalar(-2.5, 0.0));
  CHECK(to_string(to_exact_dual(resolve(builtin_diagram("kink")))) == "(-2 + 6e) * [ ]");
}

TEST_CASE("Goldman bracket") {
  GoldmanResult torus = goldman_bracket(builtin_diagram("torus_pair"));
  CHECK(torus.zeroth.is_zero());
  ComplexSkein expected;
  expected.add_term({ConjClass(GroupWord::parse("ab"))}, GaussianRational(2));
  expected.add_term({ConjClass(GroupWord::parse("aB"))}, GaussianRational(-2));
  CHECK(torus.first == expected);
  CHECK(goldman_bracket(builtin_diagram("parallel_pair")).first.is_zero());
  CHECK(goldman_bracket(builtin_diagram("disjoint_pair")).first.is_zero());
  CHECK_THROWS_AS(goldman_bracket(builtin_diagram("kink")), MalformedDiagram);
}

TEST_CASE("Goldman bracket is antisymmetric") {
  std::mt19937_64 rng(47);
  for (int s = 0; s < 20; ++s) {
    Diagram d = random_two_curve_diagram(rng, 1 + s % 4, 2);
    Diagram swapped = d;
    for (Edge& e : swapped.edges) e.curve = *e.curve == 'a' ? 'b' : 'a';
    GoldmanResult g1 = goldman_bracket(d);
    GoldmanResult g2 = goldman_bracket(swapped);
    CHECK(g1.zeroth.is_zero());
    CHECK((g1.first + g2.first).is_zero());
  }
}

TEST_CASE("handle slide crossing census") {
  CHECK(build_handle_slide(GroupWord::parse("a"), 1, 0).sum.num_crossings() == 1);
  CHECK(build_handle_slide(GroupWord::parse("aa"), 1, 0).sum.num_crossings() == 2);
  CHECK(build_handle_slide(GroupWord::parse("abA"), 1, 0).sum.num_crossings() == 2);
  // The variant that smooths the band occurrence drops one crossing.
  auto smoothed = [](const char* w) {
    return build_handle_slide(GroupWord::parse(w), 1, 0, {}, SlideVariant::Smoothed);
  };
  CHECK(smoothed("a").sum.num_crossings() == 0);
  CHECK(smoothed("aa").sum.num_crossings() == 1);
  HandleSlide s = smoothed("abA");
  CHECK(s.sum.num_crossings() == 1);
  CHECK(s.exponents == std::vector<int>{1, -1});
  CHECK_THROWS_AS(build_handle_slide(GroupWord::parse("b"), 1, 0), OccurrenceNotFound);
  CHECK_THROWS_AS(build_handle_slide(GroupWord::parse("a"), 1, 1), OccurrenceNotFound);
  CHECK_THROWS_AS(build_handle_slide(GroupWord::parse("aa"), 1, 0, {0, 0}), std::invalid_argument);
}

TEST_CASE("handle slide diagrams resolve consistently") {
  std::mt19937_64 rng(53);
  for (int s = 0; s < 10; ++s) {
    GroupWord w;
    while (w.occurrences(1).empty()) w = random_word(rng, 2, 1 + static_cast<std::size_t>(s % 5));
    HandleSlide h = build_handle_slide(w, 1, 0);
    CHECK(resolve(h.sum) == state_sum_enumerate(h.sum));
    CHECK(resolve(h.plain) == state_sum_enumerate(h.plain));
  }
}

TEST_CASE("diagram JSON") {
  for (const auto& [name, d] : builtin_diagrams()) {
    CAPTURE(name);
    CHECK(resolve(parse_diagram(to_json_string(d))) == resolve(d));
  }
  CHECK_THROWS_AS(parse_diagram("{\"crossings\": ["), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": [{"over": "03"}], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": [{"over": "02"}], "edges": [{"from": [0,0], "to": [0,1]}]})"),
                  MalformedDiagram);
  CHECK_THROWS_AS(parse_diagram(R"({"genus": 1, "free_loops": ["b"]})"), MalformedDiagram);
  CHECK_THROWS_AS(load_diagram("/nonexistent/diagram.json"), ParseError);
}

#ifdef SKEINWB_DATA_DIR
TEST_CASE("bundled diagram files") {
  for (const auto& [name, d] : builtin_diagrams()) {
    CAPTURE(name);
    Diagram f = load_diagram(std::string(SKEINWB_DATA_DIR) + "/diagrams/" + name + ".json");
    CHECK(f.num_crossings() <= 8);
    CHECK(resolve(f) == state_sum_enumerate(f));
    CHECK(resolve(f) == resolve(d));
  }
  CHECK_THROWS_AS(load_diagram(std::string(SKEINWB_DATA_DIR) + "/diagrams/malformed.json"), ParseError);
}
#endif
