#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skeinwb/errors.hpp"
#include "skeinwb/sl2.hpp"

using namespace skeinwb;
using testing::rel_err;
using testing::rep;

namespace {

const SL2 A2 = SL2::diag(2.0);
const SL2 U1(1.0, 1.0, 0.0, 1.0);

Mat2 m(cd a, cd b, cd c, cd d) {
  Mat2 x;
  x << a, b, c, d;
  return x;
}

}  // namespace

TEST_CASE("SL2 construction checks the determinant") {
  CHECK_THROWS_AS(SL2(2.0, 0.0, 0.0, 2.0), std::invalid_argument);
  CHECK((A2 * A2.inverse()).matrix().isApprox(Mat2::Identity()));
}

TEST_CASE("word evaluation") {
  Representation rho = rep({A2, U1});
  CHECK(eval_word(GroupWord(), rho).matrix() == Mat2::Identity());
  CHECK(eval_word(GroupWord::parse("aA"), rho).matrix() == Mat2::Identity());
  CHECK(eval_word(GroupWord::parse("ab"), rho).matrix().isApprox(m(2.0, 2.0, 0.0, 0.5)));
  CHECK_THROWS(eval_word(GroupWord::parse("c"), rho));
}

TEST_CASE("traceless part") {
  Sl2Vec z = traceless(Mat2(Mat2::Identity()));
  CHECK(std::abs(z.h) + std::abs(z.e) + std::abs(z.f) == 0.0);
  Sl2Vec h = traceless(Sl2Vec::H().matrix());
  CHECK(h.h == cd(1.0));
  Sl2Vec d = traceless(A2);
  CHECK(std::abs(d.h - 0.75) < 1e-15);
  CHECK(std::abs(d.e) + std::abs(d.f) == 0.0);
}

TEST_CASE("star operator") {
  CHECK(star(Mat2::Identity()) == Mat2::Identity());
  CHECK(star(Sl2Vec::H().matrix()) == -Sl2Vec::H().matrix());
  CHECK(star(m(1.0, 2.0, 3.0, 4.0)) == m(4.0, -2.0, -3.0, 1.0));
  std::mt19937_64 rng(2);
  for (int s = 0; s < 50; ++s) {
    SL2 b = random_sl2(rng);
    CHECK(b.matrix() + star(b.matrix()) == b.trace() * Mat2::Identity());
    CHECK((star(b.matrix()) - b.inverse().matrix()).norm() < 1e-9 * (1.0 + b.matrix().squaredNorm()));
  }
}

TEST_CASE("Killing form and Q") {
  CHECK(std::abs(killing(Sl2Vec::H(), Sl2Vec::H()) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(killing(Sl2Vec::E(), Sl2Vec::F()) - 1.0 / 6.0) < 1e-15);
  CHECK(killing(Sl2Vec::H(), Sl2Vec::E()) == cd(0.0));
  CHECK(q_functional(killing_matrix()) == cd(1.0));
  BilinearForm3 trace_form = form_matrix([](const Mat2& x, const Mat2& y) { return (y * x).trace(); });
  CHECK(q_functional(trace_form) == cd(6.0));
  CHECK(q_functional(BilinearForm3::Zero()) == cd(0.0));
}

TEST_CASE("projection onto the Killing line") {
  CHECK(project_pi(killing_matrix()).isApprox(killing_matrix()));
  Mat2 hm = Sl2Vec::H().matrix();
  BilinearForm3 anti = form_matrix([&](const Mat2& x, const Mat2& y) { return ((x * y - y * x) * hm).trace(); });
  CHECK(q_functional(anti) == cd(0.0));
  CHECK(project_pi(anti).norm() == 0.0);
  CHECK(project_pi(BilinearForm3::Zero()).norm() == 0.0);
}

TEST_CASE("exponential map") {
  Mat2 x = Sl2Vec::H().matrix() * 0.3;
  Mat2 e = exp_sl2(x);
  CHECK(std::abs(e(0, 0) - std::exp(0.3)) < 1e-14);
  Mat2 n = Sl2Vec::E().matrix();
  CHECK((exp_sl2(n) - (Mat2::Identity() + n)).norm() < 1e-14);
}

TEST_CASE("occurrence endomorphism examples") {
  Representation id = rep({SL2()});
  CHECK(std::abs(occurrence_endomorphism(GroupWord::parse("a"), id, 1, 0).trace() - 3.0) < 1e-14);
  CHECK(std::abs(occurrence_endomorphism(GroupWord::parse("A"), id, 1, 0).trace() + 3.0) < 1e-14);
  Representation d = rep({A2});
  CHECK(std::abs(occurrence_endomorphism(GroupWord::parse("a"), d, 1, 0).trace() - 3.75) < 1e-14);
  CHECK_THROWS_AS(occurrence_endomorphism(GroupWord::parse("ab"), rep({A2, U1}), 1, 1), OccurrenceNotFound);
}

TEST_CASE("divergence examples") {
  CHECK(std::abs(divergence(GroupWord::parse("a"), rep({A2}), 1) - 3.75) < 1e-14);
  CHECK(divergence(GroupWord::parse("b"), rep({A2, U1}), 1) == cd(0.0));
  CHECK(std::abs(divergence(GroupWord::parse("aa"), rep({SL2()}), 1) - 6.0) < 1e-14);
  CHECK(fd_divergence(GroupWord(), rep({A2}), 1) == cd(0.0));
  for (const char* w : {"a", "aa"}) {
    Representation rho = std::string(w) == "a" ? rep({A2}) : rep({SL2()});
    CHECK(std::abs(fd_divergence(GroupWord::parse(w), rho, 1) - divergence(GroupWord::parse(w), rho, 1)) < 1e-6);
  }
}

TEST_CASE("divergence matches finite differences") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 100; ++s) {
    int g = 1 + s % 3;
    GroupWord w = random_word(rng, g, 1 + static_cast<std::size_t>(s % 8));
    Representation rho = random_representation(rng, g);
    int gen = 1 + s % g;
    CHECK(rel_err(divergence(w, rho, gen), fd_divergence(w, rho, gen)) < 1e-5);
  }
}

TEST_CASE("single occurrence at trivial neighbours gives 3/2 tr A") {
  std::mt19937_64 rng(23);
  for (int s = 0; s < 50; ++s) {
    Representation rho = random_representation(rng, 1);
    cd tr = occurrence_endomorphism(GroupWord::parse("a"), rho, 1, 0).trace();
    CHECK(rel_err(tr, 1.5 * rho.image(1).trace()) < 1e-10);
  }
}

TEST_CASE("occurrence trace closed form") {
  std::mt19937_64 rng(29);
  double swapped_worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    int g = 1 + s % 3;
    GroupWord w = random_word(rng, g, 2 + static_cast<std::size_t>(s % 7));
    Representation rho = random_representation(rng, g);
    OccurrenceTraceProbe p = occurrence_trace_probe(w, rho, static_cast<std::size_t>(s) % w.size());
    CHECK(rel_err(p.basis_trace, p.closed_form) < 1e-9);
    swapped_worst = std::max(swapped_worst, rel_err(p.basis_trace, p.swapped_form));
  }
  CHECK(swapped_worst > 1e-3);
}

TEST_CASE("trace identity and crossing contribution") {
  CHECK(crossing_contribution(SL2(), SL2(), 1) == cd(6.0));
  CHECK(std::abs(crossing_contribution(A2, SL2(), 1) - 7.5) < 1e-14);
  CHECK(std::abs(crossing_contribution(A2, SL2(), -1) + 7.5) < 1e-14);
  std::mt19937_64 rng(31);
  for (int s = 0; s < 1000; ++s) {
    SL2 a = random_sl2(rng);
    SL2 b = random_sl2(rng);
    CHECK(rel_err(a.trace() * b.trace(), (a * b).trace() + (a * b.inverse()).trace()) < 1e-10);
  }
}

TEST_CASE("Killing form is conjugation invariant") {
  std::mt19937_64 rng(37);
  for (int s = 0; s < 50; ++s) {
    Sl2Vec xi = random_sl2vec(rng);
    Sl2Vec eta = random_sl2vec(rng);
    SL2 c = random_sl2(rng);
    auto ad = [&](const Sl2Vec& v) { return Sl2Vec::from_traceless(c.matrix() * v.matrix() * c.inverse().matrix()); };
    CHECK(rel_err(killing(xi, eta), killing(ad(xi), ad(eta))) < 1e-10);
  }
}

TEST_CASE("matrix text format") {
  SL2 a = parse_sl2("[[2, 0], [0, 0.5]]");
  CHECK(a.matrix().isApprox(A2.matrix()));
  SL2 b = parse_sl2(to_json_string(U1.matrix()));
  CHECK(b.matrix() == U1.matrix());
  CHECK_THROWS_AS(parse_sl2("[[1, 1], [1, 1]]"), ParseError);
  CHECK_THROWS_AS(parse_sl2("[[1, 0]"), ParseError);
}
