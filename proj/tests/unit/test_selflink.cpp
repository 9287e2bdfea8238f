#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skeinwb/selflink.hpp"

using namespace skeinwb;
using testing::rel_err;
using testing::rep;

namespace {
const SL2 A2 = SL2::diag(2.0);
}

TEST_CASE("first derivative") {
  GroupWord a = GroupWord::parse("a");
  CHECK(first_derivative({a, {{0, Sl2Vec{}}}}, rep({A2})) == cd(0.0));
  CHECK(std::abs(first_derivative({a, {{0, Sl2Vec::H()}}}, rep({A2})) - 1.5) < 1e-14);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 50; ++s) {
    int g = 1 + s % 3;
    GroupWord w = random_word(rng, g, 1 + static_cast<std::size_t>(s % 8));
    Representation rho = random_representation(rng, g);
    DeformedWord dw{w, {{static_cast<std::size_t>(s) % (w.size() + 1), random_sl2vec(rng)}}};
    CHECK(rel_err(first_derivative(dw, rho), fd_first_derivative(dw, rho)) < 1e-6);
  }
}

TEST_CASE("hessian pair") {
  GroupWord aa = GroupWord::parse("aa");
  CHECK(hessian_pair({aa, {{0, Sl2Vec{}}, {1, Sl2Vec{}}}}, rep({SL2()})) == cd(0.0));
  CHECK(std::abs(hessian_pair({aa, {{0, Sl2Vec::H()}, {1, Sl2Vec::H()}}}, rep({SL2()})) - 2.0) < 1e-14);
  CHECK_THROWS_AS(hessian_pair({aa, {{1, Sl2Vec::H()}, {1, Sl2Vec::H()}}}, rep({SL2()})), std::invalid_argument);
  CHECK_THROWS_AS(first_derivative({aa, {{3, Sl2Vec::H()}}}, rep({SL2()})), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int s = 0; s < 50; ++s) {
    int g = 1 + s % 3;
    GroupWord w = random_word(rng, g, 1 + static_cast<std::size_t>(s % 8));
    Representation rho = random_representation(rng, g);
    std::size_t p = static_cast<std::size_t>(s) % w.size();
    std::size_t q = p + 1 + static_cast<std::size_t>(s / 7) % (w.size() - p);
    DeformedWord dw{w, {{p, random_sl2vec(rng)}, {q, random_sl2vec(rng)}}};
    CHECK(rel_err(hessian_pair(dw, rho), fd_hessian_pair(dw, rho)) < 1e-5);
  }
}

TEST_CASE("trace identity hessian vanishes") {
  std::mt19937_64 rng(7);
  GroupWord alpha = GroupWord::parse("ab");
  GroupWord beta = GroupWord::parse("bA");
  Representation rho = random_representation(rng, 2);
  LoopSlot zero{LoopId::Alpha, 1, Sl2Vec{}};
  CHECK(trace_identity_hessian(alpha, beta, rho, zero, zero).value == cd(0.0));
  for (int s = 0; s < 100; ++s) {
    int g = 1 + s % 3;
    GroupWord x = random_word(rng, g, 1 + static_cast<std::size_t>(s % 6));
    GroupWord y = random_word(rng, g, 1 + static_cast<std::size_t>(s % 5));
    Representation r = random_representation(rng, g);
    LoopSlot s1{s % 2 ? LoopId::Alpha : LoopId::Beta, 0, random_sl2vec(rng)};
    LoopSlot s2{s % 3 ? LoopId::Beta : LoopId::Alpha, 1, random_sl2vec(rng)};
    TraceIdentityHessian t = trace_identity_hessian(x, y, r, s1, s2);
    CHECK(std::abs(t.value) < 1e-8 * t.scale);
  }
}

TEST_CASE("Q identities") {
  QPair id = q_case_smooth(SL2(), SL2());
  CHECK(std::abs(id.q - 6.0) < 1e-14);
  CHECK(std::abs(id.closed - 6.0) < 1e-14);
  QPair d = q_case_smooth(A2, SL2());
  CHECK(std::abs(d.q - 7.5) < 1e-14);
  CHECK(std::abs(d.closed - 7.5) < 1e-14);
  QPair split = q_case_split(SL2(), SL2());
  CHECK(std::abs(split.q) + std::abs(split.closed) < 1e-14);
  QPair same = q_case_split(A2, A2);
  CHECK(std::abs(same.q - (2.0 - (A2 * A2).trace())) < 1e-14);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 100; ++s) {
    SL2 a = random_sl2(rng);
    SL2 b = random_sl2(rng);
    QPair p1 = q_case_smooth(a, b);
    QPair p2 = q_case_split(a, b);
    CHECK(rel_err(p1.q, p1.closed) < 1e-9);
    CHECK(rel_err(p2.q, p2.closed) < 1e-9);
  }
}

TEST_CASE("Kauffman relation at the classical limit") {
  KauffmanResiduals id = kauffman_scalar_check(SL2(), SL2());
  CHECK(std::abs(id.smooth) + std::abs(id.split) + std::abs(id.unknot) < 1e-14);
  std::mt19937_64 rng(13);
  for (int s = 0; s < 100; ++s) {
    SL2 a = random_sl2(rng);
    SL2 b = random_sl2(rng);
    KauffmanResiduals k = kauffman_scalar_check(a, b);
    double scale = 1.0 + std::abs(q_case_smooth(a, b).q) + std::abs(q_case_split(a, b).q);
    CHECK(std::abs(k.smooth) < 1e-9 * scale);
    CHECK(std::abs(k.split) < 1e-9 * scale);
    CHECK(std::abs(k.unknot) < 2e-9 * scale);
  }
}
