#pragma once

// SL2(C) / sl2(C) numerics: word evaluation, traceless parts, the star
// operator, Killing form and Q functional, and divergences of word-map
// vector fields in left trivialization.

#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "skeinwb/word.hpp"

namespace skeinwb {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
/// Matrix in the (H, E, F) basis; entry (i, j) is phi(b_i, b_j) for a bilinear
/// form, or the i-th coordinate of the image of b_j for an endomorphism.
using BilinearForm3 = Eigen::Matrix3cd;

inline constexpr double kDetTolerance = 1e-10;

/// 2x2 complex matrix with determinant 1 (checked at construction).
class SL2 {
 public:
  SL2() : m_(Mat2::Identity()) {}
  /// Throws std::invalid_argument when |det - 1| > kDetTolerance.
  explicit SL2(const Mat2& m);
  SL2(cd a, cd b, cd c, cd d);

  static SL2 identity() { return {}; }
  static SL2 diag(cd lambda) { return SL2(lambda, 0.0, 0.0, 1.0 / lambda); }

  const Mat2& matrix() const { return m_; }
  cd trace() const { return m_.trace(); }
  /// Exact adjugate inverse (d, -b; -c, a).
  SL2 inverse() const;

  friend SL2 operator*(const SL2& x, const SL2& y);

 private:
  struct Unchecked {};
  SL2(const Mat2& m, Unchecked) : m_(m) {}
  Mat2 m_;
};

/// Coordinates (h, e, f) of h H + e E + f F.
struct Sl2Vec {
  cd h{};
  cd e{};
  cd f{};

  Mat2 matrix() const;
  static Sl2Vec from_traceless(const Mat2& x);
  static Sl2Vec H() { return {1.0, 0.0, 0.0}; }
  static Sl2Vec E() { return {0.0, 1.0, 0.0}; }
  static Sl2Vec F() { return {0.0, 0.0, 1.0}; }
  static Sl2Vec basis(int k);

  Eigen::Vector3cd coords() const { return {h, e, f}; }
  friend Sl2Vec operator+(const Sl2Vec& a, const Sl2Vec& b) { return {a.h + b.h, a.e + b.e, a.f + b.f}; }
  friend Sl2Vec operator*(cd s, const Sl2Vec& a) { return {s * a.h, s * a.e, s * a.f}; }
};

/// A homomorphism from the free group of rank `genus`.
struct Representation {
  int genus = 0;
  std::vector<SL2> images;

  Representation() = default;
  explicit Representation(std::vector<SL2> imgs) : genus(static_cast<int>(imgs.size())), images(std::move(imgs)) {}

  const SL2& image(int gen) const;
  Representation conjugated(const SL2& c) const;
};

// ---- sampling -----------------------------------------------------------

/// Three entries uniform in the box [-1,1] + i[-1,1], the fourth solved from
/// det = 1; pivots with |a| < 1e-3 are rejected.
SL2 random_sl2(std::mt19937_64& rng);
Representation random_representation(std::mt19937_64& rng, int genus);
Sl2Vec random_sl2vec(std::mt19937_64& rng);

// ---- operations ---------------------------------------------------------

/// Throws IndexOutOfRange when the word uses a generator beyond rho.genus.
SL2 eval_word(const GroupWord& w, const Representation& rho);
/// Product of the letters [begin, end) of w, with no reduction performed.
SL2 eval_letters(const std::vector<Letter>& letters, std::size_t begin, std::size_t end, const Representation& rho);

/// A - tr(A)/2 Id, as sl2 coordinates.
Sl2Vec traceless(const Mat2& a);
inline Sl2Vec traceless(const SL2& a) { return traceless(a.matrix()); }

/// (a b; c d)* = (d -b; -c a).
Mat2 star(const Mat2& x);

/// K(xi, eta) = tr(xi eta) / 6.
cd killing(const Sl2Vec& xi, const Sl2Vec& eta);
BilinearForm3 killing_matrix();

/// Matrix of a bilinear form given as a callable phi(Mat2 xi, Mat2 eta).
template <class Fn>
BilinearForm3 form_matrix(Fn&& phi) {
  BilinearForm3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = phi(Sl2Vec::basis(i).matrix(), Sl2Vec::basis(j).matrix());
  return m;
}

/// Q(phi) = phi(H,H) + 2 phi(E,F) + 2 phi(F,E).
cd q_functional(const BilinearForm3& phi);
/// Projection onto invariant forms: Q(phi) K.
BilinearForm3 project_pi(const BilinearForm3& phi);

/// exp of a traceless matrix, closed form cosh(d) Id + sinh(d)/d X with
/// d^2 = -det X.
Mat2 exp_sl2(const Mat2& x);

/// Endomorphism of sl2 contributed by the letter at `position` of w, which
/// must have generator `gen`:
///   exponent +1: xi -> (U xi A V)_0,  exponent -1: xi -> -(U A^-1 xi V)_0,
/// U and V being the prefix and suffix products around the letter.
BilinearForm3 occurrence_endomorphism(const GroupWord& w, const Representation& rho, int gen, std::size_t position);

/// Trace of the derivative of A_gen -> w(...)_0 under A_gen -> exp(s xi) A_gen.
cd divergence(const GroupWord& w, const Representation& rho, int gen);

/// Central-difference estimate of `divergence` with step h.
cd fd_divergence(const GroupWord& w, const Representation& rho, int gen, double h = 1e-4);

/// Closed forms of the occurrence trace for comparison:
///   closed:  1/2 tr(U A V) + tr(U V^-1 A^-1)
///   swapped: 1/2 tr(U A V) + tr(U A V^-1)
/// (negated with A -> A^-1 for inverse letters).
struct OccurrenceTraceProbe {
  cd basis_trace;
  cd closed_form;
  cd swapped_form;
};
OccurrenceTraceProbe occurrence_trace_probe(const GroupWord& w, const Representation& rho, std::size_t position);

/// sign * (tr(AB) + 2 tr(AB^-1)). Throws std::logic_error if the identity
/// tr A tr B = tr AB + tr AB^-1 is violated beyond 1e-10 relative.
cd crossing_contribution(const SL2& a, const SL2& b, int sign);

// ---- text formats -------------------------------------------------------

/// [[[re,im],[re,im]],[[re,im],[re,im]]]; plain numbers are accepted for real entries.
SL2 parse_sl2(const std::string& json_text);
std::string to_json_string(const Mat2& m);

}  // namespace skeinwb
