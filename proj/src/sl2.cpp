#include "skeinwb/sl2.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "skeinwb/errors.hpp"

namespace skeinwb {

// ---- SL2 ----------------------------------------------------------------

SL2::SL2(const Mat2& m) : m_(m) {
  cd det = m.determinant();
  if (std::abs(det - 1.0) > kDetTolerance)
    throw std::invalid_argument("SL2: |det - 1| = " + std::to_string(std::abs(det - 1.0)) + " exceeds tolerance");
}

SL2::SL2(cd a, cd b, cd c, cd d) : SL2((Mat2() << a, b, c, d).finished()) {}

SL2 SL2::inverse() const { return SL2(star(m_), Unchecked{}); }

SL2 operator*(const SL2& x, const SL2& y) { return SL2(x.m_ * y.m_, SL2::Unchecked{}); }

// ---- Sl2Vec -------------------------------------------------------------

Mat2 Sl2Vec::matrix() const {
  Mat2 m;
  m << h, e, f, -h;
  return m;
}

Sl2Vec Sl2Vec::from_traceless(const Mat2& x) { return {(x(0, 0) - x(1, 1)) / 2.0, x(0, 1), x(1, 0)}; }

Sl2Vec Sl2Vec::basis(int k) {
  switch (k) {
    case 0:
      return H();
    case 1:
      return E();
    case 2:
      return F();
    default:
      throw IndexOutOfRange("sl2 basis index " + std::to_string(k));
  }
}

// ---- Representation -----------------------------------------------------

const SL2& Representation::image(int gen) const {
  if (gen < 1 || gen > genus)
    throw IndexOutOfRange("generator t" + std::to_string(gen) + " outside genus " + std::to_string(genus));
  return images[static_cast<std::size_t>(gen - 1)];
}

Representation Representation::conjugated(const SL2& c) const {
  std::vector<SL2> imgs;
  imgs.reserve(images.size());
  SL2 ci = c.inverse();
  for (const SL2& a : images) imgs.push_back(c * a * ci);
  return Representation(std::move(imgs));
}

// ---- sampling -----------------------------------------------------------

namespace {

cd random_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  double im = u(rng);
  return {re, im};
}

}  // namespace

SL2 random_sl2(std::mt19937_64& rng) {
  for (;;) {
    cd a = random_box(rng);
    cd b = random_box(rng);
    cd c = random_box(rng);
    if (std::abs(a) < 1e-3) continue;
    return SL2(a, b, c, (1.0 + b * c) / a);
  }
}

Representation random_representation(std::mt19937_64& rng, int genus) {
  std::vector<SL2> imgs;
  for (int k = 0; k < genus; ++k) imgs.push_back(random_sl2(rng));
  return Representation(std::move(imgs));
}

Sl2Vec random_sl2vec(std::mt19937_64& rng) {
  cd h = random_box(rng);
  cd e = random_box(rng);
  cd f = random_box(rng);
  return {h, e, f};
}

// ---- operations ---------------------------------------------------------

namespace {

SL2 letter_value(const Letter& l, const Representation& rho) {
  const SL2& a = rho.image(l.gen);
  return l.exp > 0 ? a : a.inverse();
}

}  // namespace

SL2 eval_letters(const std::vector<Letter>& letters, std::size_t begin, std::size_t end, const Representation& rho) {
  SL2 acc;
  for (std::size_t k = begin; k < end; ++k) acc = acc * letter_value(letters[k], rho);
  return acc;
}

SL2 eval_word(const GroupWord& w, const Representation& rho) { return eval_letters(w.letters(), 0, w.size(), rho); }

Sl2Vec traceless(const Mat2& a) { return Sl2Vec::from_traceless(a - (a.trace() / 2.0) * Mat2::Identity()); }

Mat2 star(const Mat2& x) {
  Mat2 s;
  s << x(1, 1), -x(0, 1), -x(1, 0), x(0, 0);
  return s;
}

cd killing(const Sl2Vec& xi, const Sl2Vec& eta) { return (xi.matrix() * eta.matrix()).trace() / 6.0; }

BilinearForm3 killing_matrix() {
  return form_matrix([](const Mat2& x, const Mat2& y) { return (x * y).trace() / 6.0; });
}

cd q_functional(const BilinearForm3& phi) { return phi(0, 0) + 2.0 * phi(1, 2) + 2.0 * phi(2, 1); }

BilinearForm3 project_pi(const BilinearForm3& phi) { return q_functional(phi) * killing_matrix(); }

Mat2 exp_sl2(const Mat2& x) {
  cd d2 = -x.determinant();
  cd c;
  cd s;  // sinh(d)/d
  if (std::abs(d2) < 1e-6) {
    c = 1.0 + d2 / 2.0 + d2 * d2 / 24.0 + d2 * d2 * d2 / 720.0;
    s = 1.0 + d2 / 6.0 + d2 * d2 / 120.0 + d2 * d2 * d2 / 5040.0;
  } else {
    cd d = std::sqrt(d2);
    c = std::cosh(d);
    s = std::sinh(d) / d;
  }
  return c * Mat2::Identity() + s * x;
}

BilinearForm3 occurrence_endomorphism(const GroupWord& w, const Representation& rho, int gen, std::size_t position) {
  if (position >= w.size() || w[position].gen != gen)
    throw OccurrenceNotFound("no occurrence of t" + std::to_string(gen) + " at position " + std::to_string(position) +
                             " in " + to_string(w));
  const auto& letters = w.letters();
  Mat2 u = eval_letters(letters, 0, position, rho).matrix();
  Mat2 v = eval_letters(letters, position + 1, letters.size(), rho).matrix();
  const Mat2& a = rho.image(gen).matrix();
  bool positive = letters[position].exp > 0;
  Mat2 left = positive ? u : Mat2(u * star(a));
  Mat2 right = positive ? Mat2(a * v) : v;
  double sign = positive ? 1.0 : -1.0;
  BilinearForm3 m;
  for (int j = 0; j < 3; ++j) {
    Mat2 image = sign * left * Sl2Vec::basis(j).matrix() * right;
    m.col(j) = traceless(image).coords();
  }
  return m;
}

cd divergence(const GroupWord& w, const Representation& rho, int gen) {
  cd total = 0.0;
  for (std::size_t p : w.occurrences(gen)) total += occurrence_endomorphism(w, rho, gen, p).trace();
  return total;
}

cd fd_divergence(const GroupWord& w, const Representation& rho, int gen, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_divergence: step must be positive");
  if (w.occurrences(gen).empty()) return 0.0;
  auto coords_at = [&](const Mat2& xi, double s) {
    Representation moved = rho;
    moved.images[static_cast<std::size_t>(gen - 1)] = SL2(exp_sl2(s * xi)) * rho.image(gen);
    return traceless(eval_word(w, moved)).coords();
  };
  cd total = 0.0;
  for (int j = 0; j < 3; ++j) {
    Mat2 xi = Sl2Vec::basis(j).matrix();
    Eigen::Vector3cd diff = (coords_at(xi, h) - coords_at(xi, -h)) / (2.0 * h);
    total += diff(j);
  }
  return total;
}

OccurrenceTraceProbe occurrence_trace_probe(const GroupWord& w, const Representation& rho, std::size_t position) {
  const auto& letters = w.letters();
  if (position >= letters.size()) throw OccurrenceNotFound("position past end of word");
  int gen = letters[position].gen;
  Mat2 u = eval_letters(letters, 0, position, rho).matrix();
  Mat2 v = eval_letters(letters, position + 1, letters.size(), rho).matrix();
  Mat2 a = rho.image(gen).matrix();
  Mat2 ai = star(a);
  Mat2 vi = star(v);
  OccurrenceTraceProbe probe;
  probe.basis_trace = occurrence_endomorphism(w, rho, gen, position).trace();
  if (letters[position].exp > 0) {
    probe.closed_form = 0.5 * (u * a * v).trace() + (u * vi * ai).trace();
    probe.swapped_form = 0.5 * (u * a * v).trace() + (u * a * vi).trace();
  } else {
    probe.closed_form = -0.5 * (u * ai * v).trace() - (u * ai * vi).trace();
    probe.swapped_form = -0.5 * (u * ai * v).trace() - (u * vi * a).trace();
  }
  return probe;
}

cd crossing_contribution(const SL2& a, const SL2& b, int sign) {
  cd tab = (a * b).trace();
  cd tabi = (a * b.inverse()).trace();
  cd lhs = a.trace() * b.trace();
  double scale = 1.0 + std::abs(lhs) + std::abs(tab) + std::abs(tabi);
  if (std::abs(lhs - tab - tabi) > 1e-10 * scale)
    throw std::logic_error("trace identity tr A tr B = tr AB + tr AB^-1 violated");
  return static_cast<double>(sign) * (tab + 2.0 * tabi);
}

// ---- text formats -------------------------------------------------------

namespace {

cd parse_entry(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("matrix entry must be a number or [re,im]");
}

}  // namespace

SL2 parse_sl2(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what(), e.byte);
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw ParseError("matrix must be a 2x2 array");
  try {
    return SL2(parse_entry(j[0][0]), parse_entry(j[0][1]), parse_entry(j[1][0]), parse_entry(j[1][1]));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_json_string(const Mat2& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    j.push_back(row);
  }
  return j.dump();
}

}  // namespace skeinwb
