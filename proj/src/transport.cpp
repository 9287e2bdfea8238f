#include "skeinwb/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "skeinwb/errors.hpp"

namespace skeinwb {

const std::vector<double>& kappa_candidates() {
  static const std::vector<double> c = {1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 0.25, -0.25, 4.0, -4.0};
  return c;
}

PreparedSlide PreparedSlide::make(const GroupWord& w, int gen, std::size_t occurrence,
                                  const std::vector<std::size_t>& order, SlideVariant variant) {
  PreparedSlide p;
  p.word = w;
  p.gen = gen;
  p.occurrence = occurrence;
  if (w.occurrences(gen).empty()) {
    p.vacuous = true;
    return p;
  }
  p.slide = build_handle_slide(w, gen, occurrence, order, variant);
  p.difference = to_dual(resolve(p.slide.sum) - resolve(p.slide.plain));
  return p;
}

FValues f_and_fprime(const PreparedSlide& p, const Representation& rho) {
  if (p.vacuous) return {0.0, 0.0};
  DualScalar v = evaluate(p.difference, rho);
  return {v.value, v.deriv};
}

FValues f_and_fprime(const GroupWord& w, int gen, std::size_t occurrence, const Representation& rho) {
  return f_and_fprime(PreparedSlide::make(w, gen, occurrence), rho);
}

cd fprime_closed_form(const PreparedSlide& p, const Representation& rho) {
  if (p.vacuous) return 0.0;
  const auto& letters = p.slide.based_letters;
  cd total = 0.0;
  for (std::size_t j = 0; j < p.slide.based_positions.size(); ++j) {
    int eps = p.slide.exponents[j];
    // The crossing sits before a positive letter and after a negative one.
    std::size_t cut = p.slide.based_positions[j] + (eps > 0 ? 0 : 1);
    SL2 a = eval_letters(letters, 0, cut, rho);
    SL2 b = eval_letters(letters, cut, letters.size(), rho);
    total += crossing_contribution(a, b, -eps);
  }
  return total;
}

cd slide_divergence(const PreparedSlide& p, const Representation& rho) {
  if (p.vacuous) return 0.0;
  return divergence(p.slide.based_word(), rho, p.gen);
}

TransportReport transport_residual(const PreparedSlide& p, const Representation& rho, double kappa,
                                   std::size_t sample) {
  TransportReport r;
  r.word = to_string(p.word);
  r.gen = p.gen;
  r.occurrence = p.occurrence;
  r.sample = sample;
  FValues fv = f_and_fprime(p, rho);
  r.f_value = fv.f;
  r.f_prime = fv.f_prime;
  r.divergence = slide_divergence(p, rho);
  r.kappa = kappa;
  r.residual = r.f_prime + 2.0 * kappa * r.divergence;
  r.scale = 1.0 + std::abs(r.f_prime) + std::abs(r.divergence);
  return r;
}

double calibrate_kappa(const std::vector<CalibrationCase>& cases, double tol) {
  if (cases.empty()) throw CalibrationFailure("calibration needs at least one case");
  bool informative = std::any_of(cases.begin(), cases.end(), [](const CalibrationCase& c) { return std::abs(c.f_prime) > 1e-12; });
  if (!informative) throw CalibrationFailure("calibration needs a case with nonzero f'");
  double best = std::numeric_limits<double>::infinity();
  double best_kappa = 0.0;
  std::string table;
  for (double kappa : kappa_candidates()) {
    double worst = 0.0;
    for (const CalibrationCase& c : cases) {
      double scale = 1.0 + std::abs(c.f_prime) + std::abs(c.divergence);
      worst = std::max(worst, std::abs(c.f_prime + 2.0 * kappa * c.divergence) / scale);
    }
    table += "  kappa=" + std::to_string(kappa) + " worst scaled residual=" + std::to_string(worst) + "\n";
    if (worst < best) {
      best = worst;
      best_kappa = kappa;
    }
  }
  if (!(best < tol)) throw CalibrationFailure("no candidate kappa fits the calibration cases:\n" + table);
  return best_kappa;
}

std::vector<CalibrationCase> genus1_calibration_cases(std::uint64_t seed, SlideVariant variant) {
  std::mt19937_64 rng(seed);
  std::vector<CalibrationCase> cases;
  for (const char* text : {"a", "aa", "A", "AA", "aaa", "AAA"}) {
    GroupWord w = GroupWord::parse(text);
    for (std::size_t k = 0; k < w.occurrences(1).size(); ++k) {
      PreparedSlide p = PreparedSlide::make(w, 1, k, {}, variant);
      for (int s = 0; s < 5; ++s) {
        Representation rho = random_representation(rng, 1);
        cases.push_back({f_and_fprime(p, rho).f_prime, slide_divergence(p, rho)});
      }
    }
  }
  return cases;
}

}  // namespace skeinwb
