#pragma once

// Transport identity for handlebodies: the e-part f' of [gamma # gamma_i] - [gamma]
// against the divergence of the word-map vector field.

#include <string>
#include <vector>

#include "skeinwb/skein.hpp"
#include "skeinwb/sl2.hpp"
#include "skeinwb/word.hpp"

namespace skeinwb {

/// Candidate constants tried by calibrate_kappa, in order of preference.
const std::vector<double>& kappa_candidates();

/// Resolved handle slide, reusable across representations.
struct PreparedSlide {
  GroupWord word;
  int gen = 1;
  std::size_t occurrence = 0;  ///< 0-based index into the occurrences of gen
  bool vacuous = false;        ///< no occurrence: f = f' = 0 and div = 0
  HandleSlide slide;
  DualSkein difference;        ///< resolve(sum) - resolve(plain), reduced

  static PreparedSlide make(const GroupWord& w, int gen, std::size_t occurrence,
                            const std::vector<std::size_t>& order = {}, SlideVariant variant = SlideVariant::Band);
};

struct FValues {
  cd f;
  cd f_prime;
};

FValues f_and_fprime(const PreparedSlide& p, const Representation& rho);
/// Convenience overload that builds and resolves the slide.
FValues f_and_fprime(const GroupWord& w, int gen, std::size_t occurrence, const Representation& rho);

/// Sum over crossings of -eps_j (tr AB + 2 tr AB^-1), A and B being the
/// holonomies from the band point to the crossing and back.
cd fprime_closed_form(const PreparedSlide& p, const Representation& rho);

/// Divergence of the based word (w read from the band point).
cd slide_divergence(const PreparedSlide& p, const Representation& rho);

struct TransportReport {
  std::string word;
  int gen = 1;
  std::size_t occurrence = 0;
  std::size_t sample = 0;
  cd f_value;
  cd f_prime;
  cd divergence;
  cd residual;  ///< f_prime + 2 kappa divergence
  double kappa = 0.0;
  double scale = 1.0;  ///< 1 + |f'| + |div|
};

TransportReport transport_residual(const PreparedSlide& p, const Representation& rho, double kappa,
                                   std::size_t sample = 0);

struct CalibrationCase {
  cd f_prime;
  cd divergence;
};

/// Picks the candidate minimizing the worst scaled residual. Throws
/// CalibrationFailure when the list is empty, has no case with f' != 0, or no
/// candidate gets below tol.
double calibrate_kappa(const std::vector<CalibrationCase>& cases, double tol = 1e-8);

/// Calibration data from genus-1 slides of the words a^n, a^-n and mixed
/// powers, evaluated at seeded random representations.
std::vector<CalibrationCase> genus1_calibration_cases(std::uint64_t seed, SlideVariant variant = SlideVariant::Band);

}  // namespace skeinwb
