// skeinwb command-line front end.
//
// Exit codes: 0 pass, 1 property failure, 2 input error, 3 calibration failure.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "skeinwb/catalog.hpp"
#include "skeinwb/errors.hpp"
#include "skeinwb/skein.hpp"
#include "skeinwb/suites.hpp"
#include "skeinwb/transport.hpp"

namespace {

using namespace skeinwb;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kCalibration = 3;

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

std::string fmt_complex(cd z) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

/// Prints records and returns the exit code they imply.
int emit(const std::vector<Record>& records, bool jsonl) {
  std::size_t failed = 0;
  double worst = 0.0;
  bool calibration_failed = false;
  for (const Record& r : records) {
    if (jsonl) {
      std::cout << r.to_json().dump() << '\n';
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(44) << r.name << " residual "
                << fmt_double(r.residual);
      if (!r.inputs.empty()) std::cout << "  " << r.inputs.dump();
      std::cout << '\n';
      if (!r.note.empty()) std::cout << "     note: " << r.note << '\n';
    }
    if (!r.pass) {
      ++failed;
      if (r.name == "transport.calibration") calibration_failed = true;
    }
    if (std::isfinite(r.residual)) worst = std::max(worst, r.residual);
  }
  if (!jsonl) {
    std::cout << (failed == 0 ? "PASS" : "FAIL") << ": " << records.size() - failed << "/" << records.size()
              << " records pass, worst residual " << fmt_double(worst) << '\n';
  }
  for (const Record& r : records)
    if (!r.note.empty() && r.note.rfind("no samples", 0) == 0) std::cerr << "warning: " << r.note << '\n';
  if (calibration_failed) return kCalibration;
  return failed == 0 ? kPass : kFail;
}

int cmd_bracket(const std::string& path, const std::string& ring) {
  Diagram d = load_diagram(path);
  LaurentSkein s = resolve(d);
  if (ring == "dual") {
    std::cout << to_string(to_exact_dual(s)) << '\n';
  } else {
    std::cout << to_string(s) << '\n';
  }
  return kPass;
}

struct TransportArgs {
  std::string word;
  int gen = 1;
  std::size_t occ = 1;
  int genus = 0;
  int samples = 20;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string format = "text";
};

int cmd_transport(const TransportArgs& a) {
  GroupWord w = GroupWord::parse(a.word);
  int genus = std::max({a.genus, w.max_generator(), a.gen});
  if (a.genus > 0 && (w.max_generator() > a.genus || a.gen > a.genus))
    throw ParseError("word or generator exceeds --genus " + std::to_string(a.genus));
  if (a.gen < 1) throw ParseError("--gen must be positive");
  if (a.occ < 1) throw ParseError("--occ is 1-based");
  bool jsonl = a.format == "jsonl";

  double kappa = calibrate_kappa(genus1_calibration_cases(a.seed));

  std::size_t m = w.occurrences(a.gen).size();
  if (m > 0 && a.occ > m)
    throw OccurrenceNotFound("occurrence " + std::to_string(a.occ) + " of generator " + std::to_string(a.gen) +
                             " not found (word has " + std::to_string(m) + ")");
  PreparedSlide p = PreparedSlide::make(w, a.gen, m == 0 ? 0 : a.occ - 1);

  std::mt19937_64 rng(a.seed);
  if (!jsonl) {
    std::cout << "kappa = " << kappa << "  word " << to_string(w) << "  gen " << a.gen << "  occ " << a.occ
              << "  genus " << genus << (p.vacuous ? "  (no occurrence: vacuous)" : "") << '\n';
    std::cout << std::left << std::setw(8) << "sample" << std::setw(30) << "f" << std::setw(30) << "f'"
              << std::setw(30) << "div" << "residual/scale\n";
  }
  bool ok = true;
  for (int s = 0; s < a.samples; ++s) {
    Representation rho = random_representation(rng, genus);
    TransportReport rep = transport_residual(p, rho, kappa, static_cast<std::size_t>(s));
    double res = std::abs(rep.residual) / rep.scale;
    double fres = std::abs(rep.f_value) / rep.scale;
    bool pass = res < a.tol && fres < a.tol;
    ok = ok && pass;
    Record r;
    r.name = "transport.sample";
    r.inputs = {{"word", to_string(w)}, {"gen", a.gen}, {"occ", a.occ}, {"genus", genus}, {"sample", s}};
    r.values = {{"f", {rep.f_value.real(), rep.f_value.imag()}},
                {"f_prime", {rep.f_prime.real(), rep.f_prime.imag()}},
                {"divergence", {rep.divergence.real(), rep.divergence.imag()}},
                {"kappa", kappa}};
    r.residual = res;
    r.pass = pass;
    if (jsonl) {
      std::cout << r.to_json().dump() << '\n';
    } else {
      std::cout << std::left << std::setw(8) << s << std::setw(30) << fmt_complex(rep.f_value) << std::setw(30)
                << fmt_complex(rep.f_prime) << std::setw(30) << fmt_complex(rep.divergence) << fmt_double(res)
                << (pass ? "" : "  FAIL") << '\n';
    }
  }
  if (!jsonl) std::cout << (ok ? "PASS" : "FAIL") << " (" << a.samples << " samples, tol " << a.tol << ")\n";
  return ok ? kPass : kFail;
}

int cmd_selflink(const std::string& group, int samples, std::uint64_t seed, std::optional<double> tol,
                 const std::string& format) {
  std::vector<Record> records = selflink_group(group, seed, samples);
  if (tol)
    for (Record& r : records) r.pass = r.residual <= *tol;
  return emit(records, format == "jsonl");
}

int cmd_suite(const std::string& which, std::uint64_t seed, int samples, const std::string& format) {
  SuiteOptions options;
  options.seed = seed;
  options.samples = samples;
  return emit(run_suite(which, options), format == "jsonl");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skein module workbench"};
  app.require_subcommand(1);

  std::string diagram_path;
  std::string ring = "laurent";
  auto* bracket = app.add_subcommand("bracket", "Resolve a diagram file into the skein module");
  bracket->add_option("file", diagram_path, "Diagram JSON file")->required();
  bracket->add_option("--ring", ring, "Coefficient ring")->check(CLI::IsMember({"laurent", "dual"}));

  TransportArgs targs;
  auto* transport = app.add_subcommand("transport", "Check the transport equation for one handle slide");
  transport->add_option("--word", targs.word, "Word in a,b,c,... (capitals are inverses)")->required();
  transport->add_option("--gen", targs.gen, "Generator being slid over");
  transport->add_option("--occ", targs.occ, "Occurrence of the generator (1-based)");
  transport->add_option("--genus", targs.genus, "Handlebody genus (default: smallest that fits)");
  transport->add_option("--samples", targs.samples, "Random representations")->check(CLI::NonNegativeNumber);
  transport->add_option("--seed", targs.seed, "RNG seed");
  transport->add_option("--tol", targs.tol, "Scaled residual tolerance");
  transport->add_option("--format", targs.format)->check(CLI::IsMember({"text", "jsonl"}));

  std::string group;
  int sl_samples = -1;
  std::uint64_t sl_seed = 1;
  std::optional<double> sl_tol;
  std::string sl_format = "text";
  auto* selflink = app.add_subcommand("selflink", "Self-linking identity checks");
  selflink->add_option("--suite", group, "Check group")
      ->required()
      ->check(CLI::IsMember(selflink_group_names()));
  selflink->add_option("--samples", sl_samples, "Samples (default depends on the group)");
  selflink->add_option("--seed", sl_seed, "RNG seed");
  selflink->add_option("--tol", sl_tol, "Override every tolerance");
  selflink->add_option("--format", sl_format)->check(CLI::IsMember({"text", "jsonl"}));

  std::string which = "all";
  std::uint64_t seed = 1;
  int samples = 20;
  std::string format = "text";
  auto* suite = app.add_subcommand("suite", "Run property suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  suite->add_option("which", which, "Suite name or all")->check(CLI::IsMember(choices));
  suite->add_option("--seed", seed, "RNG seed");
  suite->add_option("--samples", samples, "Representations per transport case")->check(CLI::NonNegativeNumber);
  suite->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  try {
    if (*bracket) return cmd_bracket(diagram_path, ring);
    if (*transport) return cmd_transport(targs);
    if (*selflink) return cmd_selflink(group, sl_samples, sl_seed, sl_tol, sl_format);
    if (*suite) return cmd_suite(which, seed, samples, format);
  } catch (const CalibrationFailure& e) {
    std::cerr << "calibration failure: " << e.what() << '\n';
    return kCalibration;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
