#include "skeinwb/quantum_torus.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "json.hpp"

#include "skeinwb/detail/expression_parser.hpp"
#include "skeinwb/detail/term_format.hpp"
#include "skeinwb/dual.hpp"
#include "skeinwb/errors.hpp"

namespace skeinwb {

// ---- TorusElement -------------------------------------------------------

TorusElement TorusElement::monomial(int a, int b, LaurentPoly c) {
  TorusElement p;
  p.add_term({a, b}, c);
  return p;
}

LaurentPoly TorusElement::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TorusElement::add_term(Monomial m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::operator-() const {
  TorusElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TorusElement operator*(const TorusElement& p, const TorusElement& q) {
  TorusElement r;
  for (const auto& [mp, cp] : p.terms_) {
    const auto [a, b] = mp;
    for (const auto& [mq, cq] : q.terms_) {
      const auto [c, d] = mq;
      // L^a M^b L^c M^d = t^(-2bc) L^(a+c) M^(b+d)
      r.add_term({a + c, b + d}, cp * cq * LaurentPoly::t(-2 * b * c));
    }
  }
  return r;
}

TorusElement multiply(const TorusElement& p, const TorusElement& q) { return p * q; }

// ---- CommutativeLM ------------------------------------------------------

CommutativeLM CommutativeLM::monomial(int a, int b, GaussianRational c) {
  CommutativeLM f;
  f.add_term({a, b}, c);
  return f;
}

GaussianRational CommutativeLM::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void CommutativeLM::add_term(Monomial m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommutativeLM CommutativeLM::operator-() const {
  CommutativeLM r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CommutativeLM& CommutativeLM::operator+=(const CommutativeLM& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommutativeLM& CommutativeLM::operator-=(const CommutativeLM& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommutativeLM operator*(const CommutativeLM& f, const CommutativeLM& g) {
  CommutativeLM r;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term({mf.first + mg.first, mf.second + mg.second}, cf * cg);
  return r;
}

CommutativeLM operator*(const GaussianRational& c, const CommutativeLM& f) {
  CommutativeLM r;
  for (const auto& [m, v] : f.terms_) r.add_term(m, c * v);
  return r;
}

// ---- operations ---------------------------------------------------------

TorusElement sigma(const TorusElement& p) {
  TorusElement r;
  for (const auto& [m, c] : p.terms()) r.add_term({-m.first, -m.second}, c);
  return r;
}

RSequence act(const TorusElement& p, const RSequence& f) {
  if (p.is_zero()) return RSequence{f.base, std::vector<LaurentPoly>(f.values.size())};
  int min_shift = std::numeric_limits<int>::max();
  int max_shift = std::numeric_limits<int>::min();
  for (const auto& [m, c] : p.terms()) {
    min_shift = std::min(min_shift, m.first);
    max_shift = std::max(max_shift, m.first);
  }
  int lo = f.lo() - min_shift;
  int hi = f.hi() - max_shift;
  if (f.values.empty() || hi < lo)
    throw WindowTooSmall("sequence window [" + std::to_string(f.lo()) + "," + std::to_string(f.hi()) +
                         "] too small for L-degree span [" + std::to_string(min_shift) + "," +
                         std::to_string(max_shift) + "]");
  RSequence out;
  out.base = lo;
  out.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    LaurentPoly acc;
    for (const auto& [m, c] : p.terms()) {
      const auto [a, b] = m;
      // (L^a M^b f)_n = t^(2b(n+a)) f_(n+a)
      acc += c * LaurentPoly::t(2 * b * (n + a)) * f.at(n + a);
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

CommutativeLM symbol0(const TorusElement& p) {
  CommutativeLM r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, c.at_minus_one());
  return r;
}

CommutativeLM epsilon_part(const TorusElement& p) {
  CommutativeLM r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, eval_dual_exact(c).deriv);
  return r;
}

namespace {

CommutativeLM weyl_correction(const CommutativeLM& f) {
  CommutativeLM r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, GaussianRational(m.first * m.second) * c);
  return r;
}

}  // namespace

CommutativeLM symbol1(const TorusElement& p) {
  return GaussianRational::i() * (epsilon_part(p) - weyl_correction(symbol0(p)));
}

CommutativeLM symbol1_standard(const TorusElement& p) { return GaussianRational::i() * epsilon_part(p); }

CommutativeLM poisson_bracket(const CommutativeLM& f, const CommutativeLM& g) {
  CommutativeLM r;
  for (const auto& [mf, cf] : f.terms()) {
    const auto [a, b] = mf;
    for (const auto& [mg, cg] : g.terms()) {
      const auto [c, d] = mg;
      r.add_term({a + c, b + d}, GaussianRational(2 * (b * c - a * d)) * cf * cg);
    }
  }
  return r;
}

namespace {

CommutativeLM leibniz_defect(const TorusElement& p, const TorusElement& q) {
  return symbol1(p * q) - symbol0(p) * symbol1(q) - symbol1(p) * symbol0(q);
}

}  // namespace

CommutativeLM product_rule_residual(const TorusElement& p, const TorusElement& q, const GaussianRational& c) {
  return leibniz_defect(p, q) - c * poisson_bracket(symbol0(p), symbol0(q));
}

GaussianRational calibrate_product_rule_constant(
    const std::vector<std::pair<TorusElement, TorusElement>>& pairs) {
  std::optional<GaussianRational> c;
  for (const auto& [p, q] : pairs) {
    CommutativeLM bracket = poisson_bracket(symbol0(p), symbol0(q));
    if (bracket.is_zero()) continue;
    const auto& [m, b] = *bracket.terms().begin();
    c = leibniz_defect(p, q).coeff(m) / b;
    break;
  }
  if (!c) throw CalibrationFailure("product-rule calibration needs a pair with nonzero bracket");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto r = product_rule_residual(pairs[k].first, pairs[k].second, *c);
    if (!r.is_zero())
      throw CalibrationFailure("product rule fails for pair " + std::to_string(k) + " at c = " + to_string(*c) +
                               ": residual " + to_string(r));
  }
  return *c;
}

// ---- text formats -------------------------------------------------------

namespace {

std::string lm_string(Monomial m) {
  std::string s = detail::power_string("L", m.first);
  std::string ms = detail::power_string("M", m.second);
  if (!s.empty() && !ms.empty()) return s + "*" + ms;
  return s.empty() ? ms : s;
}

}  // namespace

std::string to_string(const TorusElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string mono = lm_string(m);
    if (c.size() == 1) {
      const auto& [k, v] = *c.terms().begin();
      std::string tk = detail::power_string("t", k);
      std::string full = tk.empty() ? mono : (mono.empty() ? tk : tk + "*" + mono);
      detail::append_term(out, v, full);
    } else {
      std::string group = "(" + to_string(c) + ")";
      if (out.empty()) {
        out = mono.empty() ? group : group + "*" + mono;
      } else {
        out += " + " + (mono.empty() ? group : group + "*" + mono);
      }
    }
  }
  return out;
}

std::string to_string(const CommutativeLM& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) detail::append_term(out, c, lm_string(m));
  return out;
}

std::string to_string(const RSequence& f) {
  nlohmann::json j;
  j["base"] = f.base;
  j["values"] = nlohmann::json::array();
  for (const auto& v : f.values) j["values"].push_back(to_string(v));
  return j.dump();
}

TorusElement parse_torus(const std::string& text) {
  detail::ExpressionParser<TorusElement> parser(
      text,
      [](char sym, int e, std::size_t where) -> TorusElement {
        switch (sym) {
          case 't':
            return TorusElement(LaurentPoly::t(e));
          case 'L':
            return TorusElement::L(e);
          case 'M':
            return TorusElement::M(e);
          case 'i': {
            if (e < 0) throw ParseError("negative power of i", where);
            GaussianRational z(1);
            for (int k = 0; k < e; ++k) z *= GaussianRational::i();
            return TorusElement(LaurentPoly(z));
          }
          default:
            throw ParseError(std::string("unknown symbol '") + sym + "' in torus element", where);
        }
      },
      [](const GaussianRational& c) { return TorusElement(LaurentPoly(c)); });
  return parser.parse();
}

RSequence parse_sequence(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("sequence: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw ParseError("sequence: expected object with a \"values\" array");
  RSequence f;
  f.base = j.value("base", 0);
  for (const auto& v : j["values"]) {
    if (!v.is_string()) throw ParseError("sequence: values must be Laurent polynomial strings");
    f.values.push_back(parse_laurent(v.get<std::string>()));
  }
  return f;
}

}  // namespace skeinwb
