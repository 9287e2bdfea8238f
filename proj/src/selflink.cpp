#include "skeinwb/selflink.hpp"

#include <stdexcept>

namespace skeinwb {

void DeformedWord::validate() const {
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].position > word.size()) throw std::invalid_argument("slot position past end of word");
    if (k > 0 && slots[k].position <= slots[k - 1].position)
      throw std::invalid_argument("slot positions must be strictly increasing");
  }
}

namespace {

/// Letters with tangents inserted; the general form used for both words and
/// concatenated loops.
struct Insertion {
  std::size_t position;
  Mat2 xi;
};

/// tr(xi A eta B) for insertions x (first) and y at positions px <= py in the
/// cyclic word `letters`.
cd mixed_partial(const std::vector<Letter>& letters, const Representation& rho, const Insertion& x,
                 const Insertion& y) {
  const Insertion& first = x.position <= y.position ? x : y;
  const Insertion& second = x.position <= y.position ? y : x;
  Mat2 a = eval_letters(letters, first.position, second.position, rho).matrix();
  Mat2 b = (eval_letters(letters, second.position, letters.size(), rho) * eval_letters(letters, 0, first.position, rho))
               .matrix();
  return (first.xi * a * second.xi * b).trace();
}

cd first_partial(const std::vector<Letter>& letters, const Representation& rho, const Insertion& x) {
  Mat2 a = (eval_letters(letters, x.position, letters.size(), rho) * eval_letters(letters, 0, x.position, rho)).matrix();
  return (x.xi * a).trace();
}

}  // namespace

SL2 deformed_holonomy(const DeformedWord& dw, const Representation& rho, const std::vector<double>& params) {
  dw.validate();
  if (params.size() != dw.slots.size()) throw std::invalid_argument("one parameter per slot expected");
  const auto& letters = dw.word.letters();
  SL2 acc;
  std::size_t next = 0;
  for (std::size_t k = 0; k <= letters.size(); ++k) {
    while (next < dw.slots.size() && dw.slots[next].position == k) {
      acc = acc * SL2(exp_sl2(params[next] * dw.slots[next].xi.matrix()));
      ++next;
    }
    if (k < letters.size()) acc = acc * eval_letters(letters, k, k + 1, rho);
  }
  return acc;
}

cd first_derivative(const DeformedWord& dw, const Representation& rho) {
  dw.validate();
  if (dw.slots.size() != 1) throw std::invalid_argument("first_derivative needs exactly one slot");
  return first_partial(dw.word.letters(), rho, {dw.slots[0].position, dw.slots[0].xi.matrix()});
}

cd hessian_pair(const DeformedWord& dw, const Representation& rho) {
  dw.validate();
  if (dw.slots.size() != 2) throw std::invalid_argument("hessian_pair needs exactly two slots");
  return mixed_partial(dw.word.letters(), rho, {dw.slots[0].position, dw.slots[0].xi.matrix()},
                       {dw.slots[1].position, dw.slots[1].xi.matrix()});
}

cd fd_first_derivative(const DeformedWord& dw, const Representation& rho, double h) {
  if (dw.slots.size() != 1) throw std::invalid_argument("fd_first_derivative needs exactly one slot");
  return (deformed_holonomy(dw, rho, {h}).trace() - deformed_holonomy(dw, rho, {-h}).trace()) / (2.0 * h);
}

cd fd_hessian_pair(const DeformedWord& dw, const Representation& rho, double h) {
  if (dw.slots.size() != 2) throw std::invalid_argument("fd_hessian_pair needs exactly two slots");
  auto tr = [&](double s, double u) { return deformed_holonomy(dw, rho, {s, u}).trace(); };
  return (tr(h, h) - tr(h, -h) - tr(-h, h) + tr(-h, -h)) / (4.0 * h * h);
}

TraceIdentityHessian trace_identity_hessian(const GroupWord& alpha, const GroupWord& beta, const Representation& rho,
                                            const LoopSlot& first, const LoopSlot& second) {
  for (const LoopSlot* s : {&first, &second}) {
    const GroupWord& w = s->loop == LoopId::Alpha ? alpha : beta;
    if (s->position > w.size()) throw std::invalid_argument("slot position past end of loop");
  }
  const std::size_t na = alpha.size();
  const std::size_t nb = beta.size();

  // tr(alpha beta): beta's slots shift by |alpha|. Ties keep argument order,
  // which matches the order along alpha beta.
  std::vector<Letter> ab = alpha.letters();
  ab.insert(ab.end(), beta.letters().begin(), beta.letters().end());
  auto in_ab = [&](const LoopSlot& s) {
    return Insertion{s.loop == LoopId::Alpha ? s.position : na + s.position, s.xi.matrix()};
  };
  Insertion x1 = in_ab(first);
  Insertion y1 = in_ab(second);
  // An alpha slot at the end of alpha and a beta slot at its start coincide;
  // the alpha insertion comes first.
  bool swap1 = x1.position == y1.position && first.loop == LoopId::Beta && second.loop == LoopId::Alpha;
  cd t_ab = swap1 ? mixed_partial(ab, rho, y1, x1) : mixed_partial(ab, rho, x1, y1);

  // tr(alpha beta^-1): a beta slot at q sits at |alpha| + |beta| - q with
  // tangent -xi, and two beta slots reverse their order.
  std::vector<Letter> abi = alpha.letters();
  GroupWord binv = beta.inverse();
  abi.insert(abi.end(), binv.letters().begin(), binv.letters().end());
  auto in_abi = [&](const LoopSlot& s) {
    if (s.loop == LoopId::Alpha) return Insertion{s.position, s.xi.matrix()};
    return Insertion{na + nb - s.position, Mat2(-s.xi.matrix())};
  };
  Insertion x2 = in_abi(first);
  Insertion y2 = in_abi(second);
  bool swap2 = false;
  if (x2.position == y2.position) {
    if (first.loop == LoopId::Beta && second.loop == LoopId::Beta) swap2 = true;
    if (first.loop == LoopId::Beta && second.loop == LoopId::Alpha) swap2 = true;
  }
  cd t_abi = swap2 ? mixed_partial(abi, rho, y2, x2) : mixed_partial(abi, rho, x2, y2);

  // tr(alpha) tr(beta) by the product rule.
  cd t_prod;
  auto loop_letters = [&](LoopId id) -> const std::vector<Letter>& {
    return id == LoopId::Alpha ? alpha.letters() : beta.letters();
  };
  if (first.loop == second.loop) {
    const GroupWord& other = first.loop == LoopId::Alpha ? beta : alpha;
    Insertion x{first.position, first.xi.matrix()};
    Insertion y{second.position, second.xi.matrix()};
    bool ordered = first.position <= second.position;
    cd h = ordered ? mixed_partial(loop_letters(first.loop), rho, x, y)
                   : mixed_partial(loop_letters(first.loop), rho, y, x);
    t_prod = h * eval_word(other, rho).trace();
  } else {
    t_prod = first_partial(loop_letters(first.loop), rho, {first.position, first.xi.matrix()}) *
             first_partial(loop_letters(second.loop), rho, {second.position, second.xi.matrix()});
  }
  TraceIdentityHessian r;
  r.value = t_ab + t_abi - t_prod;
  r.scale = 1.0 + std::abs(t_ab) + std::abs(t_abi) + std::abs(t_prod);
  return r;
}

QPair q_case_smooth(const SL2& a, const SL2& b) {
  const Mat2& am = a.matrix();
  const Mat2& bm = b.matrix();
  BilinearForm3 phi = form_matrix([&](const Mat2& xi, const Mat2& eta) { return (bm * eta * am * xi).trace(); });
  return {q_functional(phi), a.trace() * b.trace() + (a * b.inverse()).trace()};
}

QPair q_case_split(const SL2& a, const SL2& b) {
  const Mat2& am = a.matrix();
  Mat2 bi = b.inverse().matrix();
  BilinearForm3 phi = form_matrix([&](const Mat2& xi, const Mat2& eta) { return (am * xi).trace() * (bi * eta).trace(); });
  return {q_functional(phi), (a * b.inverse()).trace() - (a * b).trace()};
}

KauffmanResiduals kauffman_scalar_check(const SL2& a, const SL2& b) {
  auto chi = [](std::initializer_list<SL2> components) {
    cd acc = 1.0;
    for (const SL2& c : components) acc *= -c.trace();
    return acc;
  };
  QPair smooth = q_case_smooth(a, b);
  QPair split = q_case_split(a, b);
  KauffmanResiduals r;
  r.smooth = smooth.q - (chi({a, b}) - chi({a * b.inverse()}));
  r.split = split.q - (chi({a * b}) - chi({a * b.inverse()}));
  // A trivial component multiplies chi by -tr(Id) and the form likewise.
  SL2 id;
  const Mat2& am = a.matrix();
  const Mat2& bm = b.matrix();
  cd factor = -id.trace();
  cd q_unknot = q_functional(form_matrix([&](const Mat2& xi, const Mat2& eta) { return factor * (bm * eta * am * xi).trace(); }));
  r.unknot = q_unknot - (chi({a, b, id}) - chi({a * b.inverse(), id}));
  return r;
}

}  // namespace skeinwb
