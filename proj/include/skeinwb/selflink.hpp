#pragma once

// First and second derivatives of holonomy traces under insertions of
// exp(s xi) into a word, the trace-identity Hessian, and the Q-functional
// identities behind the scalar Kauffman relations.

#include <vector>

#include "skeinwb/sl2.hpp"
#include "skeinwb/word.hpp"

namespace skeinwb {

/// exp(s xi) inserted just before letter `position` (0 <= position <= size).
struct Slot {
  std::size_t position = 0;
  Sl2Vec xi;
};

struct DeformedWord {
  GroupWord word;
  std::vector<Slot> slots;

  /// Throws std::invalid_argument unless positions are strictly increasing
  /// and within the word.
  void validate() const;
};

/// Holonomy of the word with exp(params[k] xi_k) inserted at each slot.
SL2 deformed_holonomy(const DeformedWord& dw, const Representation& rho, const std::vector<double>& params);

/// tr(xi A), A the holonomy read from the slot around the loop. One slot.
cd first_derivative(const DeformedWord& dw, const Representation& rho);
/// tr(xi A eta B), A from the first slot to the second, B back. Two slots.
cd hessian_pair(const DeformedWord& dw, const Representation& rho);

cd fd_first_derivative(const DeformedWord& dw, const Representation& rho, double h = 1e-4);
/// Central mixed partial of tr at the origin.
cd fd_hessian_pair(const DeformedWord& dw, const Representation& rho, double h = 1e-4);

enum class LoopId { Alpha, Beta };

struct LoopSlot {
  LoopId loop = LoopId::Alpha;
  std::size_t position = 0;
  Sl2Vec xi;
};

struct TraceIdentityHessian {
  cd value;   ///< mixed partial of tr(ab) + tr(ab^-1) - tr(a) tr(b)
  double scale = 1.0;  ///< 1 + magnitudes of the three contributions
};

/// Both slots deform the pair of loops (alpha, beta) based at a common point.
/// The first slot's parameter is differentiated first; slots at the same
/// position of the same loop are inserted in argument order.
TraceIdentityHessian trace_identity_hessian(const GroupWord& alpha, const GroupWord& beta, const Representation& rho,
                                            const LoopSlot& first, const LoopSlot& second);

struct QPair {
  cd q;       ///< Q of the bilinear form
  cd closed;  ///< trace closed form
};

/// phi(xi, eta) = tr(B eta A xi); closed form tr A tr B + tr AB^-1.
QPair q_case_smooth(const SL2& a, const SL2& b);
/// phi(xi, eta) = tr(A xi) tr(B^-1 eta); closed form tr AB^-1 - tr AB.
QPair q_case_split(const SL2& a, const SL2& b);

struct KauffmanResiduals {
  cd smooth;  ///< Q - (chi(L0) - chi(Linf)) with L0 = two loops A, B and Linf = AB^-1
  cd split;   ///< Q - (chi(L0) - chi(Linf)) with L0 = AB and Linf = AB^-1
  cd unknot;  ///< the smooth case after adding a trivial component
};

/// chi of a link is the product of -tr over its components.
KauffmanResiduals kauffman_scalar_check(const SL2& a, const SL2& b);

}  // namespace skeinwb
