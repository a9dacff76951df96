#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclide/cyclide_core.hpp"

namespace cyclide {

// Symmetric functions of the Darboux coefficients shared by the Dupin
// conditions. B0 and W3 are zero for intermediate (b = 0) inputs.
struct Aggregates {
  Scalar B0, C0, E0, W1, W2, W3, W4;
};

Aggregates aggregates(const DarbouxQuartic& q);
Aggregates aggregates(const IntermediateDarboux& q);

using NamedResiduals = std::vector<std::pair<std::string, Scalar>>;

// Necessary conditions for a quartic Dupin cyclide in intermediate form.
// Index 2 and 3 entries are the images of K1, L1, M1 under swapping the
// coordinate indices (1,2) and (1,3).
struct QuarticConditionReport {
  Scalar K1, K2, K3;
  Scalar L1, L2, L3;
  Scalar M1, M2, M3;
  Scalar N1, N2, N3;
  bool all_vanish = false;

  NamedResiduals residuals() const;
};

// Necessary conditions for a cubic Dupin cyclide (a0 = 0). Residuals have
// denominators cleared: e-residuals by 4 B0³, the f0-residual by 4 B0⁴.
struct CubicConditionReport {
  Scalar e1_residual, e2_residual, e3_residual, f0_residual;
  bool all_vanish = false;

  NamedResiduals residuals() const;
};

QuarticConditionReport quartic_dupin_conditions(const IntermediateDarboux& q);

// Throws PreconditionViolation when a0 != 0 and NotACubicCyclide when B0 = 0.
CubicConditionReport cubic_dupin_conditions(const DarbouxQuartic& q);

// Swap of coordinate indices (i, j), 0-based, applied to b, c, d, e together.
// d is indexed by the complementary axis (d1 ~ yz), so a coordinate swap
// permutes d the same way.
DarbouxQuartic permute_indices(const DarbouxQuartic& q, int i, int j);
IntermediateDarboux permute_indices(const IntermediateDarboux& q, int i, int j);

}  // namespace cyclide
