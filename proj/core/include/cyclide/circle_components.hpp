#pragma once

#include <string_view>
#include <vector>

#include "cyclide/cyclide_core.hpp"
#include "cyclide/errors.hpp"

namespace cyclide {

// Residuals of the Villarceau-component equations and the strict-inequality
// gap r²(u2² + u3²) - u4².
struct VillarceauWitness {
  Scalar r1, r2, r3, r4;
  Scalar gap;

  bool equations_hold() const;
  bool member() const { return equations_hold() && sign(gap) > 0; }
  bool horn_boundary() const { return equations_hold() && is_zero(gap); }

  // r1..r4 and gap, for error reports.
  ErrorDetails details() const;
};

// One 2x2 minor, rows 1-based as in the matrix displays.
struct Minor {
  int row_a;
  int row_b;
  Scalar value;
};

// Rank-1 test of the 3x2 matrix N = [u2 v2; u3 v3; u4 v4] and the 9x2 matrix M.
// Minors of M with both rows in 1..3 or both in 7..9 are multiples of minors
// of N and are not stored.
struct PrincipalWitness {
  Scalar T2, T3, T4;
  std::vector<Minor> minors_m;
  Scalar U0;

  bool n_rank_at_most_one() const;
  bool member() const;

  // T2..T4, U0 and the nonzero minors of M, for error reports.
  ErrorDetails details() const;
};

// Touching-spheres / circle degeneration data from the 6x2 matrix L.
struct DegenerateWitness {
  std::vector<Minor> minors_l;
  Scalar touch_residual;
  int rank_l = 0;
  bool u1_zero = false;
  bool v1_circle = false;    // v1 = 2 r² u0
  bool double_sphere = false;  // rank_l = 0 and u1² = 2 u0 v1

  bool touching() const { return rank_l <= 1 && is_zero(touch_residual); }
  bool circle() const { return rank_l == 0 && u1_zero && v1_circle; }
};

enum class Verdict {
  VillarceauDupin,
  PrincipalDupin,
  HornBoundary,
  TouchingSpheresDegenerate,
  CircleDegenerate,
  DoubleSphereDegenerate,
  Outside,
};

std::string_view to_string(Verdict v);

// Villarceau, principal and horn-boundary verdicts.
bool is_dupin(Verdict v);

struct ComponentVerdict {
  Verdict verdict;
  VillarceauWitness villarceau;
  PrincipalWitness principal;
  DegenerateWitness degenerate;
};

VillarceauWitness villarceau_test(const CircleFamilyVector& v);
PrincipalWitness principal_test(const CircleFamilyVector& v);
DegenerateWitness degenerate_test(const CircleFamilyVector& v);

// Checked in order: circle, double sphere, touching spheres, Villarceau
// (gap > 0), horn boundary (gap = 0), principal. A principal member needs
// rank(L) = 2; lower ranks are reported as degenerate.
ComponentVerdict classify(const CircleFamilyVector& v);

// All Villarceau-component vectors with the given (r, u0..u4): one for a zero
// discriminant, two otherwise. Requires (u2, u3) != (0, 0). Throws
// NoRealSolution for u4² > r²(u2² + u3²) and NonRationalSolution when the
// discriminant is not a rational square (it is reported in the details).
std::vector<CircleFamilyVector> villarceau_complete(const Scalar& r, const std::array<Scalar, 5>& u);

// Torus with Γ as a principal circle: tube radius r, major radius R (0 < r < R).
CircleFamilyVector representative_principal_torus(const Scalar& r, const Scalar& major);

// Torus of major radius r (the circle radius) and minor radius b, with Γ as a
// Villarceau circle (0 < b < r). Needs sqrt(r² - b²) rational.
CircleFamilyVector representative_villarceau_torus(const Scalar& r, const Scalar& b);

// Exact rank of a k x 2 matrix from its entries and all 2x2 minors.
int rank_from_minors(const std::vector<std::array<Scalar, 2>>& rows);

}  // namespace cyclide
