#pragma once

#include <array>
#include <vector>

#include "cyclide/cyclide_core.hpp"
#include "generators.hpp"
#include "sympoly.hpp"

namespace cyclide::testing {

using Matrix2 = std::vector<std::array<Scalar, 2>>;

// The circle-family equation built directly in x, y, z.
SymPoly cyclide_poly(const CircleFamilyVector& v);

// Monic equation after the translation that kills the cubic terms, computed
// by substitution (requires u0 != 0).
SymPoly shifted_monic(const CircleFamilyVector& v);

// Matrix displays of the component theorems, transcribed independently.
Matrix2 matrix_n(const CircleFamilyVector& v);
Matrix2 matrix_m(const CircleFamilyVector& v);
Matrix2 matrix_l(const CircleFamilyVector& v);

// Rank by Gaussian elimination.
int elimination_rank(Matrix2 rows);

// Rank of R·A for `trials` random rational 2 x k matrices R; the maximum over
// trials equals rank(A) unless every R is unlucky.
int projected_rank(const Matrix2& rows, Rng& rng, int trials = 3);

Vec3<Scalar> cross(const Vec3<Scalar>& a, const Vec3<Scalar>& b);

}  // namespace cyclide::testing
