#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cyclide/cyclide_core.hpp"

namespace cyclide {

// F(y, z) = (v2 y + v3 z + v4) / (u2 y + u3 z + u4), restricted to Γ. Two
// cyclides through Γ blend smoothly iff their F agree on Γ.
struct TangencyFunction {
  Vec3<Scalar> numerator;    // v2, v3, v4
  Vec3<Scalar> denominator;  // u2, u3, u4

  // 0/0 on all of Γ: the cyclide is singular along the circle.
  bool indeterminate() const;
};

TangencyFunction tangency_function(const CircleFamilyVector& v);

// Value of F when it is constant on Γ.
class ConeParameter {
 public:
  enum class Kind { Finite, Infinite, NonConstant, Indeterminate };

  static ConeParameter finite(Scalar lambda) { return ConeParameter(Kind::Finite, std::move(lambda)); }
  static ConeParameter infinite() { return ConeParameter(Kind::Infinite, 0); }
  static ConeParameter non_constant() { return ConeParameter(Kind::NonConstant, 0); }
  static ConeParameter indeterminate() { return ConeParameter(Kind::Indeterminate, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  // Only meaningful for Kind::Finite.
  const Scalar& value() const noexcept { return value_; }

  bool operator==(const ConeParameter&) const = default;

 private:
  ConeParameter(Kind kind, Scalar value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  Scalar value_;
};

std::string to_string(const ConeParameter& p);

// Envelope of the tangent planes along Γ: y² + z² = (r - λx/(2r))² for
// finite λ, the plane x = 0 for λ = ∞, and an unsupported quartic otherwise.
struct EnvelopeSurface {
  enum class Kind { Cone, Cylinder, Plane, Quartic };
  Kind kind;
  ConeParameter lambda;
  std::optional<TrivariatePolynomial> implicit;  // absent for Quartic
};

std::string_view to_string(EnvelopeSurface::Kind kind);

// Cross-multiplied F_a - F_b reduced modulo y² + z² - r². Throws
// PreconditionViolation for different radii and BothSidesDegenerate when
// both sides have F = 0/0 identically on Γ. A single 0/0 side makes the
// cross product vanish, so the result is true.
bool blend_check(const CircleFamilyVector& a, const CircleFamilyVector& b);

ConeParameter tangency_constant(const CircleFamilyVector& v);

EnvelopeSurface envelope(const CircleFamilyVector& v);

// Principal-component member touching the cone with parameter λ along Γ.
// u4 and v1..v4 are solved linearly; requires λ != 0 and u0 != 0.
CircleFamilyVector cone_family_solve(const Scalar& r, const Scalar& lambda, const Scalar& u0,
                                     const Scalar& u1, const Scalar& u2, const Scalar& u3);

// Members touching the cylinder y² + z² = r²: u1 = v2 = v3 = v4 = 0 and v1 a
// root of 2r²u0 v1 + r²(u2² + u3²) - (v1 + u4)² = 0. Larger root first.
std::vector<CircleFamilyVector> cylinder_family_solve(const Scalar& r, const Scalar& u0,
                                                      const Scalar& u2, const Scalar& u3,
                                                      const Scalar& u4);

// Members touching the plane x = 0 along Γ. Requires u0 != 0 (the cubic
// members of this family are reducible).
CircleFamilyVector plane_family_solve(const Scalar& r, const Scalar& u0, const Scalar& u1,
                                      const Scalar& v2, const Scalar& v3);

// The two torus configurations inside the principal component: CaseI when Γ
// wraps the tube with a tangent cylinder, CaseII when Γ wraps the hole.
enum class TorusCase { CaseI, CaseII };

std::string_view to_string(TorusCase c);

// Requires principal_test(v).member().
std::optional<TorusCase> torus_recognize(const CircleFamilyVector& v);

// u0 += t, v1 += 2r²t. Requires a VillarceauDupin input.
CircleFamilyVector villarceau_pencil(const CircleFamilyVector& v, const Scalar& t);

// Left-hand side of the fourth cone-family equation as used by the solver:
// 4r²u1(λu0 - u1) + λ²(u2² + u3²) - 2λ²u0u4.
Scalar cone_fourth_equation(const CircleFamilyVector& v, const Scalar& lambda);

// Fifth cone-family equation:
// 16r⁴(λu0 - u1)² + 4λ²r²u1² - λ²(λ² + 4r²)(u2² + u3²) - 8λ²r²u0v1.
Scalar cone_fifth_equation(const CircleFamilyVector& v, const Scalar& lambda);

}  // namespace cyclide
