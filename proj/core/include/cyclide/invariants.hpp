#pragma once

#include <string_view>

#include "cyclide/cyclide_core.hpp"

namespace cyclide {

enum class Smoothness { Smooth, Horn, Singular };

std::string_view to_string(Smoothness s);

// J0 > 0 smooth, J0 = 0 horn, J0 < 0 singular. Smooth cyclides have J0 <= 1/4.
struct J0Value {
  Scalar value;
  Smoothness smoothness;

  static J0Value of(Scalar value);

  bool operator==(const J0Value&) const = default;
};

struct TorusParams {
  Scalar major;
  Scalar minor;
};

// (r²/R²)(1 - r²/R²). Throws PreconditionViolation unless both radii are positive.
J0Value j0_torus(const TorusParams& p);

// 1/4 - r²v1² / (4(r²(v1² + v2² + v3²) - v4²)) on the Villarceau component or
// its horn boundary.
J0Value j0_villarceau(const CircleFamilyVector& v);

// Same invariant written in the u coordinates:
// 4g / (16g + 4v1²) with g = r²(u2² + u3²) - u4².
J0Value j0_villarceau_u_form(const CircleFamilyVector& v);

// Principal component, routed on the tangency constant λ: the compact cone
// formula for finite λ != 0, the cylinder limit for λ = 0 and the plane limit
// for λ = ∞.
J0Value j0_principal(const CircleFamilyVector& v);

// Dispatches on classify(v). On the horn boundary every applicable route is
// evaluated and the values must agree.
J0Value j0(const CircleFamilyVector& v);

}  // namespace cyclide
