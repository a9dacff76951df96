#pragma once

#include <array>

#include "cyclide/polynomial.hpp"
#include "cyclide/scalar.hpp"

namespace cyclide {

// A Darboux cyclide through the circle Γ = {x = 0, y² + z² = r²}:
//
//   u0 (S - r²)² + 2 (S - r²)(u1 x + u2 y + u3 z + u4) + 2x (v1 x + v2 y + v3 z + v4) = 0,
//
// with S = x² + y² + z². The coefficients are a point of P^8; r is carried
// per vector. Construction rejects r <= 0 and the all-zero tuple.
class CircleFamilyVector {
 public:
  CircleFamilyVector(Scalar r, std::array<Scalar, 5> u, std::array<Scalar, 4> v);

  const Scalar& r() const noexcept { return r_; }
  const std::array<Scalar, 5>& u() const noexcept { return u_; }
  const std::array<Scalar, 4>& v() const noexcept { return v_; }

  // u(0)..u(4) and v(1)..v(4), indexed as in the equation above.
  const Scalar& u(int i) const { return u_.at(static_cast<std::size_t>(i)); }
  const Scalar& v(int i) const { return v_.at(static_cast<std::size_t>(i - 1)); }

  // Same circle, coefficients multiplied by s (s != 0).
  CircleFamilyVector scaled(const Scalar& s) const;

  // Equal radius and proportional coefficient tuples.
  bool projectively_equal(const CircleFamilyVector& other) const;

  bool operator==(const CircleFamilyVector&) const = default;

 private:
  Scalar r_;
  std::array<Scalar, 5> u_;
  std::array<Scalar, 4> v_;
};

// Structured-binding view: const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
struct UnpackedVector {
  const Scalar& r;
  const Scalar& u0;
  const Scalar& u1;
  const Scalar& u2;
  const Scalar& u3;
  const Scalar& u4;
  const Scalar& v1;
  const Scalar& v2;
  const Scalar& v3;
  const Scalar& v4;
};

inline UnpackedVector unpack(const CircleFamilyVector& c) {
  return {c.r(), c.u(0), c.u(1), c.u(2), c.u(3), c.u(4), c.v(1), c.v(2), c.v(3), c.v(4)};
}

// a0 S² + 2(b1 x + b2 y + b3 z) S + c1 x² + c2 y² + c3 z² + 2 d1 yz + 2 d2 xz
//   + 2 d3 xy + 2 e1 x + 2 e2 y + 2 e3 z + f0
struct DarbouxQuartic {
  Scalar a0;
  Vec3<Scalar> b;
  Vec3<Scalar> c;
  Vec3<Scalar> d;
  Vec3<Scalar> e;
  Scalar f0;

  int degree() const;
  TrivariatePolynomial to_polynomial() const;

  bool operator==(const DarbouxQuartic&) const = default;
};

// S² + c1 x² + c2 y² + c3 z² + 2 d1 yz + 2 d2 xz + 2 d3 xy + 2 e1 x + 2 e2 y + 2 e3 z + f0
struct IntermediateDarboux {
  Vec3<Scalar> c;
  Vec3<Scalar> d;
  Vec3<Scalar> e;
  Scalar f0;

  TrivariatePolynomial to_polynomial() const;
  DarbouxQuartic as_darboux() const;

  bool operator==(const IntermediateDarboux&) const = default;
};

DarbouxQuartic expand(const CircleFamilyVector& v);

// Membership of the zero set of q in the ideal (x, y² + z² - r²): restrict to
// x = 0, rewrite z² as r² - y², and test the remainder p(y) + z q(y) for zero.
bool contains_circle(const DarbouxQuartic& q, const Scalar& r);

// Divides by u0 and applies the shift that removes the cubic terms. Throws
// DomainError(CubicInput) when u0 = 0.
IntermediateDarboux to_intermediate(const CircleFamilyVector& v);

// Integer coefficients with content 1 and first nonzero coordinate positive.
CircleFamilyVector normalize(const CircleFamilyVector& v);

// The torus (S + R² - ρ²)² - 4R²(x² + y²) about the z axis.
DarbouxQuartic torus_darboux(const Scalar& major, const Scalar& minor);

}  // namespace cyclide
