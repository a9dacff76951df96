#include "cyclide/cyclide_core.hpp"

#include <algorithm>

#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

using P = TrivariatePolynomial;

P var(int axis) { return P::variable(axis); }

}  // namespace

CircleFamilyVector::CircleFamilyVector(Scalar r, std::array<Scalar, 5> u, std::array<Scalar, 4> v)
    : r_(std::move(r)), u_(std::move(u)), v_(std::move(v)) {
  if (sign(r_) <= 0) {
    throw DomainError(ErrorKind::InvalidVector, "circle radius must be positive",
                      {{"r", r_}});
  }
  const bool all_zero = std::all_of(u_.begin(), u_.end(), [](const Scalar& s) { return is_zero(s); }) &&
                        std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return is_zero(s); });
  if (all_zero) {
    throw DomainError(ErrorKind::InvalidVector, "coefficient vector is zero (not a point of P^8)");
  }
}

CircleFamilyVector CircleFamilyVector::scaled(const Scalar& s) const {
  if (is_zero(s)) {
    throw DomainError(ErrorKind::PreconditionViolation, "projective rescaling by zero");
  }
  std::array<Scalar, 5> u = u_;
  std::array<Scalar, 4> v = v_;
  for (auto& x : u) x *= s;
  for (auto& x : v) x *= s;
  return {r_, u, v};
}

bool CircleFamilyVector::projectively_equal(const CircleFamilyVector& other) const {
  return r_ == other.r_ && normalize(*this) == normalize(other);
}

int DarbouxQuartic::degree() const { return to_polynomial().total_degree(); }

TrivariatePolynomial DarbouxQuartic::to_polynomial() const {
  const P x = var(0), y = var(1), z = var(2);
  const P s = x * x + y * y + z * z;
  P p = a0 * (s * s);
  p += Scalar(2) * ((b[0] * x + b[1] * y + b[2] * z) * s);
  p += c[0] * (x * x) + c[1] * (y * y) + c[2] * (z * z);
  p += Scalar(2) * (d[0] * (y * z) + d[1] * (x * z) + d[2] * (x * y));
  p += Scalar(2) * (e[0] * x + e[1] * y + e[2] * z);
  p += P::constant(f0);
  return p;
}

TrivariatePolynomial IntermediateDarboux::to_polynomial() const {
  return as_darboux().to_polynomial();
}

DarbouxQuartic IntermediateDarboux::as_darboux() const {
  return {Scalar(1), {0, 0, 0}, c, d, e, f0};
}

DarbouxQuartic expand(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  const Scalar quad = 2 * u4 - 2 * u0 * r2;

  DarbouxQuartic q;
  q.a0 = u0;
  q.b = {u1, u2, u3};
  q.c = {quad + 2 * v1, quad, quad};
  q.d = {Scalar(0), v3, v2};
  q.e = {v4 - r2 * u1, -r2 * u2, -r2 * u3};
  q.f0 = u0 * r2 * r2 - 2 * r2 * u4;
  return q;
}

bool contains_circle(const DarbouxQuartic& q, const Scalar& r) {
  if (sign(r) <= 0) {
    throw DomainError(ErrorKind::PreconditionViolation, "circle radius must be positive");
  }
  const Scalar r2 = r * r;
  // Coefficients of y^a z^b after x = 0, reduced until b <= 1.
  std::map<std::pair<int, int>, Scalar> rest;
  const TrivariatePolynomial f = q.to_polynomial();
  for (const auto& [m, c] : f.terms()) {
    if (m[0] != 0) continue;
    rest[{m[1], m[2]}] += c;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const auto [a, b] = it->first;
      if (b < 2 || is_zero(it->second)) continue;
      const Scalar c = it->second;
      it->second = 0;
      rest[{a, b - 2}] += c * r2;
      rest[{a + 2, b - 2}] -= c;
      changed = true;
      break;
    }
  }
  return std::all_of(rest.begin(), rest.end(), [](const auto& kv) { return is_zero(kv.second); });
}

IntermediateDarboux to_intermediate(const CircleFamilyVector& vec) {
  if (is_zero(vec.u(0))) {
    throw DomainError(ErrorKind::CubicInput, "u0 = 0: cubic cyclide, use the cubic path");
  }
  const CircleFamilyVector n = vec.scaled(1 / vec.u(0));
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(n);
  const Scalar r2 = r * r;
  const Scalar U0 = u1 * u1 + u2 * u2 + u3 * u3;
  const Scalar lin = U0 - 2 * u4;
  const Scalar dot = u1 * v1 + u2 * v2 + u3 * v3;

  IntermediateDarboux out;
  out.c = {2 * (u4 + v1 - r2) - u1 * u1 - U0 / 2,
           2 * (u4 - r2) - u2 * u2 - U0 / 2,
           2 * (u4 - r2) - u3 * u3 - U0 / 2};
  out.d = {-u2 * u3, v3 - u1 * u3, v2 - u1 * u2};
  out.e = {-(2 * u1 * v1 + u2 * v2 + u3 * v3 - 2 * v4 - u1 * lin) / 2,
           -(u1 * v2 - u2 * lin) / 2,
           -(u1 * v3 - u3 * lin) / 2};
  out.f0 = -3 * U0 * U0 / 16 + (U0 * (u4 + r2) + u1 * (dot - 2 * v4)) / 2 - 2 * r2 * u4 + r2 * r2;
  return out;
}

CircleFamilyVector normalize(const CircleFamilyVector& vec) {
  std::array<Scalar, 9> all;
  std::copy(vec.u().begin(), vec.u().end(), all.begin());
  std::copy(vec.v().begin(), vec.v().end(), all.begin() + 5);

  mpz_class den_lcm = 1;
  for (const auto& s : all) den_lcm = lcm(den_lcm, s.get_den());
  mpz_class content = 0;
  for (const auto& s : all) {
    const mpz_class n = s.get_num() * (den_lcm / s.get_den());
    content = gcd(content, n);
  }
  Scalar factor(den_lcm, content);
  factor.canonicalize();
  const auto first = std::find_if(all.begin(), all.end(), [](const Scalar& s) { return !is_zero(s); });
  if (sign(*first) < 0) factor = -factor;
  return vec.scaled(factor);
}

DarbouxQuartic torus_darboux(const Scalar& major, const Scalar& minor) {
  const Scalar k = major * major - minor * minor;
  const Scalar R2 = major * major;
  DarbouxQuartic q;
  q.a0 = 1;
  q.b = {0, 0, 0};
  q.c = {2 * k - 4 * R2, 2 * k - 4 * R2, 2 * k};
  q.d = {0, 0, 0};
  q.e = {0, 0, 0};
  q.f0 = k * k;
  return q;
}

}  // namespace cyclide
