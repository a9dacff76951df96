#include "cyclide/blending.hpp"

#include "cyclide/circle_components.hpp"
#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

bool all_zero(const Vec3<Scalar>& a) { return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]); }

// Product of the linear forms a·(y, z, 1) and b·(y, z, 1) as coefficients of
// (y², yz, z², y, z, 1).
std::array<Scalar, 6> product(const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  return {a[0] * b[0],
          a[0] * b[1] + a[1] * b[0],
          a[1] * b[1],
          a[0] * b[2] + a[2] * b[0],
          a[1] * b[2] + a[2] * b[1],
          a[2] * b[2]};
}

}  // namespace

bool TangencyFunction::indeterminate() const { return all_zero(numerator) && all_zero(denominator); }

TangencyFunction tangency_function(const CircleFamilyVector& v) {
  return {{v.v(2), v.v(3), v.v(4)}, {v.u(2), v.u(3), v.u(4)}};
}

std::string to_string(const ConeParameter& p) {
  switch (p.kind()) {
    case ConeParameter::Kind::Finite: return to_string(p.value());
    case ConeParameter::Kind::Infinite: return "inf";
    case ConeParameter::Kind::NonConstant: return "nonconstant";
    case ConeParameter::Kind::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string_view to_string(EnvelopeSurface::Kind kind) {
  switch (kind) {
    case EnvelopeSurface::Kind::Cone: return "cone";
    case EnvelopeSurface::Kind::Cylinder: return "cylinder";
    case EnvelopeSurface::Kind::Plane: return "plane";
    case EnvelopeSurface::Kind::Quartic: return "quartic";
  }
  return "unknown";
}

std::string_view to_string(TorusCase c) { return c == TorusCase::CaseI ? "CaseI" : "CaseII"; }

bool blend_check(const CircleFamilyVector& a, const CircleFamilyVector& b) {
  if (a.r() != b.r()) {
    throw DomainError(ErrorKind::PreconditionViolation, "blend_check needs a common circle",
                      {{"r_a", a.r()}, {"r_b", b.r()}});
  }
  const TangencyFunction fa = tangency_function(a);
  const TangencyFunction fb = tangency_function(b);
  if (fa.indeterminate() && fb.indeterminate()) {
    throw DomainError(ErrorKind::BothSidesDegenerate,
                      "both tangency functions are 0/0 on the whole circle (surfaces singular along it)");
  }
  const auto lhs = product(fa.numerator, fb.denominator);
  const auto rhs = product(fb.numerator, fa.denominator);
  std::array<Scalar, 6> diff;
  for (std::size_t i = 0; i < 6; ++i) diff[i] = lhs[i] - rhs[i];
  const auto& [yy, yz, zz, y, z, one] = diff;

  // z² -> r² - y²; {y², yz, y, z, 1} is a basis of the remainders on Γ.
  const Scalar r2 = a.r() * a.r();
  return is_zero(yy - zz) && is_zero(yz) && is_zero(y) && is_zero(z) && is_zero(one + zz * r2);
}

ConeParameter tangency_constant(const CircleFamilyVector& v) {
  const TangencyFunction f = tangency_function(v);
  if (f.indeterminate()) return ConeParameter::indeterminate();
  if (all_zero(f.denominator)) return ConeParameter::infinite();
  const PrincipalWitness w = principal_test(v);
  if (!w.n_rank_at_most_one()) return ConeParameter::non_constant();

  std::optional<Scalar> lambda;
  for (std::size_t i = 0; i < 3; ++i) {
    if (is_zero(f.denominator[i])) continue;
    const Scalar ratio = f.numerator[i] / f.denominator[i];
    if (lambda && *lambda != ratio) {
      throw std::logic_error("rank(N) <= 1 but the ratios v_i/u_i differ");
    }
    lambda = ratio;
  }
  return ConeParameter::finite(*lambda);
}

EnvelopeSurface envelope(const CircleFamilyVector& v) {
  const ConeParameter lambda = tangency_constant(v);
  using P = TrivariatePolynomial;
  const P x = P::variable(0), y = P::variable(1), z = P::variable(2);
  switch (lambda.kind()) {
    case ConeParameter::Kind::Finite: {
      const Scalar& r = v.r();
      // y² + z² - (r - λx/(2r))²
      const P radius = P::constant(r) - (lambda.value() / (2 * r)) * x;
      P eq = y * y + z * z - radius * radius;
      const auto kind = is_zero(lambda.value()) ? EnvelopeSurface::Kind::Cylinder
                                                : EnvelopeSurface::Kind::Cone;
      return {kind, lambda, std::move(eq)};
    }
    case ConeParameter::Kind::Infinite:
      return {EnvelopeSurface::Kind::Plane, lambda, x};
    default:
      return {EnvelopeSurface::Kind::Quartic, lambda, std::nullopt};
  }
}

Scalar cone_fourth_equation(const CircleFamilyVector& vec, const Scalar& lambda) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar l2 = lambda * lambda;
  return 4 * r * r * u1 * (lambda * u0 - u1) + l2 * (u2 * u2 + u3 * u3) - 2 * l2 * u0 * u4;
}

Scalar cone_fifth_equation(const CircleFamilyVector& vec, const Scalar& lambda) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  const Scalar l2 = lambda * lambda;
  const Scalar k = lambda * u0 - u1;
  return 16 * r2 * r2 * k * k + 4 * l2 * r2 * u1 * u1 - l2 * (l2 + 4 * r2) * (u2 * u2 + u3 * u3) -
         8 * l2 * r2 * u0 * v1;
}

CircleFamilyVector cone_family_solve(const Scalar& r, const Scalar& lambda, const Scalar& u0,
                                     const Scalar& u1, const Scalar& u2, const Scalar& u3) {
  if (is_zero(lambda) || is_zero(u0)) {
    throw DomainError(ErrorKind::PreconditionViolation, "cone family needs lambda != 0 and u0 != 0",
                      {{"lambda", lambda}, {"u0", u0}});
  }
  const Scalar r2 = r * r;
  const Scalar l2 = lambda * lambda;
  const Scalar m = u2 * u2 + u3 * u3;
  const Scalar k = lambda * u0 - u1;
  const Scalar u4 = (4 * r2 * u1 * k + l2 * m) / (2 * l2 * u0);
  const Scalar v1 = (16 * r2 * r2 * k * k + 4 * l2 * r2 * u1 * u1 - l2 * (l2 + 4 * r2) * m) /
                    (8 * l2 * r2 * u0);
  return {r, {u0, u1, u2, u3, u4}, {v1, lambda * u2, lambda * u3, lambda * u4}};
}

std::vector<CircleFamilyVector> cylinder_family_solve(const Scalar& r, const Scalar& u0,
                                                      const Scalar& u2, const Scalar& u3,
                                                      const Scalar& u4) {
  const Scalar r2 = r * r;
  const Scalar m = u2 * u2 + u3 * u3;
  // v1² - 2(r²u0 - u4) v1 - (r²m - u4²) = 0
  const Scalar half_b = r2 * u0 - u4;
  const Scalar disc = half_b * half_b + r2 * m - u4 * u4;
  if (sign(disc) < 0) {
    throw DomainError(ErrorKind::NoRealSolution, "cylinder family: negative discriminant",
                      {{"discriminant", disc}});
  }
  const auto root = exact_sqrt(disc);
  if (!root) {
    throw DomainError(ErrorKind::NonRationalSolution, "cylinder family: irrational v1",
                      {{"discriminant", disc}});
  }
  std::vector<CircleFamilyVector> out;
  for (int s : {1, -1}) {
    const Scalar v1 = half_b + s * *root;
    out.emplace_back(r, std::array<Scalar, 5>{u0, 0, u2, u3, u4}, std::array<Scalar, 4>{v1, 0, 0, 0});
    if (is_zero(disc)) break;
  }
  return out;
}

CircleFamilyVector plane_family_solve(const Scalar& r, const Scalar& u0, const Scalar& u1,
                                      const Scalar& v2, const Scalar& v3) {
  if (is_zero(u0)) {
    throw DomainError(ErrorKind::PreconditionViolation,
                      "plane family needs u0 != 0 (cubic members are reducible)");
  }
  const Scalar r2 = r * r;
  const Scalar v1 = (16 * r2 * r2 * u0 * u0 + 4 * r2 * u1 * u1 - (v2 * v2 + v3 * v3)) / (8 * r2 * u0);
  return {r, {u0, u1, 0, 0, 0}, {v1, v2, v3, 2 * r2 * u1}};
}

std::optional<TorusCase> torus_recognize(const CircleFamilyVector& vec) {
  const PrincipalWitness w = principal_test(vec);
  if (!w.member()) {
    throw DomainError(ErrorKind::ComponentMismatch, "torus_recognize needs a principal member", w.details());
  }
  if (is_zero(vec.u(0))) return std::nullopt;
  const CircleFamilyVector n = vec.scaled(1 / vec.u(0));
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(n);
  const Scalar r2 = r * r;

  if (u2 * u2 + u3 * u3 == 2 * u4 && v1 == -u4 && is_zero(v2) && is_zero(v3) && is_zero(v4)) {
    return TorusCase::CaseI;
  }

  const ConeParameter lambda = tangency_constant(n);
  if (!lambda.is_finite() || is_zero(lambda.value())) return std::nullopt;
  const Scalar& l = lambda.value();
  const Scalar l2 = l * l;
  if (!(is_zero(u2) && is_zero(u3) && is_zero(v2) && is_zero(v3))) return std::nullopt;
  const Scalar want_u4 = 2 * r2 * u1 * (l - u1) / l2;
  const Scalar want_v1 = (l2 * u1 * u1 + 4 * r2 * (l - u1) * (l - u1)) / (2 * l2);
  if (u4 == want_u4 && v1 == want_v1 && v4 == l * want_u4) return TorusCase::CaseII;
  return std::nullopt;
}

CircleFamilyVector villarceau_pencil(const CircleFamilyVector& vec, const Scalar& t) {
  const ComponentVerdict verdict = classify(vec);
  if (verdict.verdict != Verdict::VillarceauDupin) {
    throw DomainError(ErrorKind::ComponentMismatch, "pencil needs a Villarceau-component member",
                      verdict.villarceau.details());
  }
  std::array<Scalar, 5> u = vec.u();
  std::array<Scalar, 4> v = vec.v();
  u[0] += t;
  v[0] += 2 * vec.r() * vec.r() * t;
  return {vec.r(), u, v};
}

}  // namespace cyclide
