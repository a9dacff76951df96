#include "cyclide/dupin_conditions.hpp"

#include <utility>

#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

struct Coefficients {
  const Vec3<Scalar>& b;
  const Vec3<Scalar>& c;
  const Vec3<Scalar>& d;
  const Vec3<Scalar>& e;
  const Scalar& f0;
};

Aggregates compute_aggregates(const Coefficients& k) {
  const auto& [b1, b2, b3] = k.b;
  const auto& [c1, c2, c3] = k.c;
  const auto& [d1, d2, d3] = k.d;
  const auto& [e1, e2, e3] = k.e;
  Aggregates a;
  a.B0 = b1 * b1 + b2 * b2 + b3 * b3;
  a.C0 = c1 + c2 + c3;
  a.E0 = e1 * e1 + e2 * e2 + e3 * e3;
  a.W1 = c1 * c2 + c1 * c3 + c2 * c3 - d1 * d1 - d2 * d2 - d3 * d3;
  a.W2 = c1 * c2 * c3 + 2 * d1 * d2 * d3 - c1 * d1 * d1 - c2 * d2 * d2 - c3 * d3 * d3;
  a.W3 = b1 * b1 * c1 + b2 * b2 * c2 + b3 * b3 * c3 + 2 * b2 * b3 * d1 + 2 * b1 * b3 * d2 +
         2 * b1 * b2 * d3;
  a.W4 = c1 * e1 * e1 + c2 * e2 * e2 + c3 * e3 * e3 + 2 * d1 * e2 * e3 + 2 * d2 * e1 * e3 +
         2 * d3 * e1 * e2;
  return a;
}

template <typename T>
Vec3<T> swapped(Vec3<T> v, int i, int j) {
  std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
  return v;
}

struct KLM {
  Scalar K, L, M;
};

// K1, L1, M1 of the intermediate form. The index-permuted images are obtained
// by calling this on permuted coefficients; the aggregates are invariant.
KLM klm(const IntermediateDarboux& q, const Aggregates& a) {
  const auto& [c1, c2, c3] = q.c;
  const auto& [d1, d2, d3] = q.d;
  const auto& [e1, e2, e3] = q.e;
  const Scalar& f0 = q.f0;
  const Scalar w = a.W1 + 4 * f0;
  KLM out;
  out.K = (c3 - c2) * e2 * e3 + d1 * (e2 * e2 - e3 * e3) + (d2 * e2 - d3 * e3) * e1;
  out.L = (w - (c2 + c3) * (c2 + c3) - d2 * d2 - d3 * d3) * e1 +
          (a.C0 * d3 + c3 * d3 - d1 * d2) * e2 + (a.C0 * d2 + c2 * d2 - d1 * d3) * e3;
  out.M = 2 * (c1 * e1 + d3 * e2 + d2 * e3) * w + e1 * (a.W2 - a.C0 * a.W1 - 4 * a.E0);
  return out;
}

// B0³ E1, a polynomial in b, c, d.
Scalar cleared_E1(const Vec3<Scalar>& b, const Vec3<Scalar>& c, const Vec3<Scalar>& d,
                  const Aggregates& a) {
  const auto& [b1, b2, b3] = b;
  const auto& [c1, c2, c3] = c;
  const auto& [d1, d2, d3] = d;
  const Scalar& B0 = a.B0;
  const Scalar shear = b3 * d2 + b2 * d3;
  const Scalar lead = a.W3 - (c2 + c3) * B0;
  Scalar sum = -b1 * lead * lead;
  sum += 2 * b1 * b1 * B0 * (b3 * c3 * d2 + b2 * c2 * d3);
  sum -= 4 * b1 * B0 * shear * shear;
  sum += 2 * B0 * shear * (b2 * b2 * c1 + b3 * b3 * c1 - 2 * b2 * b3 * d1);
  sum -= 2 * B0 * b2 * b3 * (c2 - c3) * (b2 * d2 - b3 * d3);
  sum += b1 * B0 * B0 * ((c1 - c2) * (c1 - c3) - d1 * d1 + d2 * d2 + d3 * d3);
  sum += 2 * d1 * B0 * B0 * (b2 * d2 + b3 * d3);
  return sum;
}

}  // namespace

Aggregates aggregates(const DarbouxQuartic& q) {
  return compute_aggregates({q.b, q.c, q.d, q.e, q.f0});
}

Aggregates aggregates(const IntermediateDarboux& q) {
  static const Vec3<Scalar> zero{0, 0, 0};
  return compute_aggregates({zero, q.c, q.d, q.e, q.f0});
}

DarbouxQuartic permute_indices(const DarbouxQuartic& q, int i, int j) {
  return {q.a0, swapped(q.b, i, j), swapped(q.c, i, j), swapped(q.d, i, j), swapped(q.e, i, j),
          q.f0};
}

IntermediateDarboux permute_indices(const IntermediateDarboux& q, int i, int j) {
  return {swapped(q.c, i, j), swapped(q.d, i, j), swapped(q.e, i, j), q.f0};
}

NamedResiduals QuarticConditionReport::residuals() const {
  return {{"K1", K1}, {"K2", K2}, {"K3", K3}, {"L1", L1}, {"L2", L2}, {"L3", L3},
          {"M1", M1}, {"M2", M2}, {"M3", M3}, {"N1", N1}, {"N2", N2}, {"N3", N3}};
}

NamedResiduals CubicConditionReport::residuals() const {
  return {{"e1", e1_residual}, {"e2", e2_residual}, {"e3", e3_residual}, {"f0", f0_residual}};
}

QuarticConditionReport quartic_dupin_conditions(const IntermediateDarboux& q) {
  const Aggregates a = aggregates(q);
  const Scalar& f0 = q.f0;
  const Scalar& C0 = a.C0;
  const Scalar w = a.W1 + 4 * f0;

  const KLM base = klm(q, a);
  const KLM s12 = klm(permute_indices(q, 0, 1), a);
  const KLM s13 = klm(permute_indices(q, 0, 2), a);

  QuarticConditionReport rep;
  rep.K1 = base.K;
  rep.K2 = s12.K;
  rep.K3 = s13.K;
  rep.L1 = base.L;
  rep.L2 = s12.L;
  rep.L3 = s13.L;
  rep.M1 = base.M;
  rep.M2 = s12.M;
  rep.M3 = s13.M;

  const Scalar t = a.W2 + C0 * a.W1 + 8 * C0 * f0 - 4 * a.E0;
  rep.N1 = (4 * a.W1 + 12 * f0 - 3 * C0 * C0) * w - 2 * C0 * (a.W2 - C0 * a.W1 - 6 * a.E0) -
           4 * a.W4;
  rep.N2 = 4 * (a.W2 - C0 * a.W1 - 2 * a.E0) * w + (C0 * C0 - 4 * f0) * t;
  rep.N3 = t * t - 4 * w * w * w;

  rep.all_vanish = true;
  for (const auto& [name, value] : rep.residuals()) rep.all_vanish = rep.all_vanish && is_zero(value);
  return rep;
}

CubicConditionReport cubic_dupin_conditions(const DarbouxQuartic& q) {
  if (!is_zero(q.a0)) {
    throw DomainError(ErrorKind::PreconditionViolation, "cubic conditions need a0 = 0",
                      {{"a0", q.a0}});
  }
  const Aggregates a = aggregates(q);
  if (is_zero(a.B0)) {
    throw DomainError(ErrorKind::NotACubicCyclide, "no cubic terms (B0 = 0)");
  }
  const Scalar& B0 = a.B0;
  const Scalar B03 = B0 * B0 * B0;

  CubicConditionReport rep;
  const DarbouxQuartic q12 = permute_indices(q, 0, 1);
  const DarbouxQuartic q13 = permute_indices(q, 0, 2);
  rep.e1_residual = 4 * B03 * q.e[0] - cleared_E1(q.b, q.c, q.d, a);
  rep.e2_residual = 4 * B03 * q.e[1] - cleared_E1(q12.b, q12.c, q12.d, a);
  rep.e3_residual = 4 * B03 * q.e[2] - cleared_E1(q13.b, q13.c, q13.d, a);

  const Scalar lead = a.W3 - a.C0 * B0;
  rep.f0_residual = 4 * B03 * B0 * q.f0 - a.W3 * lead * lead - a.W3 * a.W1 * B0 * B0 -
                    (a.W2 - a.C0 * a.W1) * B03;

  rep.all_vanish = is_zero(rep.e1_residual) && is_zero(rep.e2_residual) &&
                   is_zero(rep.e3_residual) && is_zero(rep.f0_residual);
  return rep;
}

}  // namespace cyclide
