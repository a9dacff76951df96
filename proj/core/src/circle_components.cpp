#include "cyclide/circle_components.hpp"

#include <algorithm>

#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

using Rows = std::vector<std::array<Scalar, 2>>;

Rows matrix_m(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  const Scalar r4 = r2 * r2;
  const Scalar x = v4 - 2 * r2 * u1;
  const Scalar y = v1 + u4 - 2 * r2 * u0;
  return {
      {u2, v2 * x},
      {u3, v3 * x},
      {u4, v4 * x},
      {2 * u0, v2 * v2 + v3 * v3 - 4 * r2 * u1 * u1},
      {u1, 4 * r2 * u0 * v4 - 2 * r2 * (u2 * v2 + u3 * v3) - 4 * r2 * u1 * (v1 + u4)},
      {v1, 4 * r4 * (u2 * u2 + u3 * u3 + 2 * u0 * v1) - 4 * r2 * (v1 + u4) * (v1 + u4) - x * x},
      {v2, -8 * r4 * u1 * u2 - 4 * r2 * v2 * y},
      {v3, -8 * r4 * u1 * u3 - 4 * r2 * v3 * y},
      {v4, -8 * r4 * u1 * u4 - 4 * r2 * v4 * y},
  };
}

Rows matrix_l(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  return {
      {u2, v2},
      {u3, v3},
      {u4, v4},
      {u0 * v2, 2 * (u1 * v2 - u2 * v1)},
      {u0 * v3, 2 * (u1 * v3 - u3 * v1)},
      {u0 * v4, 2 * (u1 * v4 - u4 * v1)},
  };
}

Scalar minor(const Rows& m, std::size_t a, std::size_t b) {
  return m[a][0] * m[b][1] - m[b][0] * m[a][1];
}

}  // namespace

bool VillarceauWitness::equations_hold() const {
  return is_zero(r1) && is_zero(r2) && is_zero(r3) && is_zero(r4);
}

ErrorDetails VillarceauWitness::details() const {
  return {{"r1", r1}, {"r2", r2}, {"r3", r3}, {"r4", r4}, {"gap", gap}};
}

bool PrincipalWitness::n_rank_at_most_one() const {
  return is_zero(T2) && is_zero(T3) && is_zero(T4);
}

bool PrincipalWitness::member() const {
  return n_rank_at_most_one() &&
         std::all_of(minors_m.begin(), minors_m.end(), [](const Minor& m) { return is_zero(m.value); });
}

ErrorDetails PrincipalWitness::details() const {
  ErrorDetails out{{"T2", T2}, {"T3", T3}, {"T4", T4}, {"U0", U0}};
  for (const Minor& m : minors_m) {
    if (!is_zero(m.value)) out.emplace_back("M" + std::to_string(m.row_a) + std::to_string(m.row_b), m.value);
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::VillarceauDupin: return "VillarceauDupin";
    case Verdict::PrincipalDupin: return "PrincipalDupin";
    case Verdict::HornBoundary: return "HornBoundary";
    case Verdict::TouchingSpheresDegenerate: return "TouchingSpheresDegenerate";
    case Verdict::CircleDegenerate: return "CircleDegenerate";
    case Verdict::DoubleSphereDegenerate: return "DoubleSphereDegenerate";
    case Verdict::Outside: return "Outside";
  }
  return "Unknown";
}

bool is_dupin(Verdict v) {
  return v == Verdict::VillarceauDupin || v == Verdict::PrincipalDupin || v == Verdict::HornBoundary;
}

int rank_from_minors(const Rows& rows) {
  const bool zero = std::all_of(rows.begin(), rows.end(), [](const auto& row) {
    return is_zero(row[0]) && is_zero(row[1]);
  });
  if (zero) return 0;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!is_zero(minor(rows, a, b))) return 2;
    }
  }
  return 1;
}

VillarceauWitness villarceau_test(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  VillarceauWitness w;
  w.r1 = v4 - 2 * r2 * u1;
  w.r2 = v1 + 2 * u4 - 2 * r2 * u0;
  w.r3 = u2 * v2 + u3 * v3 - 2 * u1 * u4;
  w.r4 = 4 * r2 * (u1 * u1 + u2 * u2 + u3 * u3) - 4 * u4 * u4 - v2 * v2 - v3 * v3;
  w.gap = r2 * (u2 * u2 + u3 * u3) - u4 * u4;
  return w;
}

PrincipalWitness principal_test(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  PrincipalWitness w;
  w.T2 = u3 * v4 - u4 * v3;
  w.T3 = u2 * v4 - u4 * v2;
  w.T4 = u2 * v3 - u3 * v2;
  w.U0 = u1 * u1 + u2 * u2 + u3 * u3;

  const Rows m = matrix_m(vec);
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if ((b < 3) || (a >= 6)) continue;
      w.minors_m.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), minor(m, a, b)});
    }
  }
  return w;
}

DegenerateWitness degenerate_test(const CircleFamilyVector& vec) {
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  DegenerateWitness w;
  const Rows l = matrix_l(vec);
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      w.minors_l.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), minor(l, a, b)});
    }
  }
  w.rank_l = rank_from_minors(l);
  w.touch_residual = 4 * r2 * (u1 * u1 + u2 * u2 + u3 * u3) + v2 * v2 + v3 * v3 -
                     8 * v1 * (r2 * u0 - u4) - 4 * v4 * u1 - 4 * u4 * u4;
  w.u1_zero = is_zero(u1);
  w.v1_circle = v1 == 2 * r2 * u0;
  w.double_sphere = w.rank_l == 0 && u1 * u1 == 2 * u0 * v1;
  return w;
}

ComponentVerdict classify(const CircleFamilyVector& vec) {
  ComponentVerdict out{Verdict::Outside, villarceau_test(vec), principal_test(vec), degenerate_test(vec)};
  const auto& deg = out.degenerate;

  if (deg.circle()) {
    out.verdict = Verdict::CircleDegenerate;
  } else if (deg.double_sphere) {
    out.verdict = Verdict::DoubleSphereDegenerate;
  } else if (deg.touching()) {
    out.verdict = Verdict::TouchingSpheresDegenerate;
  } else if (out.villarceau.member()) {
    out.verdict = Verdict::VillarceauDupin;
  } else if (out.villarceau.horn_boundary()) {
    out.verdict = Verdict::HornBoundary;
  } else if (out.principal.member()) {
    switch (deg.rank_l) {
      case 2: out.verdict = Verdict::PrincipalDupin; break;
      case 1: out.verdict = Verdict::TouchingSpheresDegenerate; break;
      default: out.verdict = Verdict::DoubleSphereDegenerate; break;
    }
  }
  return out;
}

std::vector<CircleFamilyVector> villarceau_complete(const Scalar& r, const std::array<Scalar, 5>& u) {
  const auto& [u0, u1, u2, u3, u4] = u;
  if (is_zero(u2) && is_zero(u3)) {
    throw DomainError(ErrorKind::PreconditionViolation, "villarceau_complete needs (u2, u3) != 0",
                      {{"u2", u2}, {"u3", u3}});
  }
  if (sign(r) <= 0) {
    throw DomainError(ErrorKind::InvalidVector, "circle radius must be positive", {{"r", r}});
  }
  const Scalar r2 = r * r;
  const Scalar m = u2 * u2 + u3 * u3;
  const Scalar gap = r2 * m - u4 * u4;
  // (v2, v3) lies on the line u2 v2 + u3 v3 = c and the circle |v|² = rho2.
  const Scalar c = 2 * u1 * u4;
  const Scalar rho2 = 4 * r2 * (u1 * u1 + m) - 4 * u4 * u4;
  const Scalar disc = rho2 * m - c * c;

  if (sign(disc) < 0) {
    throw DomainError(ErrorKind::NoRealSolution, "no real (v2, v3): u4^2 > r^2 (u2^2 + u3^2)",
                      {{"discriminant", disc}, {"gap", gap}});
  }
  const auto root = exact_sqrt(disc);
  if (!root) {
    throw DomainError(ErrorKind::NonRationalSolution, "(v2, v3) is irrational",
                      {{"discriminant", disc}, {"gap", gap}});
  }

  const Scalar v1 = 2 * r2 * u0 - 2 * u4;
  const Scalar v4 = 2 * r2 * u1;
  const Scalar base2 = c * u2 / m;
  const Scalar base3 = c * u3 / m;
  const Scalar step = *root / m;

  std::vector<CircleFamilyVector> out;
  for (int s : {1, -1}) {
    const Scalar v2 = base2 - s * step * u3;
    const Scalar v3 = base3 + s * step * u2;
    out.emplace_back(r, u, std::array<Scalar, 4>{v1, v2, v3, v4});
    if (is_zero(disc)) break;
  }
  return out;
}

CircleFamilyVector representative_principal_torus(const Scalar& r, const Scalar& major) {
  if (!(sign(r) > 0 && r < major)) {
    throw DomainError(ErrorKind::PreconditionViolation, "principal torus needs 0 < r < R",
                      {{"r", r}, {"R", major}});
  }
  const Scalar R2 = major * major;
  return {r, {1, 0, -2 * major, 0, 2 * R2}, {-2 * R2, 0, 0, 0}};
}

CircleFamilyVector representative_villarceau_torus(const Scalar& r, const Scalar& b) {
  if (!(sign(b) > 0 && b < r)) {
    throw DomainError(ErrorKind::PreconditionViolation, "Villarceau torus needs 0 < b < r",
                      {{"r", r}, {"b", b}});
  }
  const Scalar w2 = r * r - b * b;
  const auto w = exact_sqrt(w2);
  if (!w) {
    throw DomainError(ErrorKind::NonRationalSolution, "sqrt(r^2 - b^2) is irrational",
                      {{"w_squared", w2}});
  }
  return {r, {1, 0, -2 * b, 0, 2 * b * b}, {2 * r * r - 4 * b * b, 0, -4 * b * *w, 0}};
}

}  // namespace cyclide
