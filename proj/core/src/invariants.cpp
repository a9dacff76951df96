#include "cyclide/invariants.hpp"

#include <optional>
#include <stdexcept>

#include "cyclide/blending.hpp"
#include "cyclide/circle_components.hpp"
#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

const Scalar kQuarter(1, 4);

Scalar checked_ratio(const Scalar& num, const Scalar& den, const char* what) {
  if (is_zero(den)) {
    throw DomainError(ErrorKind::UndefinedInvariant, std::string("J0 undefined: zero denominator in ") + what,
                      {{"denominator", den}});
  }
  return num / den;
}

void require_villarceau(const CircleFamilyVector& v) {
  const ComponentVerdict c = classify(v);
  if (c.verdict != Verdict::VillarceauDupin && c.verdict != Verdict::HornBoundary) {
    throw DomainError(ErrorKind::ComponentMismatch,
                      "Villarceau J0 needs a Villarceau member, got " + std::string(to_string(c.verdict)),
                      c.villarceau.details());
  }
}

}  // namespace

std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::Horn: return "horn";
    case Smoothness::Singular: return "singular";
  }
  return "unknown";
}

J0Value J0Value::of(Scalar value) {
  const int s = sign(value);
  const Smoothness kind = s > 0 ? Smoothness::Smooth : (s == 0 ? Smoothness::Horn : Smoothness::Singular);
  return {std::move(value), kind};
}

J0Value j0_torus(const TorusParams& p) {
  if (sign(p.major) <= 0 || sign(p.minor) <= 0) {
    throw DomainError(ErrorKind::PreconditionViolation, "torus radii must be positive",
                      {{"major", p.major}, {"minor", p.minor}});
  }
  const Scalar q = (p.minor * p.minor) / (p.major * p.major);
  return J0Value::of(q * (1 - q));
}

J0Value j0_villarceau(const CircleFamilyVector& vec) {
  require_villarceau(vec);
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;
  const Scalar den = 4 * (r2 * (v1 * v1 + v2 * v2 + v3 * v3) - v4 * v4);
  return J0Value::of(kQuarter - checked_ratio(r2 * v1 * v1, den, "Villarceau formula"));
}

J0Value j0_villarceau_u_form(const CircleFamilyVector& vec) {
  require_villarceau(vec);
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar g = r * r * (u2 * u2 + u3 * u3) - u4 * u4;
  return J0Value::of(checked_ratio(4 * g, 16 * g + 4 * v1 * v1, "Villarceau u-form"));
}

J0Value j0_principal(const CircleFamilyVector& vec) {
  const PrincipalWitness w = principal_test(vec);
  if (!w.member()) {
    throw DomainError(ErrorKind::ComponentMismatch, "principal J0 needs a principal member", w.details());
  }
  const ConeParameter lambda = tangency_constant(vec);
  const auto& [r, u0, u1, u2, u3, u4, v1, v2, v3, v4] = unpack(vec);
  const Scalar r2 = r * r;

  switch (lambda.kind()) {
    case ConeParameter::Kind::Finite: {
      const Scalar& l = lambda.value();
      if (is_zero(l)) {
        const Scalar num = 4 * r2 * u0 - 4 * u4 - 3 * v1;
        return J0Value::of(kQuarter - checked_ratio(num * num, 4 * v1 * v1, "cylinder formula"));
      }
      const Scalar l2 = l * l;
      const Scalar num = 4 * r2 * r2 * l * u0 - 2 * r2 * (l2 + 6 * r2) * u1 + l * (l2 + 2 * r2) * u4;
      const Scalar base = 2 * r2 * l * u0 - 2 * r2 * u1 - l * u4;
      return J0Value::of(kQuarter -
                         checked_ratio(num * num, 16 * r2 * r2 * base * base, "cone formula"));
    }
    case ConeParameter::Kind::Infinite: {
      const Scalar num = 3 * r2 * u0 - v1;
      return J0Value::of(kQuarter -
                         checked_ratio(num * num, 4 * r2 * r2 * u0 * u0, "plane formula"));
    }
    default:
      throw DomainError(ErrorKind::ComponentMismatch,
                        "principal J0 needs a constant tangency function, got " + to_string(lambda));
  }
}

J0Value j0(const CircleFamilyVector& v) {
  const ComponentVerdict c = classify(v);
  switch (c.verdict) {
    case Verdict::VillarceauDupin: return j0_villarceau(v);
    case Verdict::PrincipalDupin: return j0_principal(v);
    case Verdict::HornBoundary: {
      std::optional<J0Value> result;
      auto merge = [&](const J0Value& value) {
        if (result && *result != value) {
          throw std::logic_error("J0 routes disagree on a horn-boundary vector");
        }
        result = value;
      };
      // A route may have a vanishing denominator where another does not;
      // the defined ones must agree.
      auto secondary = [&](auto&& route) {
        try {
          merge(route(v));
        } catch (const DomainError& e) {
          if (e.kind() != ErrorKind::UndefinedInvariant) throw;
        }
      };
      secondary(j0_villarceau);
      secondary(j0_villarceau_u_form);
      if (c.principal.member() && tangency_constant(v).kind() != ConeParameter::Kind::NonConstant) {
        secondary(j0_principal);
      }
      if (!result) {
        throw DomainError(ErrorKind::UndefinedInvariant, "J0 undefined on every route");
      }
      return *result;
    }
    default:
      throw DomainError(ErrorKind::ComponentMismatch,
                        "J0 needs a Dupin verdict, got " + std::string(to_string(c.verdict)));
  }
}

}  // namespace cyclide
