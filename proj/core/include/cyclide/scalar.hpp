#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclide {

// Exact rational. GMP keeps results of arithmetic canonical (reduced,
// positive denominator). Avoid `auto` on gmpxx expressions: they are lazy
// templates that may reference temporaries.
using Scalar = mpq_class;

template <typename T>
using Vec3 = std::array<T, 3>;

using Point3 = Vec3<Scalar>;
using Point3d = Vec3<double>;

// Strict parser: "-12", "3/4", "-9/2". Rejects decimals, exponents, blanks,
// signs on the denominator and zero denominators.
Scalar parse_scalar(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }
inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

// Exact square root when both numerator and denominator are perfect squares.
std::optional<Scalar> exact_sqrt(const Scalar& value);

Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace cyclide
