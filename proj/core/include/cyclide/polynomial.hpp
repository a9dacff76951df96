#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "cyclide/scalar.hpp"

namespace cyclide {

// Exponents of x, y, z.
using Monomial = std::array<int, 3>;

// Sparse polynomial in x, y, z with exact coefficients. Zero coefficients are
// never stored, so two polynomials are equal iff their term maps are equal.
class TrivariatePolynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  TrivariatePolynomial() = default;

  static TrivariatePolynomial constant(const Scalar& c);
  static TrivariatePolynomial variable(int axis);
  static TrivariatePolynomial monomial(const Scalar& c, Monomial exponents);

  void add_term(const Monomial& exponents, const Scalar& c);
  Scalar coefficient(const Monomial& exponents) const;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  Scalar evaluate(const Point3& p) const;
  double evaluate(const Point3d& p) const;

  TrivariatePolynomial derivative(int axis) const;
  Vec3<Scalar> gradient(const Point3& p) const;

  TrivariatePolynomial& operator+=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator-=(const TrivariatePolynomial& other);
  TrivariatePolynomial& operator*=(const Scalar& c);

  friend TrivariatePolynomial operator+(TrivariatePolynomial a, const TrivariatePolynomial& b) {
    return a += b;
  }
  friend TrivariatePolynomial operator-(TrivariatePolynomial a, const TrivariatePolynomial& b) {
    return a -= b;
  }
  friend TrivariatePolynomial operator*(TrivariatePolynomial a, const Scalar& c) { return a *= c; }
  friend TrivariatePolynomial operator*(const Scalar& c, TrivariatePolynomial a) { return a *= c; }
  friend TrivariatePolynomial operator*(const TrivariatePolynomial& a,
                                        const TrivariatePolynomial& b);

  bool operator==(const TrivariatePolynomial&) const = default;

 private:
  Terms terms_;
};

// Double-precision copy of a polynomial for the mesher and finite-difference
// checks. Coefficients are rounded once, on construction.
class FloatPolynomial {
 public:
  explicit FloatPolynomial(const TrivariatePolynomial& exact);

  double operator()(const Point3d& p) const;
  Point3d gradient(const Point3d& p) const;

 private:
  std::vector<std::pair<Monomial, double>> terms_;
  int max_degree_ = 0;
};

}  // namespace cyclide
