#include "cyclide/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace cyclide {

namespace {

template <typename T>
T power(const T& base, int exponent) {
  T result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

TrivariatePolynomial TrivariatePolynomial::constant(const Scalar& c) {
  return monomial(c, {0, 0, 0});
}

TrivariatePolynomial TrivariatePolynomial::variable(int axis) {
  Monomial m{0, 0, 0};
  m[axis] = 1;
  return monomial(Scalar(1), m);
}

TrivariatePolynomial TrivariatePolynomial::monomial(const Scalar& c, Monomial exponents) {
  TrivariatePolynomial p;
  p.add_term(exponents, c);
  return p;
}

void TrivariatePolynomial::add_term(const Monomial& exponents, const Scalar& c) {
  if (cyclide::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (cyclide::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar TrivariatePolynomial::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int TrivariatePolynomial::total_degree() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m[0] + m[1] + m[2]);
  return degree;
}

Scalar TrivariatePolynomial::evaluate(const Point3& p) const {
  Scalar sum = 0;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (int axis = 0; axis < 3; ++axis) term *= power(p[axis], m[axis]);
    sum += term;
  }
  return sum;
}

double TrivariatePolynomial::evaluate(const Point3d& p) const {
  return FloatPolynomial(*this)(p);
}

TrivariatePolynomial TrivariatePolynomial::derivative(int axis) const {
  TrivariatePolynomial d;
  for (const auto& [m, c] : terms_) {
    if (m[axis] == 0) continue;
    Monomial lowered = m;
    --lowered[axis];
    d.add_term(lowered, c * m[axis]);
  }
  return d;
}

Vec3<Scalar> TrivariatePolynomial::gradient(const Point3& p) const {
  return {derivative(0).evaluate(p), derivative(1).evaluate(p), derivative(2).evaluate(p)};
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator-=(const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TrivariatePolynomial& TrivariatePolynomial::operator*=(const Scalar& c) {
  if (cyclide::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  TrivariatePolynomial product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      product.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return product;
}

FloatPolynomial::FloatPolynomial(const TrivariatePolynomial& exact) {
  terms_.reserve(exact.terms().size());
  for (const auto& [m, c] : exact.terms()) {
    terms_.emplace_back(m, to_double(c));
    max_degree_ = std::max({max_degree_, m[0], m[1], m[2]});
  }
}

double FloatPolynomial::operator()(const Point3d& p) const {
  // Power tables keep evaluation at one multiply per term and axis.
  std::array<std::array<double, 16>, 3> pw{};
  const int n = std::min(max_degree_, 15);
  for (int axis = 0; axis < 3; ++axis) {
    pw[axis][0] = 1.0;
    for (int k = 1; k <= n; ++k) pw[axis][k] = pw[axis][k - 1] * p[axis];
  }
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    if (m[0] > 15 || m[1] > 15 || m[2] > 15) {
      sum += c * std::pow(p[0], m[0]) * std::pow(p[1], m[1]) * std::pow(p[2], m[2]);
    } else {
      sum += c * pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]];
    }
  }
  return sum;
}

Point3d FloatPolynomial::gradient(const Point3d& p) const {
  Point3d g{0.0, 0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    for (int axis = 0; axis < 3; ++axis) {
      if (m[axis] == 0) continue;
      double term = c * m[axis];
      for (int k = 0; k < 3; ++k) term *= std::pow(p[k], k == axis ? m[k] - 1 : m[k]);
      g[axis] += term;
    }
  }
  return g;
}

}  // namespace cyclide
