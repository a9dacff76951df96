#include "cyclide/scalar.hpp"

#include <cctype>

#include "cyclide/errors.hpp"

namespace cyclide {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw DomainError(ErrorKind::ParseError,
                      "not an exact rational (expected \"p\" or \"p/q\"): \"" +
                          std::string(text) + "\"");
  }

  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      throw DomainError(ErrorKind::ParseError,
                        "zero denominator in \"" + std::string(text) + "\"");
    }
  }
  if (text.front() == '-') n = -n;

  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  Scalar v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

std::optional<Scalar> exact_sqrt(const Scalar& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n = sqrt(value.get_num());
  mpz_class d = sqrt(value.get_den());
  Scalar root(n, d);
  root.canonicalize();
  return root;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace cyclide
