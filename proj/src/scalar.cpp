#include "shapetop/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace shapetop {

static_assert(sizeof(long) == sizeof(std::int64_t), "gmp long constructors must be 64-bit");

Scalar::Scalar(std::int64_t value) : value_(static_cast<long>(value)) {}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator)
    : value_(static_cast<long>(numerator), static_cast<long>(denominator == 0 ? 1 : denominator)) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') {
    s.remove_prefix(1);
  }
  return mpz_class(std::string(s));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not a rational literal: " + std::string(text));
    }
    return Scalar(mpq_class(to_mpz(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational literal: " + std::string(text));
  }
  mpz_class d = to_mpz(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return Scalar(mpq_class(to_mpz(num), d));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace shapetop
