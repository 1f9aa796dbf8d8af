#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shapetop {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t numerator, std::int64_t denominator);
  explicit Scalar(mpq_class value);

  /// Parses "n" or "n/d". Throws std::invalid_argument on malformed text or d == 0.
  static Scalar parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  std::string to_string() const { return value_.get_str(); }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace shapetop
