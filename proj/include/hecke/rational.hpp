#ifndef HECKE_RATIONAL_HPP
#define HECKE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable input: bad JSON, missing or mistyped fields, unparseable numbers.
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed but invalid input: broken tables, indices out of range,
/// violated preconditions.
struct ValidationError : Error {
  using Error::Error;
};

/// 64-bit integer arithmetic would wrap. Raised instead of producing wrong exact values.
struct OverflowError : Error {
  using Error::Error;
};

/// An exact identity the paper proves failed to hold. Indicates an implementation bug.
struct TheoremContradiction : Error {
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace detail

/// Exact reduced fraction over checked 64-bit integers. Denominator is always
/// positive and coprime to the numerator; any overflow raises OverflowError
/// rather than wrapping. This is the scalar field of the whole toolkit; the
/// field conjugation is the identity map.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // intentionally implicit

  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    if (num_ == INT64_MIN) throw OverflowError("integer overflow in negation");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)) with g = gcd(b,d)
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t db = o.den_ / g;
    std::int64_t n = detail::checked_add(detail::checked_mul(num_, db),
                                         detail::checked_mul(o.num_, den_ / g));
    std::int64_t d = detail::checked_mul(den_, db);
    return Rational(n, d);
  }

  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    std::int64_t g1 = std::gcd(abs64(num_), o.den_);
    std::int64_t g2 = std::gcd(abs64(o.num_), den_);
    std::int64_t n = detail::checked_mul(num_ / g1, o.num_ / g2);
    std::int64_t d = detail::checked_mul(den_ / g2, o.den_ / g1);
    return Rational(n, d);
  }

  Rational operator/(const Rational& o) const { return *this * o.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (num_ == 0) throw ValidationError("division by zero rational");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  bool operator<(const Rational& o) const {
    return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static std::int64_t abs64(std::int64_t v) {
    if (v == INT64_MIN) throw OverflowError("integer overflow in abs");
    return v < 0 ? -v : v;
  }

  void normalize() {
    if (den_ < 0) {
      if (den_ == INT64_MIN || num_ == INT64_MIN)
        throw OverflowError("integer overflow normalizing rational");
      den_ = -den_;
      num_ = -num_;
    }
    std::int64_t g = std::gcd(abs64(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hecke

#endif
