#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "etacalc/errors.hpp"

namespace etacalc {

using Int = boost::multiprecision::cpp_int;

// Exact rational number.  Always stored in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1.  All arithmetic is exact; there is no
// implicit conversion to floating point.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : num_(n) {}
  Rational(long n) : num_(n) {}
  Rational(long long n) : num_(n) {}
  Rational(Int n) : num_(std::move(n)) {}
  Rational(Int n, Int d);

  // Parses "p", "p/q", with optional leading '-'.
  static Rational parse(const std::string& text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double to_double() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace etacalc
