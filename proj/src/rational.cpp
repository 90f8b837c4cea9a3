#include "etacalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace etacalc {

using boost::multiprecision::gcd;

void Rational::normalize() {
  if (den_ == 0) throw DivisionByZero("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&] {
    return SchemaError("not a rational literal: \"" + text + "\"");
  };
  std::string s = text;
  // tolerate surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  std::string ns = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string ds = (slash == std::string::npos) ? "1" : s.substr(slash + 1);

  auto parse_int = [&](const std::string& p, bool allow_sign) -> Int {
    std::string body = p;
    bool neg = false;
    if (allow_sign && !body.empty() && (body[0] == '-' || body[0] == '+')) {
      neg = body[0] == '-';
      body.erase(body.begin());
    }
    if (body.empty()) throw bad();
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Int v(body);
    return neg ? Int(-v) : v;
  };

  Int n = parse_int(ns, true);
  Int d = parse_int(ds, false);
  if (d == 0) throw SchemaError("rational literal with zero denominator: \"" +
                                text + "\"");
  return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw DivisionByZero("inverse of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DivisionByZero("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num() * b.den();
  Int rhs = b.num() * a.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace etacalc
