#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace geomcut {

// Exact rational, always canonical: gcd(num, den) == 1 and den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rational(long num, long den);
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts exact decimals ("-12.75") and fractions ("-3/4"). Throws BadCoordinate.
  static Rational from_string(const std::string& s);

  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const;  // throws InputError on /0
  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  std::string to_string() const;   // "p" or "p/q"
  std::string to_decimal() const;  // exact decimal when den == 2^a*5^b, else to_string()

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);  // gmpxx arithmetic keeps results canonical
    return r;
  }
  mpq_class v_;
};

Rational abs(const Rational& r);

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  std::strong_ordering operator<=>(const Point& o) const {
    auto c = x <=> o.x;
    return c != 0 ? c : y <=> o.y;
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

// (a - o) x (b - o)
Rational cross(const Point& o, const Point& a, const Point& b);
// plain 2d cross / dot of direction vectors
Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);
Point midpoint(const Point& a, const Point& b);

std::string to_string(const Point& p);

}  // namespace geomcut
