#include "geomcut/rational.hpp"

#include <cctype>

#include "geomcut/errors.hpp"

namespace geomcut {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.sign() == 0) throw InputError("rational division by zero");
  return wrap(v_ / o.v_);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  if (body.empty()) throw BadCoordinate(s);

  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw BadCoordinate(s);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw BadCoordinate(s);
    mpq_class q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
  }

  auto dotpos = body.find('.');
  std::string ip = dotpos == std::string::npos ? body : body.substr(0, dotpos);
  std::string fp = dotpos == std::string::npos ? "" : body.substr(dotpos + 1);
  if (!all_digits(ip)) throw BadCoordinate(s);
  if (dotpos != std::string::npos && !all_digits(fp)) throw BadCoordinate(s);

  mpz_class digits(ip + fp, 10);
  mpz_class den(1);
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  mpq_class q(digits, den);
  q.canonicalize();
  if (neg) q = -q;
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal() const {
  mpz_class den = v_.get_den();
  unsigned long c2 = 0, c5 = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++c2;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++c5;
  }
  if (den != 1) return to_string();  // no finite decimal form

  unsigned long m = c2 > c5 ? c2 : c5;
  mpz_class scale(1);
  for (unsigned long i = 0; i < m - c2; ++i) scale *= 2;
  for (unsigned long i = 0; i < m - c5; ++i) scale *= 5;
  mpz_class digits = ::abs(v_.get_num()) * scale;

  std::string ds = digits.get_str();
  std::string out;
  if (m == 0) {
    out = ds;
  } else {
    if (ds.size() <= m) ds.insert(0, m + 1 - ds.size(), '0');
    out = ds.substr(0, ds.size() - m) + "." + ds.substr(ds.size() - m);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (sign() < 0) out.insert(out.begin(), '-');
  return out;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Point midpoint(const Point& a, const Point& b) {
  Rational half(1, 2);
  return {half * (a.x + b.x), half * (a.y + b.y)};
}

std::string to_string(const Point& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

}  // namespace geomcut
