#include "reglab/rational.hpp"

#include "reglab/errors.hpp"

#include <cctype>

namespace reglab {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = Rep(num, den);
}

namespace {
BigInt parse_int(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("malformed rational '" + std::string(whole) + "' (expected p/q)");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}
}  // namespace

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, s), BigInt(1));
  BigInt p = parse_int(s.substr(0, slash), s);
  BigInt q = parse_int(s.substr(slash + 1), s);
  if (q == 0) throw DomainError("rational '" + std::string(s) + "' has zero denominator");
  return Rational(p, q);
}

std::string Rational::str() const {
  if (den() == 1) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::pow(unsigned e) const {
  BigInt n = boost::multiprecision::pow(num(), e);
  BigInt d = boost::multiprecision::pow(den(), e);
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q = num() / den();
  if (num() < 0 && q * den() != num()) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt f = floor();
  return f * den() == num() ? f : BigInt(f + 1);
}

Threshold Threshold::root(const Rational& base, unsigned r, const Rational& coeff) {
  if (r == 0) throw DomainError("root of degree zero");
  if (base < 0 || coeff < 0) throw DomainError("threshold must be non-negative");
  Threshold t;
  t.base_ = base;
  t.coeff_ = coeff;
  t.root_ = r;
  return t;
}

int Threshold::compare(const Rational& x) const {
  if (root_ == 1) {
    Rational v = coeff_ * base_;
    return x < v ? -1 : (x > v ? 1 : 0);
  }
  if (x < 0) return -1;
  Rational lhs = x.pow(root_);
  Rational rhs = coeff_.pow(root_) * base_;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::size_t Threshold::min_size(std::size_t n) const {
  if (n == 0) return 1;
  for (std::size_t s = 0; s <= n; ++s)
    if (at_most(Rational(static_cast<long long>(s), static_cast<long long>(n)))) return s;
  return n + 1;
}

Threshold Threshold::scaled(const Rational& c) const {
  Threshold t = *this;
  t.coeff_ = coeff_ * c;
  return t;
}

std::string Threshold::str() const {
  if (root_ == 1) return (coeff_ * base_).str();
  std::string s = "(" + base_.str() + ")^(1/" + std::to_string(root_) + ")";
  if (coeff_ != 1) s = coeff_.str() + "*" + s;
  return s;
}

}  // namespace reglab
