#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace reglab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always reduced, denominator positive.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p/q" or an integer "p". Decimals are rejected.
  static Rational parse(std::string_view s);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  std::string str() const;
  double to_double() const { return v_.convert_to<double>(); }
  bool is_zero() const { return v_ == 0; }

  Rational pow(unsigned e) const;
  Rational abs() const { return v_ < 0 ? Rational(-*this) : *this; }
  Rational inverse() const;
  // smallest integer >= this
  BigInt ceil() const;
  BigInt floor() const;

  Rational operator-() const { return from(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  static Rational from(const Rep& r) { Rational x; x.v_ = r; return x; }
  Rep v_{0};
};

// The value coeff * base^(1/root) with coeff, base > 0. Fractional powers
// are never evaluated; comparisons raise the other side to the power root.
class Threshold {
 public:
  Threshold() = default;
  Threshold(const Rational& v) : base_(v) {}  // NOLINT
  static Threshold root(const Rational& base, unsigned root, const Rational& coeff = 1);

  // sign of (x - value)
  int compare(const Rational& x) const;
  bool below(const Rational& x) const { return compare(x) > 0; }     // value < x
  bool at_most(const Rational& x) const { return compare(x) >= 0; }  // value <= x
  bool above(const Rational& x) const { return compare(x) < 0; }     // value > x
  bool at_least(const Rational& x) const { return compare(x) <= 0; } // value >= x

  // least s in [0, n] with s >= value * n, or n + 1 when none exists
  std::size_t min_size(std::size_t n) const;
  // a new threshold scaled by a rational factor
  Threshold scaled(const Rational& c) const;
  bool is_exact() const { return root_ == 1; }
  const Rational& base() const { return base_; }
  const Rational& coeff() const { return coeff_; }
  unsigned root_degree() const { return root_; }
  std::string str() const;

 private:
  Rational base_{0};
  Rational coeff_{1};
  unsigned root_ = 1;
};

}  // namespace reglab
