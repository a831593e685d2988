#pragma once

#include <string>

#include "clanlab/errors.hpp"
#include "clanlab/rational.hpp"

namespace clanlab {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2), with exact
/// rational components.  Inverses exist for every nonzero element because
/// a^2 - 2 b^2 = 0 forces a = b = 0.
class QSqrt2 {
 public:
  QSqrt2() : a_(0), b_(0) {}
  QSqrt2(int value) : a_(value), b_(0) {}  // NOLINT: implicit by design
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1) / 2); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }

  QSqrt2 inverse() const {
    Rational norm = a_ * a_ - 2 * b_ * b_;
    if (norm == 0) throw SingularMatrix("division by zero in Q(sqrt 2)");
    return QSqrt2(a_ / norm, -b_ / norm);
  }

  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

  bool operator==(const QSqrt2&) const = default;

  /// Shortest exact text: "0", "-1/2", "√2", "1-1/2√2", ...
  std::string str() const {
    auto rational_str = [](const Rational& r) {
      std::string s = numerator(r).str();
      if (denominator(r) != 1) s += "/" + denominator(r).str();
      return s;
    };
    if (b_ == 0) return rational_str(a_);
    std::string root;
    if (b_ == 1) root = "√2";
    else if (b_ == -1) root = "-√2";
    else root = rational_str(b_) + "√2";
    if (a_ == 0) return root;
    if (b_ > 0) return rational_str(a_) + "+" + root;
    return rational_str(a_) + root;
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace clanlab
