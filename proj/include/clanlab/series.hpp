#pragma once

#include <vector>

#include "clanlab/errors.hpp"
#include "clanlab/rational.hpp"

namespace clanlab {

/// Formal power series with exact rational coefficients, truncated at a
/// fixed order (coefficients of x^0 .. x^order are kept).
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coefficients_(static_cast<size_t>(order) + 1, Rational(0)) {
    if (order < 0) throw Error("series order must be >= 0");
  }

  /// exp(c * x^p) truncated: sum over k of c^k / k! * x^(pk).
  static PowerSeries exp_monomial(const Rational& c, int power, int order) {
    if (power < 1) throw Error("monomial power must be >= 1");
    PowerSeries s(order);
    Rational term = 1;  // c^k / k!
    for (int k = 0; k * power <= order; ++k) {
      if (k > 0) term *= c / k;
      s.coefficients_[static_cast<size_t>(k * power)] = term;
    }
    return s;
  }

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }

  const Rational& coeff(int k) const {
    if (k < 0 || k > order()) throw IndexOutOfRange("series coefficient " + std::to_string(k));
    return coefficients_[static_cast<size_t>(k)];
  }

  Rational& coeff(int k) {
    if (k < 0 || k > order()) throw IndexOutOfRange("series coefficient " + std::to_string(k));
    return coefficients_[static_cast<size_t>(k)];
  }

  PowerSeries operator*(const PowerSeries& other) const {
    int ord = std::min(order(), other.order());
    PowerSeries out(ord);
    for (int i = 0; i <= ord; ++i) {
      if (coefficients_[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= ord; ++j)
        out.coefficients_[static_cast<size_t>(i + j)] +=
            coefficients_[static_cast<size_t>(i)] * other.coefficients_[static_cast<size_t>(j)];
    }
    return out;
  }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> coefficients_;
};

}  // namespace clanlab
