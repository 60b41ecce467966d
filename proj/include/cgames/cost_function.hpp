#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "cgames/rational.hpp"

namespace cgames {

// A resource latency. Two families:
//   - polynomials with nonnegative coefficients (coeffs[j] is the x^j term),
//   - right-continuous nondecreasing step functions; a point (t, v) means the
//     value v applies whenever the load x satisfies x >= t (closed threshold),
//     and the value below the first threshold is 0.
// Both are nondecreasing on x > 0 by construction.
class CostFunction {
 public:
  struct Polynomial {
    std::vector<Rational> coeffs;
  };
  struct Step {
    std::vector<std::pair<Rational, Rational>> points;  // (threshold, value)
  };

  static CostFunction polynomial(std::vector<Rational> coeffs);
  static CostFunction monomial(const Rational& coeff, int exponent);
  static CostFunction step(std::vector<std::pair<Rational, Rational>> points);

  Rational operator()(const Rational& load) const;

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(fn_); }
  bool is_step() const { return !is_polynomial(); }
  const Polynomial& poly() const { return std::get<Polynomial>(fn_); }
  const Step& step_points() const { return std::get<Step>(fn_); }

  // Highest exponent with a nonzero coefficient (0 for the zero polynomial).
  int degree() const;
  bool is_identically_zero() const;

  friend bool operator==(const CostFunction& a, const CostFunction& b);

 private:
  explicit CostFunction(Polynomial p) : fn_(std::move(p)) {}
  explicit CostFunction(Step s) : fn_(std::move(s)) {}
  std::variant<Polynomial, Step> fn_;
};

}  // namespace cgames
