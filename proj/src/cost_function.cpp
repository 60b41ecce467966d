#include "cgames/cost_function.hpp"

#include <stdexcept>

namespace cgames {

CostFunction CostFunction::polynomial(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial: empty coefficient list");
  for (const auto& c : coeffs)
    if (c < 0) throw std::invalid_argument("polynomial: negative coefficient");
  return CostFunction(Polynomial{std::move(coeffs)});
}

CostFunction CostFunction::monomial(const Rational& coeff, int exponent) {
  if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Rational> coeffs(exponent + 1, Rational(0));
  coeffs[exponent] = coeff;
  return polynomial(std::move(coeffs));
}

CostFunction CostFunction::step(std::vector<std::pair<Rational, Rational>> points) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].second < 0) throw std::invalid_argument("step: negative value");
    if (i > 0) {
      if (points[i].first <= points[i - 1].first)
        throw std::invalid_argument("step: thresholds not strictly increasing");
      if (points[i].second < points[i - 1].second)
        throw std::invalid_argument("step: values not nondecreasing");
    }
  }
  return CostFunction(Step{std::move(points)});
}

Rational CostFunction::operator()(const Rational& load) const {
  if (is_polynomial()) {
    const auto& cs = poly().coeffs;
    Rational acc = 0;  // Horner
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * load + *it;
    return acc;
  }
  const auto& pts = step_points().points;
  Rational value = 0;
  for (const auto& [threshold, v] : pts) {
    if (load >= threshold)
      value = v;
    else
      break;
  }
  return value;
}

int CostFunction::degree() const {
  if (!is_polynomial()) throw std::logic_error("degree: not a polynomial");
  const auto& cs = poly().coeffs;
  for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j)
    if (cs[j] != 0) return j;
  return 0;
}

bool CostFunction::is_identically_zero() const {
  if (is_polynomial()) {
    for (const auto& c : poly().coeffs)
      if (c != 0) return false;
    return true;
  }
  for (const auto& [t, v] : step_points().points)
    if (v != 0) return false;
  return true;
}

bool operator==(const CostFunction& a, const CostFunction& b) {
  if (a.is_polynomial() != b.is_polynomial()) return false;
  if (a.is_polynomial()) return a.poly().coeffs == b.poly().coeffs;
  return a.step_points().points == b.step_points().points;
}

}  // namespace cgames
