#include "cmera/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmera {

double euler_sigma() {
  static const double sigma = std::exp(kEulerGamma);
  return sigma;
}

namespace {

// Ei(x) = gamma + ln|x| + sum_n x^n / (n * n!), convergent everywhere but
// numerically safe only while the terms stay small; used for |x| <= 1.
double ei_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n < 60; ++n) {
    term *= x / n;
    const double add = term / n;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return kEulerGamma + std::log(std::abs(x)) + sum;
}

// E1(z) for z > 0 via the continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
// evaluated with the modified Lentz algorithm.
double e1_continued_fraction(double z) {
  const double tiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int n = 1; n < 400; ++n) {
    const double a = -static_cast<double>(n) * n;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-z) * h;
}

}  // namespace

double exp_integral_ei(double x) {
  if (!(x < 0.0)) {
    throw std::domain_error("exp_integral_ei: argument must be negative");
  }
  const double z = -x;
  if (z <= 1.0) {
    return ei_series(x);
  }
  return -e1_continued_fraction(z);
}

}  // namespace cmera
