#include "cmera/flow.hpp"

#include <cmath>
#include <stdexcept>

#include "cmera/quadrature.hpp"
#include "cmera/special.hpp"

namespace cmera {

namespace {

// int_0^s du g(k e^u) = int_1^{e^s} dt g(k t)/t, integrated per unit-u
// segment so the exponentially stretched upper range stays well resolved.
double flow_exponent_integral(const Profile& p, double k, double s) {
  const double ak = std::abs(k);
  double total = 0.0;
  const int nseg = static_cast<int>(std::ceil(s));
  for (int i = 0; i < nseg; ++i) {
    const double u0 = s * i / nseg;
    const double u1 = s * (i + 1) / nseg;
    const double t0 = std::exp(u0);
    const double t1 = std::exp(u1);
    const auto r = quad::integrate(
        [&](double t) { return g_momentum(p, ak * t) / t; }, t0, t1, 2e-13);
    total += r.value;
    // Entire remaining range is negligible once the profile has decayed.
    if (g_momentum(p, ak * t1) < 1e-18 && ak * t1 > 10.0 * p.lambda()) break;
  }
  return total;
}

}  // namespace

double alpha_flow(const Profile& p, double k, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("alpha_flow: s must be >= 0");
  if (k == 0.0) return p.lambda() * std::exp(-s);
  if (s == 0.0) return p.lambda();
  return p.lambda() * std::exp(-2.0 * flow_exponent_integral(p, k, s));
}

double alpha_fixed(const Profile& p, double k) {
  if (k == 0.0) return 0.0;
  const double lam = p.lambda();
  if (p.kind() == ProfileKind::gaussian) {
    const double z = k * k / (p.sigma() * lam * lam);
    return lam * std::exp(0.5 * exp_integral_ei(-z));
  }
  return lam * std::abs(k) / std::hypot(k, lam);
}

double magic_mass(double s, double lambda) { return lambda * std::exp(-s); }

double magic_alpha(double k, double s, double lambda) {
  const double m = magic_mass(s, lambda);
  return lambda * std::hypot(k, m) / std::hypot(k, lambda);
}

AlphaFn AlphaFn::fixed_point(const Profile& p) {
  return AlphaFn(p, kFixedPointS, true);
}

AlphaFn AlphaFn::at_scale(const Profile& p, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("AlphaFn: s must be >= 0");
  return AlphaFn(p, s, false);
}

double AlphaFn::operator()(double k) const {
  if (fixed_) return alpha_fixed(profile_, k);
  if (profile_.kind() == ProfileKind::magic) {
    return magic_alpha(k, s_, profile_.lambda());
  }
  return alpha_flow(profile_, k, s_);
}

double AlphaFn::alpha_zero() const {
  return fixed_ ? 0.0 : magic_mass(s_, profile_.lambda());
}

}  // namespace cmera
