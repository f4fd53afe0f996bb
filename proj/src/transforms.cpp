#include "cmera/transforms.hpp"

#include <cmath>

namespace cmera {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
  }
  if (!(k_max >= 10.0)) {
    throw std::invalid_argument("QuadratureSpec: k_max must be >= 10 Lambda");
  }
}

namespace {

double region_plus_tail(const std::function<double(double)>& h, double osc_x,
                        const std::function<double(double)>& region_integrand,
                        double k0, const QuadratureSpec& spec) {
  const double tol = spec.abs_tol * M_PI;  // budget before the 1/pi factor
  const double max_w = M_PI / (spec.panel_factor * osc_x);
  const auto region = quad::integrate(region_integrand, 0.0, k0, 0.45 * tol,
                                      max_w);
  double value = region.value;
  double err = region.error;
  const auto tail = quad::oscillatory_tail(h, osc_x, k0, 0.45 * tol,
                                           spec.max_cells);
  value += tail.value.real();
  err += tail.error;
  if (err > tol) {
    throw quad::ToleranceError("cosine_transform: tolerance not met");
  }
  return value / M_PI;
}

}  // namespace

double cosine_transform(const MomentumKernel& kernel, double x,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (!(x > 0.0)) {
    throw std::invalid_argument("cosine_transform: x must be positive");
  }
  if (kernel.ir == IrClass::log_divergent) {
    throw IrDivergenceError(
        "cosine_transform: kernel is IR log-divergent; use the difference form");
  }
  const double k0 = spec.k_max * kernel.lambda;
  auto h = [&](double k) { return kernel.eval(k) - kernel.uv_limit; };
  auto integrand = [&](double k) { return h(k) * std::cos(k * x); };
  return region_plus_tail(h, x, integrand, k0, spec);
}

double cosine_transform_diff(const MomentumKernel& kernel, double x1,
                             double x2, const QuadratureSpec& spec) {
  spec.validate();
  if (!(x1 > 0.0) || !(x2 > 0.0)) {
    throw std::invalid_argument("cosine_transform_diff: x must be positive");
  }
  if (x1 == x2) return 0.0;
  const double k0 = spec.k_max * kernel.lambda;
  const double tol = spec.abs_tol * M_PI;
  auto h = [&](double k) { return kernel.eval(k) - kernel.uv_limit; };
  // cos(kx1) - cos(kx2) = -2 sin(k(x1+x2)/2) sin(k(x1-x2)/2), free of
  // cancellation near k = 0 where the kernel may carry a 1/k singularity.
  const double sp = 0.5 * (x1 + x2);
  const double sm = 0.5 * (x1 - x2);
  auto region_integrand = [&](double k) {
    return -2.0 * std::sin(k * sp) * std::sin(k * sm) * h(k);
  };
  const double max_w = M_PI / (spec.panel_factor * std::max(x1, x2));
  const auto region =
      quad::integrate(region_integrand, 0.0, k0, 0.4 * tol, max_w);
  double value = region.value;
  double err = region.error;
  const auto t1 = quad::oscillatory_tail(h, x1, k0, 0.25 * tol, spec.max_cells);
  const auto t2 = quad::oscillatory_tail(h, x2, k0, 0.25 * tol, spec.max_cells);
  value += t1.value.real() - t2.value.real();
  err += t1.error + t2.error;
  if (err > tol) {
    throw quad::ToleranceError("cosine_transform_diff: tolerance not met");
  }
  return value / M_PI;
}

MomentumKernel pi_kernel(const AlphaFn& alpha) {
  return MomentumKernel{[alpha](double k) { return 0.5 * alpha(k); },
                        0.5 * alpha.lambda(), IrClass::integrable,
                        alpha.lambda()};
}

MomentumKernel phi_kernel(const AlphaFn& alpha) {
  const IrClass ir =
      alpha.ir_regular() ? IrClass::integrable : IrClass::log_divergent;
  return MomentumKernel{[alpha](double k) { return 0.5 / alpha(k); },
                        0.5 / alpha.lambda(), ir, alpha.lambda()};
}

double correlator_pi_full(const AlphaFn& alpha, double x,
                          const QuadratureSpec& spec) {
  return cosine_transform(pi_kernel(alpha), x, spec);
}

double correlator_phi_diff_full(const AlphaFn& alpha, double x1, double x2,
                                const QuadratureSpec& spec) {
  return cosine_transform_diff(phi_kernel(alpha), x1, x2, spec);
}

}  // namespace cmera
