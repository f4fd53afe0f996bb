#pragma once

#include <functional>
#include <stdexcept>

#include "cmera/flow.hpp"
#include "cmera/quadrature.hpp"

namespace cmera {

struct IrDivergenceError : std::invalid_argument {
  explicit IrDivergenceError(const std::string& what)
      : std::invalid_argument(what) {}
};

enum class IrClass { integrable, log_divergent };

// Momentum-space kernel to be cosine-transformed. uv_limit is the k->inf
// value; it is subtracted inside the transform (the corresponding delta
// contact term is excluded from all returned values). The remainder must
// decay at least like 1/k^2.
struct MomentumKernel {
  std::function<double(double)> eval;
  double uv_limit = 0.0;
  IrClass ir = IrClass::integrable;
  double lambda = 1.0;
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double k_max = 40.0;          // tail split point, units of Lambda; >= 10
  double panel_factor = 4.0;    // adaptive panel width bound pi/(factor*x)
  int max_cells = 4000;
  void validate() const;
};

// (1/pi) int_0^inf dk cos(kx) (kernel(k) - uv_limit), x > 0.
double cosine_transform(const MomentumKernel& kernel, double x,
                        const QuadratureSpec& spec);

// (1/pi) int_0^inf dk (cos(kx1) - cos(kx2)) (kernel(k) - uv_limit).
// Admits kernels with a 1/k infrared singularity; the cosine difference
// supplies the compensating k^2.
double cosine_transform_diff(const MomentumKernel& kernel, double x1,
                             double x2, const QuadratureSpec& spec);

// C^Lambda_pipi(x): cosine transform of alpha(k)/2 with the (Lambda/2) delta
// contact subtracted.
double correlator_pi_full(const AlphaFn& alpha, double x,
                          const QuadratureSpec& spec);

// C^Lambda_phiphi(x1) - C^Lambda_phiphi(x2); each term alone is
// log-divergent at the fixed point, the difference is finite.
double correlator_phi_diff_full(const AlphaFn& alpha, double x1, double x2,
                                const QuadratureSpec& spec);

MomentumKernel pi_kernel(const AlphaFn& alpha);
MomentumKernel phi_kernel(const AlphaFn& alpha);

}  // namespace cmera
