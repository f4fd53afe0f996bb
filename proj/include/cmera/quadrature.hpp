#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace cmera::quad {

// Raised when an integral cannot be resolved to the requested tolerance
// within the configured subdivision/cell budget.
struct ToleranceError : std::runtime_error {
  explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

using Fn = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexResult {
  std::complex<double> value;
  double error = 0.0;
};

// Single 15-point Gauss-Kronrod panel with embedded 7-point error estimate.
Result gk15(const Fn& f, double a, double b);

// Globally adaptive Gauss-Kronrod integration of f on [a,b].
// Panels never exceed max_width (oscillation control); the worst panel is
// bisected until the summed error estimate drops below abs_tol.
Result integrate(const Fn& f, double a, double b, double abs_tol,
                 double max_width = 0.0, int max_panels = 40000);

// Tail integral  T(u) = int_{k0}^inf h(k) e^{i k u} dk  for an envelope h
// that decays to zero (at least ~1/k eventually, monotone-ish). Half-period
// cells are summed with iterated averaging; for u = 0 the integral is closed
// with a fitted k^-2 continuation.
ComplexResult oscillatory_tail(const Fn& h, double u, double k0,
                               double abs_tol, int max_cells = 4000);

}  // namespace cmera::quad
