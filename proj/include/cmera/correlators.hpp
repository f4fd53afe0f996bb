#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmera/flow.hpp"
#include "cmera/geometry.hpp"
#include "cmera/transforms.hpp"

namespace cmera {

enum class Observable { pipi, phiphi_diff };

std::string observable_name(Observable o);
Observable observable_from_name(const std::string& name);

// Exact massless correlators.
//   pipi:        C(u) = -1/(2 pi u^2) assembled per geometry with its image
//                term (xi or c_theta weighted).
//   phiphi_diff: the IR-finite difference combinations only; on the full
//                line (x, y) are the two separations and the value is
//                -(1/2pi) ln(x/y); boundary/defect admit the Dirichlet-type
//                combination C(|x-y|) - C(image distance).
double exact_correlator(const Geometry& g, Observable o, double x, double y);

// Same structural formulas with the regularized C^Lambda from the transform
// engine substituted for C, at the fixed point or any finite flow scale.
double cmera_correlator(const Geometry& g, const AlphaFn& alpha, Observable o,
                        double x, double y, const QuadratureSpec& spec);

// Derivative-matching diagnostic at the defect: the one-sided x-derivatives
// of the phi-phi correlator at 0-/0+ must be in ratio tan(theta), for the
// exact correlator and for any cMERA alpha supplied.
struct MatchingReport {
  double theta = 0.0;
  double step = 0.0;
  double tan_theta = 0.0;
  double ratio_exact = 0.0;
  std::optional<double> ratio_cmera;
};

MatchingReport defect_matching_check(double theta, double y,
                                     const QuadratureSpec& spec,
                                     const AlphaFn* alpha = nullptr,
                                     double step = 1e-4);

struct CorrelatorPoint {
  double x;
  double y;
  double exact;
  double cmera;
  double rel_err;
};

struct CorrelatorTable {
  Geometry geometry;
  Observable observable;
  std::string profile;
  double lambda;
  QuadratureSpec spec;
  double y;
  std::vector<CorrelatorPoint> points;
};

// Fixed-y sweep of x over [x_min, x_max] with `points` samples; grid points
// that violate the geometry's domain (coincidence, wrong side) are skipped.
CorrelatorTable build_correlator_table(const Geometry& g, const AlphaFn& alpha,
                                       Observable o, double y, double x_min,
                                       double x_max, int points,
                                       const QuadratureSpec& spec);

}  // namespace cmera
