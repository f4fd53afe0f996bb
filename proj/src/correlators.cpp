#include "cmera/correlators.hpp"

#include <cmath>
#include <stdexcept>

namespace cmera {

std::string observable_name(Observable o) {
  return o == Observable::pipi ? "pipi" : "phiphi-diff";
}

Observable observable_from_name(const std::string& name) {
  if (name == "pipi") return Observable::pipi;
  if (name == "phiphi-diff") return Observable::phiphi_diff;
  throw std::invalid_argument("unknown observable: " + name);
}

namespace {

double exact_pi(double u) { return -1.0 / (2.0 * M_PI * u * u); }
double exact_phi_diff(double u1, double u2) {
  return -std::log(u1 / u2) / (2.0 * M_PI);
}

// Image weight and image distance for the pi-pi correlator; weight 0 means
// no image term (full line or trivial defect quadrant).
struct ImageTerm {
  double weight;
  double distance;
};

ImageTerm image_term(const Geometry& g, double x, double y) {
  switch (g.kind()) {
    case GeometryKind::full_line:
      return {0.0, 0.0};
    case GeometryKind::boundary:
      return {static_cast<double>(g.xi()), x + y};
    case GeometryKind::defect:
      return {c_theta(g.theta(), x, y), std::abs(x) + std::abs(y)};
  }
  return {0.0, 0.0};
}

}  // namespace

double exact_correlator(const Geometry& g, Observable o, double x, double y) {
  g.check_point(x, y);
  if (o == Observable::pipi) {
    const double direct = exact_pi(std::abs(x - y));
    const ImageTerm im = image_term(g, x, y);
    return im.weight == 0.0 ? direct : direct + im.weight * exact_pi(im.distance);
  }
  // phiphi-diff
  if (g.kind() == GeometryKind::full_line) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument(
          "full-line phiphi-diff takes two positive separations");
    }
    return exact_phi_diff(x, y);
  }
  const ImageTerm im = image_term(g, x, y);
  if (std::abs(1.0 + im.weight) > 1e-12) {
    throw IrDivergenceError(
        "phiphi is IR-divergent except in Dirichlet-type combinations");
  }
  return exact_phi_diff(std::abs(x - y), im.distance);
}

double cmera_correlator(const Geometry& g, const AlphaFn& alpha, Observable o,
                        double x, double y, const QuadratureSpec& spec) {
  g.check_point(x, y);
  if (o == Observable::pipi) {
    const double direct = correlator_pi_full(alpha, std::abs(x - y), spec);
    const ImageTerm im = image_term(g, x, y);
    if (im.weight == 0.0) return direct;
    return direct + im.weight * correlator_pi_full(alpha, im.distance, spec);
  }
  if (g.kind() == GeometryKind::full_line) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument(
          "full-line phiphi-diff takes two positive separations");
    }
    return correlator_phi_diff_full(alpha, x, y, spec);
  }
  const ImageTerm im = image_term(g, x, y);
  if (std::abs(1.0 + im.weight) > 1e-12) {
    throw IrDivergenceError(
        "phiphi is IR-divergent except in Dirichlet-type combinations");
  }
  return correlator_phi_diff_full(alpha, std::abs(x - y), im.distance, spec);
}

MatchingReport defect_matching_check(double theta, double y,
                                     const QuadratureSpec& spec,
                                     const AlphaFn* alpha, double step) {
  if (!(y > 0.0)) {
    throw std::invalid_argument("defect_matching_check: y must be > 0");
  }
  const double h = step;
  const double s2 = std::sin(2.0 * theta);
  const double crr = -std::cos(2.0 * theta);

  MatchingReport rep;
  rep.theta = theta;
  rep.step = h;
  rep.tan_theta = std::tan(theta);

  // D_L = C(-h, y) - C(-2h, y); the cross-quadrant weight sin2t - 1 combines
  // with the direct term into an overall sin2t.
  const double dl_exact = s2 * exact_phi_diff(y + h, y + 2.0 * h);
  const double dr_exact = exact_phi_diff(y - 2.0 * h, y - h) +
                          crr * exact_phi_diff(y + 2.0 * h, y + h);
  if (std::abs(dr_exact) < 1e-14) {
    throw std::runtime_error("defect_matching_check: unstable step size");
  }
  rep.ratio_exact = dl_exact / dr_exact;

  if (alpha != nullptr) {
    QuadratureSpec tight = spec;
    tight.abs_tol = std::min(spec.abs_tol, 1e-12);
    const double dl =
        s2 * correlator_phi_diff_full(*alpha, y + h, y + 2.0 * h, tight);
    const double dr =
        correlator_phi_diff_full(*alpha, y - 2.0 * h, y - h, tight) +
        crr * correlator_phi_diff_full(*alpha, y + 2.0 * h, y + h, tight);
    if (std::abs(dr) < 1e-14) {
      throw std::runtime_error("defect_matching_check: unstable step size");
    }
    rep.ratio_cmera = dl / dr;
  }
  return rep;
}

CorrelatorTable build_correlator_table(const Geometry& g, const AlphaFn& alpha,
                                       Observable o, double y, double x_min,
                                       double x_max, int points,
                                       const QuadratureSpec& spec) {
  if (points < 2) throw std::invalid_argument("table needs at least 2 points");
  CorrelatorTable table{g, o, alpha.profile().name(), alpha.lambda(), spec, y, {}};
  table.points.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double x = x_min + (x_max - x_min) * i / (points - 1);
    try {
      g.check_point(x, y);
    } catch (const std::invalid_argument&) {
      continue;  // off-domain grid point
    }
    const double ex = exact_correlator(g, o, x, y);
    const double cm = cmera_correlator(g, alpha, o, x, y, spec);
    const double rel = std::abs(ex) > 1e-300
                           ? std::abs(cm - ex) / std::abs(ex)
                           : std::abs(cm - ex);
    table.points.push_back({x, y, ex, cm, rel});
  }
  return table;
}

}  // namespace cmera
