#include "cmera/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmera {

Geometry Geometry::full_line() {
  return Geometry(GeometryKind::full_line, 0, 0.0);
}

Geometry Geometry::boundary(int xi) {
  if (xi != -1 && xi != 1) {
    throw std::invalid_argument(
        "Geometry: xi must be -1 (Dirichlet) or +1 (Neumann)");
  }
  return Geometry(GeometryKind::boundary, xi, 0.0);
}

Geometry Geometry::defect(double theta) {
  if (!(theta > -M_PI / 2.0) || !(theta <= M_PI / 2.0)) {
    throw std::invalid_argument("Geometry: theta must lie in (-pi/2, pi/2]");
  }
  return Geometry(GeometryKind::defect, 0, theta);
}

int Geometry::xi() const {
  if (kind_ != GeometryKind::boundary) {
    throw std::logic_error("Geometry: xi is only defined for boundary");
  }
  return xi_;
}

double Geometry::theta() const {
  if (kind_ != GeometryKind::defect) {
    throw std::logic_error("Geometry: theta is only defined for defect");
  }
  return theta_;
}

std::string Geometry::name() const {
  switch (kind_) {
    case GeometryKind::full_line:
      return "full";
    case GeometryKind::boundary:
      return "boundary";
    case GeometryKind::defect:
      return "defect";
  }
  return "";
}

void Geometry::check_point(double x, double y) const {
  if (x == y) {
    throw std::invalid_argument(
        "coincident points: contact terms are excluded");
  }
  switch (kind_) {
    case GeometryKind::full_line:
      break;
    case GeometryKind::boundary:
      if (!(x > 0.0) || !(y > 0.0)) {
        throw std::invalid_argument("boundary geometry requires x, y > 0");
      }
      break;
    case GeometryKind::defect:
      if (x == 0.0 || y == 0.0) {
        throw std::invalid_argument("defect geometry excludes x = 0");
      }
      break;
  }
}

double c_theta(double theta, double x, double y) {
  const double c2 = std::cos(2.0 * theta);
  if (x < 0.0 && y < 0.0) return c2;
  if (x > 0.0 && y > 0.0) return -c2;
  return std::sin(2.0 * theta) - 1.0;
}

DefectParams DefectParams::from_theta(double theta) {
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  DefectParams d;
  d.theta = theta;
  // cosh eta = (tan+cot)/2 = 1/sin2t, sinh eta = (tan-cot)/2 = -cos2t/sin2t.
  d.cosh_eta =
      s2 != 0.0 ? 1.0 / s2 : std::numeric_limits<double>::infinity();
  d.sinh_eta =
      s2 != 0.0
          ? -c2 / s2
          : -std::copysign(std::numeric_limits<double>::infinity(), c2);
  d.reflection = c2 * c2;
  d.transmission = 1.0 - d.reflection;
  return d;
}

}  // namespace cmera
