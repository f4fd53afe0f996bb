#pragma once

#include <string>

namespace cmera {

enum class GeometryKind { full_line, boundary, defect };

// Which theory: the full line, the half-line x > 0 with a conformal boundary
// condition (xi = -1 Dirichlet, +1 Neumann), or the line with a conformal
// defect of angle theta in (-pi/2, pi/2] at the origin.
class Geometry {
 public:
  static Geometry full_line();
  static Geometry boundary(int xi);
  static Geometry defect(double theta);

  GeometryKind kind() const { return kind_; }
  int xi() const;
  double theta() const;
  std::string name() const;

  // Validates that (x, y) lies in the geometry's coordinate domain.
  void check_point(double x, double y) const;

 private:
  Geometry(GeometryKind kind, int xi, double theta)
      : kind_(kind), xi_(xi), theta_(theta) {}
  GeometryKind kind_;
  int xi_;
  double theta_;
};

// Piecewise-constant quadrant weight of the defect image term:
// cos(2 theta) for x,y < 0; sin(2 theta) - 1 for xy < 0; -cos(2 theta)
// for x,y > 0.
double c_theta(double theta, double x, double y);

// Derived defect data. R + T = 1 holds exactly by construction (T = 1 - R);
// cosh/sinh eta are kept in the sin2t/cos2t parameterization, which is
// regular away from the totally reflective angles.
struct DefectParams {
  double theta;
  double cosh_eta;
  double sinh_eta;
  double reflection;    // R = cos^2(2 theta)
  double transmission;  // T = 1 - R

  static DefectParams from_theta(double theta);
};

}  // namespace cmera
