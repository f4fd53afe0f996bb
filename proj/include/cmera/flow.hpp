#pragma once

#include "cmera/profile.hpp"

namespace cmera {

// Entangling-flow scale s at which the state is treated as the fixed point:
// the flow integrand is suppressed by at least g(k e^s), negligible past
// e^40 dynamic range.
inline constexpr double kFixedPointS = 40.0;

// alpha(k,s) = Lambda exp(-2 int_0^s du g(k e^u)), evaluated by adaptive
// quadrature after the substitution t = e^u. k = 0 returns Lambda e^-s
// exactly (g(0) = 1/2 forces a constant integrand).
double alpha_flow(const Profile& p, double k, double s);

// Fixed-point closed forms:
//   gaussian: Lambda exp(Ei(-k^2/(sigma Lambda^2)) / 2)
//   magic:    Lambda |k| / sqrt(k^2 + Lambda^2)
// k = 0 returns 0 (the limit).
double alpha_fixed(const Profile& p, double k);

double magic_mass(double s, double lambda);  // m(s) = Lambda e^-s
// Closed form of the magic flow, Lambda sqrt(k^2+m^2(s))/sqrt(k^2+Lambda^2).
double magic_alpha(double k, double s, double lambda);

// Evaluation handle used by the transform engine. Closed forms are used
// where available (both fixed points, magic at any s); the gaussian profile
// at finite s falls back to flow quadrature.
class AlphaFn {
 public:
  static AlphaFn fixed_point(const Profile& p);
  static AlphaFn at_scale(const Profile& p, double s);

  double operator()(double k) const;
  double lambda() const { return profile_.lambda(); }
  const Profile& profile() const { return profile_; }
  double s() const { return s_; }
  bool fixed() const { return fixed_; }
  // alpha(0): 0 at the fixed point, m(s) along the flow.
  double alpha_zero() const;
  bool ir_regular() const { return !fixed_; }

 private:
  AlphaFn(const Profile& p, double s, bool fixed)
      : profile_(p), s_(s), fixed_(fixed) {}
  Profile profile_;
  double s_;
  bool fixed_;
};

}  // namespace cmera
