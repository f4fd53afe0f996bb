#include "cmera/profile.hpp"

#include <cmath>
#include <stdexcept>

#include "cmera/special.hpp"

namespace cmera {

Scale::Scale(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("Scale: lambda must be positive and finite");
  }
}

Profile Profile::gaussian(Scale scale) {
  return Profile(ProfileKind::gaussian, scale.lambda(), euler_sigma());
}

Profile Profile::magic(Scale scale) {
  return Profile(ProfileKind::magic, scale.lambda(), euler_sigma());
}

std::string Profile::name() const {
  return kind_ == ProfileKind::gaussian ? "gaussian" : "magic";
}

Profile profile_from_name(const std::string& name, Scale scale) {
  if (name == "gaussian") return Profile::gaussian(scale);
  if (name == "magic") return Profile::magic(scale);
  throw std::invalid_argument("unknown profile: " + name);
}

double g_position(const Profile& p, double x) {
  const double lx = p.lambda() * x;
  if (p.kind() == ProfileKind::gaussian) {
    return 0.5 * std::exp(-0.25 * p.sigma() * lx * lx);
  }
  return 0.25 * p.lambda() * std::exp(-std::abs(lx));
}

double g_momentum(const Profile& p, double k) {
  const double u = k / p.lambda();
  if (p.kind() == ProfileKind::gaussian) {
    return 0.5 * std::exp(-u * u / p.sigma());
  }
  return 0.5 / (u * u + 1.0);
}

}  // namespace cmera
