#pragma once

#include <string>

namespace cmera {

// UV cutoff momentum scale Lambda; Lambda^-1 is the quasilocality length.
class Scale {
 public:
  explicit Scale(double lambda);
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

enum class ProfileKind { gaussian, magic };

// Entangler profile: paired position kernel g(x) and momentum kernel g(k).
// Two profiles are supported:
//   gaussian: g(x) = 1/2 exp(-sigma (Lambda x)^2 / 4),  sigma = e^gamma
//             g(k) = 1/2 exp(-k^2 / (sigma Lambda^2))
//   magic:    g(x) = (Lambda/4) exp(-Lambda |x|)
//             g(k) = Lambda^2 / (2 (k^2 + Lambda^2))
class Profile {
 public:
  static Profile gaussian(Scale scale);
  static Profile magic(Scale scale);

  ProfileKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  // sigma = exp(Euler-Mascheroni gamma); meaningful for the gaussian kind.
  double sigma() const { return sigma_; }
  std::string name() const;

 private:
  Profile(ProfileKind kind, double lambda, double sigma)
      : kind_(kind), lambda_(lambda), sigma_(sigma) {}
  ProfileKind kind_;
  double lambda_;
  double sigma_;
};

Profile profile_from_name(const std::string& name, Scale scale);

double g_position(const Profile& p, double x);
double g_momentum(const Profile& p, double k);

}  // namespace cmera
