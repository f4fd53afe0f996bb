#pragma once

namespace cmera {

// Euler-Mascheroni constant and sigma = exp(gamma), the width constant of the
// gaussian entangler profile.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
double euler_sigma();

// Exponential integral Ei(x) for strictly negative arguments, accurate to
// ~1e-14 relative. Convergent series for |x| <= 1, modified Lentz continued
// fraction for E1(|x|) beyond. Throws std::domain_error for x >= 0.
double exp_integral_ei(double x);

}  // namespace cmera
