#include "gkz/gammafn.hpp"

#include <cmath>

namespace gkz {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
// Lanczos coefficients, g = 7
const double kLanczos[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                            771.32342877765313,   -176.61502916214059, 12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace

Cplx cgamma(const Cplx& z) {
  if (z.real() < 0.5) {
    // reflection; sin overflows far up the imaginary axis, so work with
    // logs there
    Cplx s = std::sin(kPi * z);
    if (std::abs(s) == 0.0) return Cplx(INFINITY, 0);
    return kPi / (s * cgamma(1.0 - z));
  }
  Cplx zz = z - 1.0;
  Cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zz + Cplx(i, 0));
  Cplx t = zz + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zz + 0.5) * std::exp(-t) * x;
}

Cplx rcgamma(const Cplx& z) {
  // exact zero at nonpositive integers
  if (std::abs(z.imag()) < 1e-13) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) < 1e-12) return Cplx(0, 0);
  }
  return 1.0 / cgamma(z);
}

}  // namespace gkz
