#include "tetragauge/sampling.hpp"

#include <cmath>

namespace tetragauge {

Mat4 expm(const Mat4& a) {
  // Scale so the series argument has small norm, sum, then square back.
  const double norm = a.cwiseAbs().sum();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.5) ++squarings;

  const Mat4 b = a / std::pow(2.0, squarings);
  Mat4 result = Mat4::Identity();
  Mat4 term = Mat4::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Tetrad random_tetrad(Rng& rng, double scale, double min_abs_det) {
  for (;;) {
    Mat4 e;
    for (int mu = 0; mu < 4; ++mu)
      for (int i = 0; i < 4; ++i) e(mu, i) = rng.uniform(-scale, scale);
    if (std::abs(e.determinant()) > min_abs_det) return Tetrad(e);
  }
}

Momenta random_momenta(Rng& rng) {
  Momenta pi;
  for (int cp = 0; cp < kPairCount; ++cp)
    for (int fp = 0; fp < kPairCount; ++fp) pi.at(cp, fp) = rng.uniform(-1.0, 1.0);
  return pi;
}

Curvature random_curvature(Rng& rng) {
  Curvature r;
  for (int cp = 0; cp < kPairCount; ++cp)
    for (int fp = 0; fp < kPairCount; ++fp) r.at(cp, fp) = rng.uniform(-1.0, 1.0);
  return r;
}

SpinConnection random_connection(Rng& rng) {
  SpinConnection w;
  for (int i = 0; i < 4; ++i)
    for (int p = 0; p < kPairCount; ++p) w.at(i, p) = rng.uniform(-1.0, 1.0);
  return w;
}

ConnectionGradient random_connection_gradient(Rng& rng) {
  ConnectionGradient dw;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      for (int p = 0; p < kPairCount; ++p) dw.at(j, i, p) = rng.uniform(-1.0, 1.0);
  return dw;
}

LorentzTransform random_lorentz(Rng& rng) {
  Mat4 a = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double v = rng.uniform(-0.5, 0.5);
      a(i, j) = v;
      a(j, i) = -v;
    }
  Mat4 eta = Mat4::Identity();
  eta(0, 0) = -1.0;
  return LorentzTransform(expm(a * eta));
}

FieldJet random_admissible_jet(Rng& rng) {
  FieldJet jet;
  jet.e = random_tetrad(rng);
  for (int mu = 0; mu < 4; ++mu)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) jet.de(mu, i, j) = rng.uniform(-0.5, 0.5);
  jet.omega = spin_connection(jet.e, jet.de);
  jet.domega = random_connection_gradient(rng);
  return jet;
}

}  // namespace tetragauge
