// Seeded random inputs for the property and proposition suites: frames,
// momenta, curvatures, connections, admissible jets and proper Lorentz
// transformations. Deterministic for a fixed seed.
#ifndef TETRAGAUGE_SAMPLING_HPP
#define TETRAGAUGE_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "tetragauge/constraint_immersion.hpp"
#include "tetragauge/frame_geometry.hpp"
#include "tetragauge/gauge_phase.hpp"

namespace tetragauge {

/// mt19937_64 with a platform-independent uniform double mapping.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double canonical() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

 private:
  std::mt19937_64 gen_;
};

/// Entries i.i.d. uniform in [-scale, scale], rejection-sampled to
/// |det e| > min_abs_det.
Tetrad random_tetrad(Rng& rng, double scale = 2.0, double min_abs_det = 0.1);

/// Independent components uniform in [-1, 1].
Momenta random_momenta(Rng& rng);
Curvature random_curvature(Rng& rng);
SpinConnection random_connection(Rng& rng);
ConnectionGradient random_connection_gradient(Rng& rng);

/// exp(A eta) with A antisymmetric, entries uniform in [-0.5, 0.5];
/// the result is validated by the LorentzTransform constructor.
LorentzTransform random_lorentz(Rng& rng);

/// Random frame and frame gradient with the matching spin connection and a
/// random (unconstrained) connection gradient: admissible by construction.
FieldJet random_admissible_jet(Rng& rng);

/// Scaling-and-squaring matrix exponential.
Mat4 expm(const Mat4& a);

}  // namespace tetragauge

#endif  // TETRAGAUGE_SAMPLING_HPP
