// Analytic test fields with exact or finite-difference jets: flat space,
// the exterior Schwarzschild frame, and a conformally flat negative
// control. These provide ground truth for the residual operations.
#ifndef TETRAGAUGE_FIELD_CATALOG_HPP
#define TETRAGAUGE_FIELD_CATALOG_HPP

#include <string>

#include "tetragauge/frame_geometry.hpp"
#include "tetragauge/gauge_phase.hpp"

namespace tetragauge {

enum class FieldKind { kMinkowski, kSchwarzschild, kConformal };
enum class DerivativeMode { kAnalytic, kFiniteDifference };

/// A closed-form frame field on a chart, with a choice of how the
/// derivative slots of sampled jets are filled: closed form, or 5-point
/// central differences of step h (error O(h^4)).
///
/// The connection at a point is always the spin connection of the exact
/// frame data there; only the jet's derivative slots honor the mode.
class AnalyticField {
 public:
  static AnalyticField minkowski();
  /// Diagonal static frame e^0_t = sqrt(1-2m/r), e^1_r = 1/sqrt(1-2m/r),
  /// e^2_theta = r, e^3_phi = r sin(theta), on the chart (t,r,theta,phi).
  /// Throws std::invalid_argument for mass <= 0.
  static AnalyticField schwarzschild(double mass);
  /// e^mu_i = (1 + a x^1) delta^mu_i.
  static AnalyticField conformal(double amplitude);

  FieldKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  DerivativeMode mode() const noexcept { return mode_; }
  double step() const noexcept { return step_; }

  /// Same field with finite-difference jet derivatives of step h > 0.
  AnalyticField with_finite_difference(double h) const;
  AnalyticField with_analytic_derivatives() const;

  /// Frame at a chart point. Throws std::domain_error outside the declared
  /// domain ("outside static patch" for r <= 2m, coordinate singularity on
  /// sin(theta) = 0, vanishing conformal factor).
  Tetrad tetrad_at(const Vec4& x) const;
  /// Closed-form frame gradient at a chart point.
  TetradGradient tetrad_gradient_at(const Vec4& x) const;
  /// Spin connection of the exact frame data at a point.
  SpinConnection connection_at(const Vec4& x) const;

  /// Frame-sector jet (x, e, de, omega, domega).
  FieldJet sample_jet(const Vec4& x) const;
  /// Phase-sector jet: the momenta are the immersed frame, their gradient
  /// comes from the chain rule (analytic mode) or stencils (FD mode).
  PhaseJet sample_phase_jet(const Vec4& x) const;

  /// Canonical spec string, e.g. "schwarzschild:m=1".
  std::string spec_string() const;

 private:
  AnalyticField(FieldKind kind, double param) : kind_(kind), param_(param) {}

  ConnectionGradient analytic_connection_gradient(const Vec4& x) const;

  FieldKind kind_;
  double param_ = 0.0;
  DerivativeMode mode_ = DerivativeMode::kAnalytic;
  double step_ = 1e-3;
};

/// Factory by kind; parameter is the mass or amplitude where applicable.
AnalyticField make_field(FieldKind kind, double parameter = 0.0);

/// Parses "name[:key=value[,key=value]*]", e.g. "schwarzschild:m=1" or
/// "conformal:a=0.1". Throws std::invalid_argument on malformed specs.
AnalyticField parse_field_spec(const std::string& spec);

}  // namespace tetragauge

#endif  // TETRAGAUGE_FIELD_CATALOG_HPP
