#include "tetragauge/field_catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tetragauge/constraint_immersion.hpp"

namespace tetragauge {

namespace {

using detail::pair_code;

constexpr double kSinThetaFloor = 1e-8;
constexpr double kConformalFloor = 1e-3;

// 5-point central first derivative, error O(h^4).
template <typename F>
double stencil(F&& f, double h) {
  return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

Vec4 shifted(const Vec4& x, int axis, double delta) {
  Vec4 y = x;
  y[static_cast<std::size_t>(axis)] += delta;
  return y;
}

}  // namespace

AnalyticField AnalyticField::minkowski() { return AnalyticField(FieldKind::kMinkowski, 0.0); }

AnalyticField AnalyticField::schwarzschild(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("schwarzschild mass must be positive");
  return AnalyticField(FieldKind::kSchwarzschild, mass);
}

AnalyticField AnalyticField::conformal(double amplitude) {
  return AnalyticField(FieldKind::kConformal, amplitude);
}

AnalyticField AnalyticField::with_finite_difference(double h) const {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  AnalyticField f = *this;
  f.mode_ = DerivativeMode::kFiniteDifference;
  f.step_ = h;
  return f;
}

AnalyticField AnalyticField::with_analytic_derivatives() const {
  AnalyticField f = *this;
  f.mode_ = DerivativeMode::kAnalytic;
  return f;
}

Tetrad AnalyticField::tetrad_at(const Vec4& x) const {
  Mat4 e = Mat4::Identity();
  switch (kind_) {
    case FieldKind::kMinkowski:
      break;
    case FieldKind::kSchwarzschild: {
      const double m = param_, r = x[1], th = x[2];
      if (!(r > 2.0 * m)) throw std::domain_error("outside static patch");
      const double sth = std::sin(th);
      if (std::abs(sth) < kSinThetaFloor)
        throw std::domain_error("coordinate singularity: sin(theta) = 0");
      const double f = std::sqrt(1.0 - 2.0 * m / r);
      e(0, 0) = f;
      e(1, 1) = 1.0 / f;
      e(2, 2) = r;
      e(3, 3) = r * sth;
      break;
    }
    case FieldKind::kConformal: {
      const double omega = 1.0 + param_ * x[1];
      if (omega < kConformalFloor) throw std::domain_error("conformal factor vanishes");
      e *= omega;
      break;
    }
  }
  return Tetrad(e);
}

TetradGradient AnalyticField::tetrad_gradient_at(const Vec4& x) const {
  TetradGradient de;
  switch (kind_) {
    case FieldKind::kMinkowski:
      break;
    case FieldKind::kSchwarzschild: {
      const double m = param_, r = x[1], th = x[2];
      const double f = std::sqrt(1.0 - 2.0 * m / r);
      const double df = m / (r * r * f);
      de(0, 0, 1) = df;
      de(1, 1, 1) = -df / (f * f);
      de(2, 2, 1) = 1.0;
      de(3, 3, 1) = std::sin(th);
      de(3, 3, 2) = r * std::cos(th);
      break;
    }
    case FieldKind::kConformal: {
      for (int mu = 0; mu < 4; ++mu) de(mu, mu, 1) = param_;
      break;
    }
  }
  return de;
}

SpinConnection AnalyticField::connection_at(const Vec4& x) const {
  return spin_connection(tetrad_at(x), tetrad_gradient_at(x));
}

ConnectionGradient AnalyticField::analytic_connection_gradient(const Vec4& x) const {
  ConnectionGradient dw;
  switch (kind_) {
    case FieldKind::kMinkowski:
      break;
    case FieldKind::kSchwarzschild: {
      // Nonzero connection components of the static diagonal frame:
      //   w_t^{01} = m/r^2, w_th^{12} = -f, w_ph^{13} = -f sin th, w_ph^{23} = -cos th.
      const double m = param_, r = x[1], th = x[2];
      const double f = std::sqrt(1.0 - 2.0 * m / r);
      const double df = m / (r * r * f);
      const double sth = std::sin(th), cth = std::cos(th);
      dw.at(1, 0, pair_code(0, 1)) = -2.0 * m / (r * r * r);
      dw.at(1, 2, pair_code(1, 2)) = -df;
      dw.at(1, 3, pair_code(1, 3)) = -df * sth;
      dw.at(2, 3, pair_code(1, 3)) = -f * cth;
      dw.at(2, 3, pair_code(2, 3)) = sth;
      break;
    }
    case FieldKind::kConformal: {
      // w_i^{mu nu} = u (delta^mu_i delta^nu_1 - delta^nu_i delta^mu_1),
      // u = a / (1 + a x^1), so the gradient only runs along x^1.
      const double a = param_;
      const double omega = 1.0 + a * x[1];
      const double du = -a * a / (omega * omega);
      dw.at(1, 0, pair_code(0, 1)) = du;
      dw.at(1, 2, pair_code(1, 2)) = -du;
      dw.at(1, 3, pair_code(1, 3)) = -du;
      break;
    }
  }
  return dw;
}

FieldJet AnalyticField::sample_jet(const Vec4& x) const {
  FieldJet jet;
  jet.x = x;
  jet.e = tetrad_at(x);
  jet.omega = connection_at(x);

  if (mode_ == DerivativeMode::kAnalytic) {
    jet.de = tetrad_gradient_at(x);
    jet.domega = analytic_connection_gradient(x);
    return jet;
  }

  const double h = step_;
  try {
    for (int j = 0; j < 4; ++j) {
      for (int mu = 0; mu < 4; ++mu)
        for (int i = 0; i < 4; ++i)
          jet.de(mu, i, j) = stencil(
              [&](double d) { return tetrad_at(shifted(x, j, d))(mu, i); }, h);
      for (int i = 0; i < 4; ++i)
        for (int p = 0; p < kPairCount; ++p)
          jet.domega.at(j, i, p) = stencil(
              [&](double d) { return connection_at(shifted(x, j, d)).at(i, p); }, h);
    }
  } catch (const std::domain_error&) {
    throw std::domain_error("finite-difference stencil leaves the field domain");
  }
  return jet;
}

PhaseJet AnalyticField::sample_phase_jet(const Vec4& x) const {
  const FieldJet frame = sample_jet(x);

  PhaseJet jet;
  jet.x = x;
  jet.omega = frame.omega;
  jet.domega = frame.domega;
  jet.pi = immerse(frame.e);

  if (mode_ == DerivativeMode::kAnalytic) {
    // Chain rule through the immersion Jacobian with the closed-form frame
    // gradient: dPi/dx^k = (dPi/de^a_m) de^a_m/dx^k.
    const ImmersionJacobian jac = immersion_jacobian(frame.e);
    for (int k = 0; k < 4; ++k)
      for (int cp = 0; cp < kPairCount; ++cp)
        for (int fp = 0; fp < kPairCount; ++fp) {
          double acc = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int m = 0; m < 4; ++m)
              acc += jac.j(cp * kPairCount + fp, a * 4 + m) * frame.de(a, m, k);
          jet.dpi.at(k, cp, fp) = acc;
        }
    return jet;
  }

  const double h = step_;
  try {
    for (int k = 0; k < 4; ++k)
      for (int cp = 0; cp < kPairCount; ++cp)
        for (int fp = 0; fp < kPairCount; ++fp)
          jet.dpi.at(k, cp, fp) = stencil(
              [&](double d) { return immerse(tetrad_at(shifted(x, k, d))).at(cp, fp); }, h);
  } catch (const std::domain_error&) {
    throw std::domain_error("finite-difference stencil leaves the field domain");
  }
  return jet;
}

std::string AnalyticField::spec_string() const {
  std::ostringstream out;
  switch (kind_) {
    case FieldKind::kMinkowski:
      out << "minkowski";
      break;
    case FieldKind::kSchwarzschild:
      out << "schwarzschild:m=" << param_;
      break;
    case FieldKind::kConformal:
      out << "conformal:a=" << param_;
      break;
  }
  return out.str();
}

AnalyticField make_field(FieldKind kind, double parameter) {
  switch (kind) {
    case FieldKind::kMinkowski:
      return AnalyticField::minkowski();
    case FieldKind::kSchwarzschild:
      return AnalyticField::schwarzschild(parameter);
    case FieldKind::kConformal:
      return AnalyticField::conformal(parameter);
  }
  throw std::invalid_argument("unknown field kind");
}

AnalyticField parse_field_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);

  double mass = 0.0, amplitude = 0.0;
  bool have_mass = false, have_amplitude = false;

  if (colon != std::string::npos) {
    std::stringstream args(spec.substr(colon + 1));
    std::string item;
    while (std::getline(args, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("malformed field spec: expected key=value in '" + spec + "'");
      const std::string key = item.substr(0, eq);
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed field spec: bad value in '" + item + "'");
      }
      if (key == "m" || key == "mass") {
        mass = value;
        have_mass = true;
      } else if (key == "a" || key == "amplitude") {
        amplitude = value;
        have_amplitude = true;
      } else {
        throw std::invalid_argument("malformed field spec: unknown key '" + key + "'");
      }
    }
  }

  if (name == "minkowski") {
    if (have_mass || have_amplitude)
      throw std::invalid_argument("malformed field spec: minkowski takes no parameters");
    return AnalyticField::minkowski();
  }
  if (name == "schwarzschild") {
    if (!have_mass) throw std::invalid_argument("malformed field spec: schwarzschild needs m=<mass>");
    return AnalyticField::schwarzschild(mass);
  }
  if (name == "conformal") {
    if (!have_amplitude)
      throw std::invalid_argument("malformed field spec: conformal needs a=<amplitude>");
    return AnalyticField::conformal(amplitude);
  }
  throw std::invalid_argument("unknown field '" + name + "'");
}

}  // namespace tetragauge
