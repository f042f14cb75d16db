#include "kbrw/displacement.hpp"

#include <cmath>
#include <stdexcept>

namespace kbrw {

double h_value(const TailProfile& profile, double x) {
  if (x >= 0.0) return -std::pow(x, profile.rho);
  if (std::isinf(profile.c_minus)) return -kInf;
  return -profile.c_minus * std::pow(-x, profile.rho);
}

std::string family_name(TailFamily family) {
  switch (family) {
    case TailFamily::two_sided_exponential_power:
      return "two_sided_exponential_power";
    case TailFamily::right_exponential_left_bounded:
      return "right_exponential_left_bounded";
  }
  return "unknown";
}

TailFamily family_from_name(const std::string& name) {
  if (name == "two_sided_exponential_power") return TailFamily::two_sided_exponential_power;
  if (name == "right_exponential_left_bounded") return TailFamily::right_exponential_left_bounded;
  throw std::invalid_argument("unknown displacement family: " + name);
}

DisplacementLaw DisplacementLaw::two_sided(double rho, double c_minus, double scale) {
  DisplacementLaw law{TailFamily::two_sided_exponential_power, rho, c_minus, scale};
  law.validate();
  return law;
}

DisplacementLaw DisplacementLaw::right_exponential(double rho, double scale) {
  DisplacementLaw law{TailFamily::right_exponential_left_bounded, rho, kInf, scale};
  law.validate();
  return law;
}

void DisplacementLaw::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale must be positive");
  if (family == TailFamily::two_sided_exponential_power) {
    if (!(c_minus > 0.0) || std::isinf(c_minus))
      throw std::invalid_argument("two-sided family needs finite c_minus > 0");
  } else {
    if (!std::isinf(c_minus))
      throw std::invalid_argument("right-exponential family has c_minus = inf");
  }
}

double DisplacementLaw::cdf(double x) const {
  const double z = x / scale;
  if (family == TailFamily::two_sided_exponential_power) {
    if (z >= 0.0) return 1.0 - 0.5 * std::exp(-std::pow(z, rho));
    return 0.5 * std::exp(-c_minus * std::pow(-z, rho));
  }
  if (z < 0.0) return 0.0;
  return 1.0 - std::exp(-std::pow(z, rho));
}

double DisplacementLaw::tail(double x) const {
  const double z = x / scale;
  if (family == TailFamily::two_sided_exponential_power) {
    if (z >= 0.0) return 0.5 * std::exp(-std::pow(z, rho));
    return 1.0 - 0.5 * std::exp(-c_minus * std::pow(-z, rho));
  }
  if (z < 0.0) return 1.0;
  return std::exp(-std::pow(z, rho));
}

double DisplacementLaw::quantile(double u) const {
  if (!(u > 0.0) || !(u < 1.0)) throw std::invalid_argument("quantile needs u in (0,1)");
  if (family == TailFamily::two_sided_exponential_power) {
    if (u >= 0.5) return scale * std::pow(-std::log(2.0 * (1.0 - u)), 1.0 / rho);
    return -scale * std::pow(-std::log(2.0 * u) / c_minus, 1.0 / rho);
  }
  return scale * std::pow(-std::log(1.0 - u), 1.0 / rho);
}

double quantile_scale(const DisplacementLaw& law, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("quantile_scale needs n >= 2");
  const double ln = std::log(static_cast<double>(n));
  if (law.family == TailFamily::two_sided_exponential_power)
    return law.scale * std::pow(ln - std::log(2.0), 1.0 / law.rho);
  return law.scale * std::pow(ln, 1.0 / law.rho);
}

double sample(const DisplacementLaw& law, RandomStream& rng) {
  return law.quantile(rng.uniform01());
}

double karamata_deviation(const DisplacementLaw& law, std::int64_t n, double x) {
  if (n < 2) throw std::invalid_argument("karamata_deviation needs n >= 2");
  if (x == 0.0) throw std::invalid_argument("karamata_deviation needs x != 0");
  const double cn = quantile_scale(law, n);
  const double mass = (x > 0.0) ? law.tail(x * cn) : law.cdf(x * cn);
  if (mass <= 0.0) return kInf;
  const double exponent = std::log(mass) / std::log(static_cast<double>(n));
  const double h = h_value(law.tail_profile(), x);
  if (std::isinf(h)) return kInf;  // positive mass where the profile demands none
  return exponent - h;
}

}  // namespace kbrw
