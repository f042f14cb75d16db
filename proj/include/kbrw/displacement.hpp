#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "kbrw/rng.hpp"

namespace kbrw {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Limiting tail exponent profile of a displacement law:
//   h(x) = -x^rho        for x >= 0,
//   h(x) = -c_minus*|x|^rho  for x < 0 (== -inf when c_minus is infinite).
struct TailProfile {
  double rho = 1.0;
  double c_minus = 1.0;  // may be kInf
};

double h_value(const TailProfile& profile, double x);

enum class TailFamily {
  two_sided_exponential_power,
  right_exponential_left_bounded,
};

std::string family_name(TailFamily family);
TailFamily family_from_name(const std::string& name);

// Displacement distribution with closed-form CDF and quantile, so that the
// scaling constant c_N and the tail diagnostics are exact.
//
// two_sided_exponential_power:   1-F(x) = 1/2 exp(-(x/scale)^rho) on x >= 0,
//                                F(x)   = 1/2 exp(-c_minus (|x|/scale)^rho) on x <= 0.
// right_exponential_left_bounded: 1-F(x) = exp(-(x/scale)^rho) on x >= 0, no mass
//                                below 0; realizes c_minus = +inf.
struct DisplacementLaw {
  TailFamily family = TailFamily::two_sided_exponential_power;
  double rho = 1.0;
  double c_minus = 1.0;  // kInf for right_exponential_left_bounded
  double scale = 1.0;

  static DisplacementLaw two_sided(double rho, double c_minus, double scale = 1.0);
  static DisplacementLaw right_exponential(double rho, double scale = 1.0);

  void validate() const;  // throws std::invalid_argument on bad parameters

  double cdf(double x) const;
  double tail(double x) const;  // 1 - F(x)
  double quantile(double u) const;

  TailProfile tail_profile() const { return TailProfile{rho, c_minus}; }
};

// c_N = F^{-1}(1 - 1/n), the spatial unit of the rescaled process. Rejects n < 2.
double quantile_scale(const DisplacementLaw& law, std::int64_t n);

// One inverse-CDF draw; deterministic given the stream state.
double sample(const DisplacementLaw& law, RandomStream& rng);

// Tail-assumption diagnostic: log(1-F(x c_N))/log n - h(x) for x > 0 and the
// analog with F for x < 0. Returns +inf when the relevant mass is exactly zero.
double karamata_deviation(const DisplacementLaw& law, std::int64_t n, double x);

}  // namespace kbrw
