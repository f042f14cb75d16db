#pragma once

#include <vector>

#include "kbrw/displacement.hpp"

namespace kbrw {

// pi projector: identity on [0, inf), -inf below.
double project_pi(double v);

// One contiguous piece of support: breakpoints x (strictly increasing, at
// least one) with values v >= 0, linear interpolation in between. A component
// of size one is a single occupied point.
struct SupportComponent {
  std::vector<double> x;
  std::vector<double> v;

  double left() const { return x.front(); }
  double right() const { return x.back(); }
  double value_at(double z) const;  // -inf outside [left,right]
};

// A function R -> R_+ U {-inf} with compact support, piecewise linear on each
// support component, jumps allowed at component edges. Concave profiles have a
// single component; the general representation also covers selection outputs
// whose support splits (isolated zeros included, as single-point components).
class PiecewiseProfile {
 public:
  PiecewiseProfile() = default;

  // Single-component constructors. Breakpoints are deduped (1e-12) and
  // collinear pieces merged; values must be finite and >= 0.
  static PiecewiseProfile from_breakpoints(std::vector<double> x, std::vector<double> v);
  static PiecewiseProfile point(double x, double v);
  static PiecewiseProfile from_components(std::vector<SupportComponent> comps);

  bool empty() const { return comps_.empty(); }
  std::size_t piece_count() const;

  double lower_edge() const;  // L: left edge of the support hull
  double upper_edge() const;  // U
  double sup() const;

  double value(double z) const;
  double value_left(double z) const;   // left limit
  double value_right(double z) const;  // right limit

  // sup over the half-open interval (a,b]; -inf when disjoint from support.
  double sup_on(double a, double b) const;

  // omega = sup_z (g(z) + z); attained at a breakpoint.
  double omega() const;

  PiecewiseProfile shifted(double dx) const;

  bool is_concave(double tol = 1e-9) const;

  const std::vector<SupportComponent>& components() const { return comps_; }
  std::vector<double> breakpoints() const;

  // Single-point components with value zero (isolated zeros of a clipped
  // function).
  bool has_isolated_zero() const;

 private:
  std::vector<SupportComponent> comps_;
};

// Metric on profiles: sup |g1_+ - g2_+| joined with the edge distances
// |U1-U2| and |L1-L2|. Exact for piecewise-linear profiles (evaluated on the
// breakpoint union with one-sided limits at jumps).
double phi_distance(const PiecewiseProfile& g1, const PiecewiseProfile& g2);

}  // namespace kbrw
