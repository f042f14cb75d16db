#pragma once

#include <optional>
#include <vector>

#include "kbrw/profile.hpp"

namespace kbrw {

// Reproduction operator for exponential tails (rho = 1):
//   r(g)(x) = pi(1 - gamma + sup_z (g(z) + h(x - z))).
// Exact sup-convolution of a piecewise-linear profile with the two rays of h,
// computed as an upper envelope and clipped at zero. Rejects rho != 1.
PiecewiseProfile reproduce_profile(const PiecewiseProfile& g, const TailProfile& tail, double gamma);

// Selection operator: s_sigma(g)(x) = pi(g(x) + beta (x - sigma)_-). Pieces
// left of sigma gain slope beta; the support shrinks (and may split) where the
// tilted function goes negative.
PiecewiseProfile select_profile(const PiecewiseProfile& g, double sigma, double beta);

// Free-boundary threshold sigma* = inf{sigma : sup s_sigma(r) <= gamma},
// located by bisection (absolute tolerance 1e-12) using the monotonicity of
// sigma -> sup s_sigma(r). `nonunique` is set when sup s_sigma sits flat at
// gamma over a sigma-interval wider than the tolerance.
struct SigmaStar {
  double sigma = 0.0;
  bool nonunique = false;
  double flat_width = 0.0;
};
SigmaStar solve_sigma_star(const PiecewiseProfile& r_prof, double gamma, double beta);

// sup_x (r(x) + beta (x - sigma)_-), evaluated exactly.
double selected_sup(const PiecewiseProfile& r_prof, double sigma, double beta);

// Bracket for sigma^t along the dynamics: a_-(g) = L(g) + (1-gamma)/(1 ^ beta),
// a_+(g) = omega(g) - gamma + (1-gamma)/(1 ^ beta).
double a_minus(const PiecewiseProfile& g, double gamma, double beta);
double a_plus(const PiecewiseProfile& g, double gamma, double beta);

struct DynamicsState {
  PiecewiseProfile g;
  int t = 0;
  std::vector<double> sigma_history;
  std::vector<double> upper_history;  // U(g^s) for s = 0..t
  bool nonunique_flag = false;        // any sigma* non-uniqueness seen
  bool isolated_zero_flag = false;    // any isolated zero in a selection output

  static DynamicsState initial(PiecewiseProfile g0);
};

// One step of g^{t+1} = s_{sigma^t} . r(g^t). Post: sup g' = gamma within 1e-9.
DynamicsState dynamics_step(const DynamicsState& state, const TailProfile& tail, double gamma,
                            double beta);

// --- grid engine (general rho) ---------------------------------------------

// Function sampled on the uniform grid x0 + i*dx; -inf marks empty locations.
struct GridFunction {
  double x0 = 0.0;
  double dx = 0.0;
  std::vector<double> v;

  double x_at(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
};

// Pointwise r on the grid: pi(1 - gamma + max_j (g_j + h(x_i - x_j))).
GridFunction reproduce_profile_grid(const GridFunction& g, const TailProfile& tail, double gamma);

GridFunction select_profile_grid(const GridFunction& r, double sigma, double beta);

double grid_sigma_star(const GridFunction& r, double gamma, double beta);

// Maximal runs of non-negative values; runs of length one are isolated points.
struct GridSupport {
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> isolated_points;
};
GridSupport grid_support(const GridFunction& f);

}  // namespace kbrw
