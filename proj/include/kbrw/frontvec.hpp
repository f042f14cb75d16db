#pragma once

#include <vector>

#include "kbrw/logprofile.hpp"

namespace kbrw {

// Slope index k(beta): floor(1/beta), or 1/beta - 1 when 1/beta is an integer.
int slope_index_k(double beta);

struct SlopeParams {
  double beta = 0.0;
  double c_minus = kInf;

  static SlopeParams make(double beta, double c_minus);

  int k() const { return slope_index_k(beta); }
  bool beta_inverse_integral() const;
  // K(beta) = floor((1+c_minus)/beta) + 2; infinite when c_minus is.
  double cap_K() const;
  bool finite_K() const { return std::isfinite(c_minus); }

  // Allowed piece slopes: -(1-j*beta) for j = 0..K-1, plus c_minus + beta.
  bool slope_allowed(double slope, double tol = 1e-9) const;
};

// Non-increasing breakpoint vector x encoding the T-class profile f_x.
// When K = inf only entries above the support's lower edge matter; the
// truncation convention clamps everything deeper at that edge.
struct FrontVector {
  std::vector<double> x;
  bool truncation_valid = true;

  void validate() const;  // throws on increasing entries
};

// f_x: slopes -(1-j*beta) on [x_{j+1}, x_j] (capped below by -c_minus-beta),
// clipped at zero. The sup is attained at x_{k+1}.
PiecewiseProfile profile_from_vector(const FrontVector& fv, const SlopeParams& params);

// Clamp entries below the lower edge of f_x at that edge; f_x is unchanged.
FrontVector canonicalize(const FrontVector& fv, const SlopeParams& params);

// Vector-level action of s_sigma . r on T-class profiles:
// f_{psi_sigma(x)} = s_sigma(r(f_x)). Requires
// a_-(f_x) v x_{k+1} <= sigma <= a_+(f_x).
FrontVector psi_sigma(const FrontVector& fv, double sigma, const SlopeParams& params, double gamma);

// Front coordinates of g in T: v_j = x_j - x_{j+1} for j = 1..k, plus the
// upper edge and the full breakpoint vector. Rejects profiles with slopes
// outside the allowed set or sup != gamma (tolerance 1e-9).
struct VectorDecomposition {
  std::vector<double> v;
  double upper_edge = 0.0;
  FrontVector x;
};
VectorDecomposition vector_from_profile(const PiecewiseProfile& g, const SlopeParams& params,
                                        double gamma);

}  // namespace kbrw
