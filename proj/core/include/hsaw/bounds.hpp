#pragma once

#include <optional>
#include <string>

#include "hsaw/params.hpp"

namespace hsaw {

// Edge Cheeger constant of H(d,k): (d-2) sqrt(1 - 4/((d-2)(k-2))).
double cheeger(TessellationParams params);

// Upper bound on the spectral radius via h^2 + R^2 <= d^2.
double spectral_radius_upper(TessellationParams params);

// Growth rate of non-reversing walks, (R + sqrt(R^2 - 4(d-1)))/2, evaluated
// at an explicit R. Increasing in R, so feeding the spectral-radius upper
// bound gives an upper bound. Returns nothing when R^2 < 4(d-1) (the formula
// branch is invalid there; never the case at the Mohar bound for hyperbolic
// parameters, but callers probing other R must see the failure).
std::optional<double> non_reversing_growth_at(TessellationParams params, double R);

// non_reversing_growth_at at the Mohar bound. Throws InvariantError if the
// branch were ever invalid.
double mu_p2_upper(TessellationParams params);

struct MixedBound {
  double value = 0;   // min over p of ((1-p)^{1/(k-2)} p (1-(1-p)^r))^{-1}
  double p_star = 0;  // argmin
};

// Polygon growth bound from mixed site/bond percolation;
// r = ((k-2)(d-2)-3)/(k-2).
MixedBound mu_p_upper_mixed(TessellationParams params);

// Same objective evaluated on a uniform grid of `points` interior points;
// used as an independent check of the optimizer.
double mu_p_upper_mixed_grid(TessellationParams params, int points);

// Degree-3 polygon growth bound N_k = (k-4) / (k-5)^{(k-5)/(k-4)}, k >= 6.
double mu_p_upper_deg3(int k);

struct RationalBound {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

// (k-1)/(k-2), exact.
RationalBound mu_p_lower(TessellationParams params);

struct ClosedFormBound {
  std::optional<double> value;
  std::string rule;  // "k3", "k4", "k_ge6", "deg3", "none"
};

// Best closed-form lower bound on the walk connective constant:
//   k=3:          sqrt((d-2)(d-3))
//   k=4:          ((d-1)(d-2)^2)^{1/3}
//   k>=6, d>3:    ((d-1)^{k-4} (d-2))^{1/(k-3)}
//   d=3 (k>=7):   2^{(k-5)/(k-4)}
// k=5 with d>3 has no closed form here; eigenvalue bounds cover it.
ClosedFormBound mu_w_lower_closed(TessellationParams params);

struct BoundsReport {
  TessellationParams params;
  double h = 0;
  double R_upper = 0;
  std::optional<double> mu_p2_upper;
  MixedBound mu_p_upper_mixed;
  std::optional<double> mu_p_upper_deg3;  // d == 3 only
  RationalBound mu_p_lower;
  ClosedFormBound mu_w_lower_closed;
  std::optional<double> mu_w_lower_eigen;  // recurrence systems, when defined
  double mu_w_upper = 0;                   // d - 1

  std::optional<double> best_mu_p_upper() const;
  std::optional<double> best_mu_w_lower() const;

  // Verdicts are certification flags: true means the computed bounds prove
  // the inequality, false means they do not (not that it fails).
  bool verdict_mu_p_lt_mu_w = false;
  bool verdict_exponent_condition = false;
};

BoundsReport bounds_report(TessellationParams params);

}  // namespace hsaw
