#include "hsaw/bounds.hpp"

#include <cmath>

#include "hsaw/errors.hpp"
#include "hsaw/transfer.hpp"

namespace hsaw {

double cheeger(TessellationParams params) {
  params.ensure_hyperbolic();
  double dd = params.d, kk = params.k;
  return (dd - 2) * std::sqrt(1.0 - 4.0 / ((dd - 2) * (kk - 2)));
}

double spectral_radius_upper(TessellationParams params) {
  double h = cheeger(params);
  double dd = params.d;
  return std::sqrt(dd * dd - h * h);
}

std::optional<double> non_reversing_growth_at(TessellationParams params,
                                              double R) {
  double disc = R * R - 4.0 * (params.d - 1);
  if (disc < 0) return std::nullopt;
  return (R + std::sqrt(disc)) / 2.0;
}

double mu_p2_upper(TessellationParams params) {
  params.ensure_hyperbolic();
  auto v = non_reversing_growth_at(params, spectral_radius_upper(params));
  // At the Mohar bound, R^2 - 4(d-1) = 4(d-2)/(k-2) > 0 for hyperbolic
  // parameters, so the branch is always valid here.
  if (!v)
    throw InvariantError("mu_p2_upper: formula branch invalid at the Mohar bound");
  return *v;
}

namespace {

// log of the mixed-percolation objective; minimised over p in (0,1).
double mixed_objective_log(double p, double k, double r) {
  double l1p = std::log1p(-p);  // log(1-p)
  return -(l1p / (k - 2) + std::log(p) + std::log(-std::expm1(r * l1p)));
}

}  // namespace

MixedBound mu_p_upper_mixed(TessellationParams params) {
  params.ensure_hyperbolic();
  double kk = params.k;
  double r = ((kk - 2) * (params.d - 2) - 3) / (kk - 2);

  auto f = [&](double p) { return mixed_objective_log(p, kk, r); };

  // Coarse global scan, then golden-section refinement. The scan seeds the
  // bracket so no unimodality assumption is needed.
  const int scan = 10000;
  double best_p = 0.5, best_f = f(0.5);
  for (int i = 1; i < scan; ++i) {
    double p = static_cast<double>(i) / scan;
    double v = f(p);
    if (v < best_f) {
      best_f = v;
      best_p = p;
    }
  }
  double a = std::max(1e-12, best_p - 2.0 / scan);
  double b = std::min(1.0 - 1e-12, best_p + 2.0 / scan);

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  MixedBound out;
  out.p_star = (a + b) / 2;
  out.value = std::exp(f(out.p_star));
  return out;
}

double mu_p_upper_mixed_grid(TessellationParams params, int points) {
  params.ensure_hyperbolic();
  double kk = params.k;
  double r = ((kk - 2) * (params.d - 2) - 3) / (kk - 2);
  double best = mixed_objective_log(0.5, kk, r);
  for (int i = 1; i < points; ++i) {
    double p = static_cast<double>(i) / points;
    best = std::min(best, mixed_objective_log(p, kk, r));
  }
  return std::exp(best);
}

double mu_p_upper_deg3(int k) {
  if (k < 6)
    throw UsageError("mu_p_upper_deg3 requires k >= 6, got " + std::to_string(k));
  double kk = k;
  return (kk - 4) / std::pow(kk - 5, (kk - 5) / (kk - 4));
}

RationalBound mu_p_lower(TessellationParams params) {
  params.ensure_hyperbolic();
  return {params.k - 1, params.k - 2};
}

ClosedFormBound mu_w_lower_closed(TessellationParams params) {
  params.ensure_hyperbolic();
  ClosedFormBound out;
  double dd = params.d, kk = params.k;
  if (params.d == 3) {
    out.rule = "deg3";
    out.value = std::pow(2.0, (kk - 5) / (kk - 4));
  } else if (params.k == 3) {
    out.rule = "k3";
    out.value = std::sqrt((dd - 2) * (dd - 3));
  } else if (params.k == 4) {
    out.rule = "k4";
    out.value = std::cbrt((dd - 1) * (dd - 2) * (dd - 2));
  } else if (params.k >= 6) {
    out.rule = "k_ge6";
    out.value =
        std::pow(std::pow(dd - 1, kk - 4) * (dd - 2), 1.0 / (kk - 3));
  } else {
    out.rule = "none";  // k == 5, d > 3: eigenvalue bounds only
  }
  return out;
}

std::optional<double> BoundsReport::best_mu_p_upper() const {
  std::optional<double> best = mu_p_upper_mixed.value;
  if (mu_p_upper_deg3 && *mu_p_upper_deg3 < *best) best = mu_p_upper_deg3;
  return best;
}

std::optional<double> BoundsReport::best_mu_w_lower() const {
  std::optional<double> best = mu_w_lower_closed.value;
  if (mu_w_lower_eigen && (!best || *mu_w_lower_eigen > *best))
    best = mu_w_lower_eigen;
  return best;
}

namespace {

std::optional<double> eigen_lower(TessellationParams params) {
  // The recurrence systems cover the four tabulated tessellations plus the
  // parametric triangular family.
  if (params.k == 3 && params.d >= 7)
    return perron_root(parametric_system(params.d)).lambda;
  if (params.d == 4 && params.k == 5)
    return perron_root(builtin_system("h45")).lambda;
  if (params.d == 3 && params.k == 7)
    return perron_root(builtin_system("h37")).lambda;
  if (params.d == 3 && params.k == 8)
    return perron_root(builtin_system("h38")).lambda;
  return std::nullopt;
}

}  // namespace

BoundsReport bounds_report(TessellationParams params) {
  params.ensure_hyperbolic();
  BoundsReport rep;
  rep.params = params;
  rep.h = cheeger(params);
  rep.R_upper = spectral_radius_upper(params);
  rep.mu_p2_upper = hsaw::mu_p2_upper(params);
  rep.mu_p_upper_mixed = hsaw::mu_p_upper_mixed(params);
  if (params.d == 3) rep.mu_p_upper_deg3 = hsaw::mu_p_upper_deg3(params.k);
  rep.mu_p_lower = hsaw::mu_p_lower(params);
  rep.mu_w_lower_closed = hsaw::mu_w_lower_closed(params);
  rep.mu_w_lower_eigen = eigen_lower(params);
  rep.mu_w_upper = params.d - 1;

  auto p_up = rep.best_mu_p_upper();
  auto w_lo = rep.best_mu_w_lower();
  rep.verdict_mu_p_lt_mu_w = p_up && w_lo && *p_up < *w_lo;
  rep.verdict_exponent_condition =
      rep.mu_p2_upper && w_lo && *rep.mu_p2_upper < *w_lo;
  return rep;
}

}  // namespace hsaw
