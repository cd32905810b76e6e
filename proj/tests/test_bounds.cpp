#include <doctest.h>

#include <cmath>
#include <vector>

#include "hsaw/bounds.hpp"
#include "hsaw/errors.hpp"

using namespace hsaw;

namespace {

std::vector<TessellationParams> hyperbolic_grid(int max_d, int max_k) {
  std::vector<TessellationParams> out;
  for (int d = 3; d <= max_d; ++d)
    for (int k = 3; k <= max_k; ++k)
      if (TessellationParams{d, k}.is_hyperbolic()) out.push_back({d, k});
  return out;
}

}  // namespace

TEST_CASE("cheeger constant closed form") {
  CHECK(cheeger({7, 3}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(cheeger({3, 7}) == doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));
  for (auto p : hyperbolic_grid(30, 30)) CHECK(cheeger(p) > 0.0);
  CHECK_THROWS_AS(cheeger({4, 4}), UsageError);
}

TEST_CASE("spectral radius upper bound") {
  CHECK(spectral_radius_upper({7, 3}) ==
        doctest::Approx(std::sqrt(44.0)).epsilon(1e-12));
  CHECK(spectral_radius_upper({3, 7}) ==
        doctest::Approx(std::sqrt(8.8)).epsilon(1e-12));
}

TEST_CASE("non-reversing growth bound values") {
  CHECK(mu_p2_upper({7, 3}) ==
        doctest::Approx((std::sqrt(44.0) + std::sqrt(20.0)) / 2).epsilon(1e-12));
  CHECK(mu_p2_upper({7, 3}) == doctest::Approx(5.5527).epsilon(1e-4));
  CHECK(mu_p2_upper({3, 7}) == doctest::Approx(1.9305).epsilon(1e-4));
}

TEST_CASE("non-reversing branch validity") {
  // At the Mohar bound, R^2 - 4(d-1) = 4(d-2)/(k-2) exactly.
  for (auto p : hyperbolic_grid(40, 40)) {
    double R = spectral_radius_upper(p);
    double lhs = R * R - 4.0 * (p.d - 1);
    double rhs = 4.0 * (p.d - 2) / (p.k - 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    CHECK(non_reversing_growth_at(p, R).has_value());
    CHECK(mu_p2_upper(p) >= std::sqrt(p.d - 1.0));
  }
  // Below the branch point the formula must report invalidity, not clamp.
  CHECK_FALSE(non_reversing_growth_at({7, 3}, 1.0).has_value());
}

TEST_CASE("non-reversing bound is increasing in R") {
  for (auto p : {TessellationParams{7, 3}, {4, 5}, {3, 9}}) {
    double R = spectral_radius_upper(p);
    double at_bound = *non_reversing_growth_at(p, R);
    for (double r = R; r >= 2 * std::sqrt(p.d - 1.0); r -= 0.05) {
      auto v = non_reversing_growth_at(p, r);
      REQUIRE(v.has_value());
      REQUIRE(*v <= at_bound + 1e-12);
    }
  }
}

TEST_CASE("mixed percolation bound reproduces tabulated values") {
  auto b73 = mu_p_upper_mixed({7, 3});
  CHECK(b73.value == doctest::Approx(4.9575).epsilon(1e-4));
  auto b45 = mu_p_upper_mixed({4, 5});
  CHECK(b45.value == doctest::Approx(2.60371).epsilon(1e-4));
  // The (4,5) objective minimises at p = 6/7 (root of the log-derivative).
  CHECK(b45.p_star == doctest::Approx(6.0 / 7.0).epsilon(1e-6));
}

TEST_CASE("optimizer agrees with dense grid scans") {
  // Dense scan on a spread of parameter pairs; coarse scan everywhere.
  for (auto p : {TessellationParams{7, 3}, {3, 7}, {3, 8}, {4, 5}, {5, 4},
                 {8, 3}, {4, 6}, {10, 10}, {50, 3}, {3, 50}, {50, 50}}) {
    double grid = mu_p_upper_mixed_grid(p, 1000000);
    CHECK(mu_p_upper_mixed(p).value == doctest::Approx(grid).epsilon(1e-6));
  }
  for (auto p : hyperbolic_grid(50, 50)) {
    double grid = mu_p_upper_mixed_grid(p, 10000);
    CHECK(mu_p_upper_mixed(p).value <= grid + 1e-9);
    CHECK(mu_p_upper_mixed(p).value == doctest::Approx(grid).epsilon(2e-4));
  }
}

TEST_CASE("mixed bound decreases in d and peaks at (7,3)") {
  double prev = 1e9;
  for (int d = 7; d <= 40; ++d) {
    double v = mu_p_upper_mixed({d, 3}).value;
    CHECK(v < prev);
    prev = v;
  }
  double peak = mu_p_upper_mixed({7, 3}).value;
  CHECK(peak <= 5.0);
  for (auto p : hyperbolic_grid(50, 50))
    CHECK(mu_p_upper_mixed(p).value <= peak + 1e-9);
}

TEST_CASE("degree-3 polygon bound") {
  CHECK(mu_p_upper_deg3(6) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mu_p_upper_deg3(7) == doctest::Approx(1.88988).epsilon(1e-4));
  CHECK(mu_p_upper_deg3(8) == doctest::Approx(1.75477).epsilon(1e-4));
  CHECK_THROWS_AS(mu_p_upper_deg3(5), UsageError);
  double prev = mu_p_upper_deg3(7);
  for (int k = 8; k <= 60; ++k) {
    double v = mu_p_upper_deg3(k);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("polygon lower bound (k-1)/(k-2)") {
  auto r3 = mu_p_lower({7, 3});
  CHECK(r3.num == 2);
  CHECK(r3.den == 1);
  auto r7 = mu_p_lower({3, 7});
  CHECK(r7.num == 6);
  CHECK(r7.den == 5);
  for (int k = 7; k <= 60; ++k)
    CHECK(mu_p_lower({3, k}).value() <= mu_p_upper_deg3(k) + 1e-12);
}

TEST_CASE("closed-form walk lower bounds") {
  auto b83 = mu_w_lower_closed({8, 3});
  CHECK(b83.rule == "k3");
  CHECK(*b83.value == doctest::Approx(std::sqrt(30.0)).epsilon(1e-12));
  auto b311 = mu_w_lower_closed({3, 11});
  CHECK(b311.rule == "deg3");
  CHECK(*b311.value == doctest::Approx(std::pow(2.0, 6.0 / 7.0)).epsilon(1e-12));
  auto b46 = mu_w_lower_closed({4, 6});
  CHECK(b46.rule == "k_ge6");
  CHECK(*b46.value == doctest::Approx(std::cbrt(18.0)).epsilon(1e-12));
  auto b54 = mu_w_lower_closed({5, 4});
  CHECK(b54.rule == "k4");
  CHECK(*b54.value == doctest::Approx(std::cbrt(4.0 * 9.0)).epsilon(1e-12));
  auto b45 = mu_w_lower_closed({4, 5});
  CHECK(b45.rule == "none");
  CHECK_FALSE(b45.value.has_value());
}

TEST_CASE("closed-form bounds sit below the trivial upper bound") {
  for (auto p : hyperbolic_grid(50, 50)) {
    if (p.d < 4) continue;
    auto b = mu_w_lower_closed(p);
    if (b.value) CHECK(*b.value < p.d - 1.0);
  }
}

TEST_CASE("bounds report for the four tabulated tessellations") {
  auto r73 = bounds_report({7, 3});
  CHECK(*r73.mu_w_lower_eigen == doctest::Approx(5.13912).epsilon(1e-4));
  CHECK(r73.verdict_mu_p_lt_mu_w);
  CHECK_FALSE(r73.verdict_exponent_condition);

  auto r45 = bounds_report({4, 5});
  CHECK(*r45.mu_w_lower_eigen == doctest::Approx(2.86619).epsilon(1e-4));
  CHECK(r45.verdict_mu_p_lt_mu_w);
  CHECK(r45.verdict_exponent_condition);

  auto r37 = bounds_report({3, 7});
  CHECK(*r37.mu_w_lower_eigen == doctest::Approx(1.92546).epsilon(1e-4));
  CHECK(*r37.best_mu_p_upper() == doctest::Approx(1.88988).epsilon(1e-4));
  CHECK(r37.verdict_mu_p_lt_mu_w);
  CHECK_FALSE(r37.verdict_exponent_condition);

  auto r38 = bounds_report({3, 8});
  CHECK(*r38.mu_w_lower_eigen == doctest::Approx(1.96552).epsilon(1e-4));
  CHECK(r38.verdict_mu_p_lt_mu_w);
  CHECK(r38.verdict_exponent_condition);
}

TEST_CASE("report bounds are ordered wherever both sides exist") {
  for (auto p : hyperbolic_grid(14, 14)) {
    auto rep = bounds_report(p);
    auto p_up = rep.best_mu_p_upper();
    REQUIRE(p_up.has_value());
    CHECK(rep.mu_p_lower.value() <= *p_up + 1e-9);
    auto w_lo = rep.best_mu_w_lower();
    if (w_lo) CHECK(*w_lo <= rep.mu_w_upper + 1e-9);
  }
}

TEST_CASE("bounds report wiring") {
  auto rep = bounds_report({9, 3});
  CHECK(rep.mu_w_upper == 8.0);
  CHECK(rep.mu_w_lower_eigen.has_value());  // parametric family
  CHECK(*rep.best_mu_w_lower() >= *rep.mu_w_lower_closed.value);
  CHECK(rep.mu_p_lower.value() <= *rep.best_mu_p_upper());
  auto rep55 = bounds_report({5, 5});
  CHECK_FALSE(rep55.mu_w_lower_eigen.has_value());
  CHECK_FALSE(rep55.verdict_mu_p_lt_mu_w);  // nothing to certify with
}
