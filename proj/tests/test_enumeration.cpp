#include <doctest.h>

#include <cmath>
#include <set>

#include "hsaw/bounds.hpp"
#include "hsaw/enumeration.hpp"
#include "hsaw/errors.hpp"
#include "hsaw/planar_map.hpp"
#include "support/naive_enum.hpp"

using namespace hsaw;

namespace {

const std::vector<TessellationParams> kPairs = {
    {7, 3}, {3, 7}, {4, 5}, {5, 4}, {3, 8}, {8, 3}};

}  // namespace

TEST_CASE("first two walk counts are d and d(d-1)") {
  for (auto p : kPairs) {
    auto map = PlanarMap::build_ball(p, 2);
    auto table = count_saws(map, 2);
    CHECK(table.values[0].str() == "1");
    CHECK(table.values[1].str() == std::to_string(p.d));
    CHECK(table.values[2].str() == std::to_string(p.d * (p.d - 1)));
  }
}

TEST_CASE("optimized enumerator equals the brute-force oracle") {
  for (auto p : kPairs) {
    CAPTURE(p.d);
    CAPTURE(p.k);
    int n = 6;
    auto map = PlanarMap::build_ball(p, n);
    auto oracle = naive::enumerate(map, n);
    auto saws = count_saws(map, n);
    auto saps = count_saps(map, n);
    for (int i = 0; i <= n; ++i) {
      REQUIRE(saws.values[i].str() == std::to_string(oracle.saws[i]));
      REQUIRE(saps.values[i].str() == std::to_string(oracle.saps[i]));
    }
  }
}

TEST_CASE("polygon counts vanish below the girth and equal d at it") {
  for (auto p : kPairs) {
    auto map = PlanarMap::build_ball(p, p.k + 1);
    CHECK(naive::girth_through_origin(map) == p.k);
    auto saps = count_saps(map, p.k);
    for (int n = 1; n < p.k; ++n) CHECK(saps.values[n].is_zero());
    CHECK(saps.values[p.k].str() == std::to_string(p.d));
  }
}

TEST_CASE("H(3,7) polygon counts: zero for 3..6, three at 7") {
  auto map = PlanarMap::build_ball({3, 7}, 10);
  auto saps = count_saps(map, 10);
  for (int n = 3; n <= 6; ++n) CHECK(saps.values[n].is_zero());
  CHECK(saps.values[7].str() == "3");
}

TEST_CASE("worker count never changes counts") {
  auto map = PlanarMap::build_ball({7, 3}, 7);
  auto one = count_saws(map, 7, 1);
  auto two = count_saws(map, 7, 2);
  auto three = count_saws(map, 7, 3);
  for (int n = 0; n <= 7; ++n) {
    CHECK(one.values[n] == two.values[n]);
    CHECK(one.values[n] == three.values[n]);
  }
  auto p1 = count_saps(map, 7, 1);
  auto p2 = count_saps(map, 7, 2);
  for (int n = 0; n <= 7; ++n) CHECK(p1.values[n] == p2.values[n]);
}

TEST_CASE("horizon beyond the complete radius is refused") {
  auto map = PlanarMap::build_ball({7, 3}, 3);
  CHECK_THROWS_AS(count_saws(map, 4), UsageError);
  CHECK_THROWS_AS(count_saps(map, 4), UsageError);
  CHECK_THROWS_AS(displacement_distribution(map, 4), UsageError);
}

TEST_CASE("endpoint counts partition the walk count") {
  auto map = PlanarMap::build_ball({4, 5}, 6);
  for (int n : {1, 3, 6}) {
    auto per = endpoint_counts(map, n);
    BigUint sum;
    for (const auto& c : per) sum += c;
    CHECK(sum == count_saws(map, n).values[n]);
  }
}

TEST_CASE("no walk of positive length returns to the origin") {
  auto map = PlanarMap::build_ball({5, 4}, 5);
  for (int n : {1, 2, 5}) CHECK(count_saws_to(map, n, map.origin()).is_zero());
  CHECK(count_saws_to(map, 0, map.origin()).str() == "1");
}

TEST_CASE("endpoint counts obey the uniform non-reversing bound") {
  // max_y c_n(o,y) <= d^2/(d-1) * U^(n+k-1) with U the non-reversing growth
  // bound; crude but must hold at every enumerated length.
  auto map = PlanarMap::build_ball({7, 3}, 7);
  double U = mu_p2_upper({7, 3});
  for (int n : {3, 5, 7}) {
    auto per = endpoint_counts(map, n);
    double cap = 49.0 / 6.0 * std::pow(U, n + 3 - 1);
    for (const auto& c : per) CHECK(c.to_double() <= cap);
  }
}

TEST_CASE("walk counts grow by at most d-1 per step") {
  for (auto p : kPairs) {
    auto map = PlanarMap::build_ball(p, 7);
    auto table = count_saws(map, 7);
    for (int n = 1; n < 7; ++n) {
      BigUint cap = table.values[n];
      cap *= static_cast<std::uint32_t>(p.d - 1);
      CHECK(table.values[n + 1] <= cap);
    }
  }
}

TEST_CASE("submultiplicativity of walk counts") {
  auto map = PlanarMap::build_ball({7, 3}, 8);
  auto table = count_saws(map, 8);
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; n + m <= 8; ++m)
      CHECK(table.values[n + m] <= table.values[n] * table.values[m]);
}

TEST_CASE("displacement histogram sums to the walk count") {
  auto map = PlanarMap::build_ball({3, 7}, 9);
  auto saws = count_saws(map, 9);
  for (int n : {1, 4, 9}) {
    auto hist = displacement_distribution(map, n);
    CHECK(hist.total == saws.values[n]);
    BigUint sum;
    for (const auto& c : hist.by_distance) sum += c;
    CHECK(sum == hist.total);
  }
}

TEST_CASE("displacement at length one is concentrated at distance one") {
  auto map = PlanarMap::build_ball({4, 5}, 2);
  auto hist = displacement_distribution(map, 1);
  CHECK(hist.prob_at_least(0.5) == doctest::Approx(1.0));
  CHECK(hist.by_distance[1].str() == std::to_string(4));
}

TEST_CASE("geodesic endpoints never exceed the walk count") {
  auto map = PlanarMap::build_ball({7, 3}, 5);
  auto saws = count_saws(map, 5);
  auto hist = displacement_distribution(map, 5);
  CHECK(hist.by_distance[5] <= saws.values[5]);
}

TEST_CASE("sap stream matches counts, is duplicate-free and canonical") {
  for (auto p : {TessellationParams{7, 3}, {3, 7}, {4, 5}}) {
    int n = p.k == 7 ? 10 : 8;
    auto map = PlanarMap::build_ball(p, n);
    auto saps = count_saps(map, n);
    std::set<Sap> seen;
    std::vector<int> per_length(n + 1, 0);
    enumerate_saps(map, n, [&](const Sap& sap) {
      REQUIRE(seen.insert(sap).second);  // no duplicates
      // canonical: sorted normalized edges, origin present
      bool has_origin = false;
      for (auto [u, v] : sap.edges) {
        REQUIRE(u < v);
        has_origin = has_origin || u == map.origin();
      }
      REQUIRE(has_origin);
      per_length[sap.length()]++;
    });
    for (int len = 0; len <= n; ++len)
      REQUIRE(saps.values[len].str() == std::to_string(per_length[len]));
  }
}

TEST_CASE("sap stream equals the oracle's edge-set collection") {
  auto map = PlanarMap::build_ball({7, 3}, 6);
  auto oracle = naive::enumerate(map, 6);
  std::set<std::vector<std::pair<int, int>>> stream;
  enumerate_saps(map, 6, [&](const Sap& sap) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : sap.edges) edges.emplace_back(u, v);
    stream.insert(edges);
  });
  CHECK(stream == oracle.sap_edge_sets);
}

TEST_CASE("closed return counts are even") {
  for (auto p : kPairs) {
    auto map = PlanarMap::build_ball(p, 6);
    auto oracle = naive::enumerate(map, 6);
    for (int n = 0; n <= 6; ++n) CHECK(oracle.closed_returns[n] % 2 == 0);
  }
}
