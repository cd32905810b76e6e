#include "hsaw/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "hsaw/errors.hpp"

namespace hsaw {

namespace {

// Exact per-length accumulator: machine-word fast path, flushed into
// arbitrary precision before any overflow is possible.
class ExactAcc {
public:
  explicit ExactAcc(int n_max) : chunk_(n_max + 1, 0), big_(n_max + 1) {}

  void bump(int n) {
    if (++chunk_[n] >= kFlushAt) {
      big_[n] += BigUint(chunk_[n]);
      chunk_[n] = 0;
    }
  }

  void flush() {
    for (std::size_t n = 0; n < chunk_.size(); ++n) {
      if (chunk_[n]) {
        big_[n] += BigUint(chunk_[n]);
        chunk_[n] = 0;
      }
    }
  }

  void merge_from(ExactAcc& other) {
    other.flush();
    for (std::size_t n = 0; n < big_.size(); ++n) big_[n] += other.big_[n];
  }

  std::vector<BigUint> take() {
    flush();
    return std::move(big_);
  }

private:
  static constexpr std::uint64_t kFlushAt = std::uint64_t{1} << 62;
  std::vector<std::uint64_t> chunk_;
  std::vector<BigUint> big_;
};

void require_horizon(const PlanarMap& map, int n_max) {
  if (n_max < 0) throw UsageError("n_max must be >= 0");
  if (n_max > map.complete_within())
    throw UsageError("n_max " + std::to_string(n_max) +
                     " exceeds the complete radius " +
                     std::to_string(map.complete_within()) +
                     " of the map; rebuild with a larger radius");
}

// Depth-first SAW extension counting lengths depth+1 .. n_max.
void saw_dfs(const PlanarMap& map, VertexId v, int depth, int n_max,
             std::vector<char>& visited, ExactAcc& acc) {
  if (depth == n_max) return;
  for (VertexId w : map.rotation(v)) {
    if (w == kNoVertex || visited[w]) continue;
    visited[w] = 1;
    acc.bump(depth + 1);
    saw_dfs(map, w, depth + 1, n_max, visited, acc);
    visited[w] = 0;
  }
}

// As above but only tallies endpoints of full-length walks, keyed by `key`.
void saw_endpoint_dfs(const PlanarMap& map, VertexId v, int depth, int n,
                      std::vector<char>& visited, ExactAcc& acc,
                      const std::function<int(VertexId)>& key) {
  for (VertexId w : map.rotation(v)) {
    if (w == kNoVertex || visited[w]) continue;
    if (depth + 1 == n) {
      int r = key(w);
      if (r >= 0) acc.bump(r);
      continue;
    }
    visited[w] = 1;
    saw_endpoint_dfs(map, w, depth + 1, n, visited, acc, key);
    visited[w] = 0;
  }
}

// All SAWs of length exactly `len` from the origin, in DFS order. `on_walk`
// fires once per SAW of every length 1..len.
std::vector<std::vector<VertexId>> saw_prefixes(
    const PlanarMap& map, int len,
    const std::function<void(int, VertexId)>& on_walk) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> visited(map.vertex_count(), 0);
  std::vector<VertexId> path{map.origin()};
  visited[map.origin()] = 1;

  auto rec = [&](auto&& self) -> void {
    int depth = static_cast<int>(path.size()) - 1;
    if (depth == len) {
      out.push_back(path);
      return;
    }
    for (VertexId w : map.rotation(path.back())) {
      if (w == kNoVertex || visited[w]) continue;
      visited[w] = 1;
      path.push_back(w);
      if (on_walk) on_walk(depth + 1, w);
      self(self);
      path.pop_back();
      visited[w] = 0;
    }
  };
  rec(rec);
  return out;
}

void run_workers(std::size_t jobs, int workers,
                 const std::function<void(int, std::size_t)>& body) {
  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < jobs; i += workers) body(w, i);
    });
  for (auto& t : pool) t.join();
}

constexpr int kPrefixLen = 3;

}  // namespace

CountTable count_saws(const PlanarMap& map, int n_max, int workers) {
  require_horizon(map, n_max);
  CountTable table;
  table.kind = CountTable::Kind::saw;
  if (n_max == 0) {
    table.values = {BigUint(1)};
    return table;
  }

  int plen = std::min(kPrefixLen, n_max);
  ExactAcc shallow(n_max);
  auto prefixes =
      saw_prefixes(map, plen, [&](int len, VertexId) { shallow.bump(len); });

  workers = std::max(1, workers);
  std::vector<ExactAcc> acc(workers, ExactAcc(n_max));
  if (n_max > plen) {
    std::vector<std::vector<char>> visited(
        workers, std::vector<char>(map.vertex_count(), 0));
    run_workers(prefixes.size(), workers, [&](int w, std::size_t i) {
      auto& vis = visited[w];
      for (VertexId v : prefixes[i]) vis[v] = 1;
      saw_dfs(map, prefixes[i].back(), plen, n_max, vis, acc[w]);
      for (VertexId v : prefixes[i]) vis[v] = 0;
    });
  }
  for (auto& a : acc) shallow.merge_from(a);
  table.values = shallow.take();
  table.values[0] = BigUint(1);
  return table;
}

namespace {

// SAP search: depth-first from the origin, closing cycles back to it. A
// branch is cut as soon as the remaining length budget cannot cover the
// graph distance back to the origin. Each undirected cycle is counted once
// via first-vertex < last-vertex canonicalisation.
struct SapSearch {
  const PlanarMap& map;
  int n_max;
  const std::vector<char>& adj_origin;

  void arrive(VertexId w, int t, VertexId first, ExactAcc& acc) const {
    if (t >= 2 && adj_origin[w] && first < w) acc.bump(t + 1);
  }

  bool viable(VertexId w, int t) const { return t + map.layer(w) <= n_max; }

  void dfs(VertexId v, int t, VertexId first, std::vector<char>& visited,
           ExactAcc& acc) const {
    for (VertexId w : map.rotation(v)) {
      if (w == kNoVertex || visited[w]) continue;
      int nt = t + 1;
      if (!viable(w, nt)) continue;
      arrive(w, nt, first, acc);
      visited[w] = 1;
      dfs(w, nt, first, visited, acc);
      visited[w] = 0;
    }
  }

  // Prefix collection with the same pruning; counts closures at depths
  // <= plen so the workers only ever count deeper ones.
  void collect(std::vector<VertexId>& path, std::vector<char>& visited,
               int plen, ExactAcc& acc,
               std::vector<std::vector<VertexId>>& out) const {
    int t = static_cast<int>(path.size()) - 1;
    if (t == plen) {
      out.push_back(path);
      return;
    }
    for (VertexId w : map.rotation(path.back())) {
      if (w == kNoVertex || visited[w]) continue;
      int nt = t + 1;
      if (!viable(w, nt)) continue;
      if (path.size() >= 2) arrive(w, nt, path[1], acc);
      visited[w] = 1;
      path.push_back(w);
      collect(path, visited, plen, acc, out);
      path.pop_back();
      visited[w] = 0;
    }
  }
};

std::vector<char> origin_adjacency(const PlanarMap& map) {
  std::vector<char> adj(map.vertex_count(), 0);
  for (VertexId w : map.rotation(map.origin()))
    if (w != kNoVertex) adj[w] = 1;
  return adj;
}

}  // namespace

CountTable count_saps(const PlanarMap& map, int n_max, int workers) {
  require_horizon(map, n_max);
  CountTable table;
  table.kind = CountTable::Kind::sap;
  table.values.assign(n_max + 1, BigUint());
  if (n_max < 3) return table;

  auto adj_o = origin_adjacency(map);
  SapSearch search{map, n_max, adj_o};

  int plen = std::min(kPrefixLen, n_max);
  ExactAcc shallow(n_max);
  std::vector<std::vector<VertexId>> prefixes;
  {
    std::vector<char> visited(map.vertex_count(), 0);
    std::vector<VertexId> path{map.origin()};
    visited[map.origin()] = 1;
    search.collect(path, visited, plen, shallow, prefixes);
  }

  workers = std::max(1, workers);
  std::vector<ExactAcc> acc(workers, ExactAcc(n_max));
  std::vector<std::vector<char>> visited(workers,
                                         std::vector<char>(map.vertex_count(), 0));
  run_workers(prefixes.size(), workers, [&](int w, std::size_t i) {
    auto& vis = visited[w];
    for (VertexId v : prefixes[i]) vis[v] = 1;
    search.dfs(prefixes[i].back(), plen, prefixes[i][1], vis, acc[w]);
    for (VertexId v : prefixes[i]) vis[v] = 0;
  });
  for (auto& a : acc) shallow.merge_from(a);
  table.values = shallow.take();
  return table;
}

BigUint count_saws_to(const PlanarMap& map, int n, VertexId y) {
  require_horizon(map, n);
  if (y < 0 || y >= map.vertex_count())
    throw UsageError("count_saws_to: vertex out of range");
  if (n == 0) return BigUint(y == map.origin() ? 1 : 0);

  ExactAcc acc(0);
  std::vector<char> visited(map.vertex_count(), 0);
  visited[map.origin()] = 1;
  saw_endpoint_dfs(map, map.origin(), 0, n, visited, acc,
                   [&](VertexId w) { return w == y ? 0 : -1; });
  return acc.take()[0];
}

std::vector<BigUint> endpoint_counts(const PlanarMap& map, int n) {
  require_horizon(map, n);
  std::vector<BigUint> out(map.vertex_count());
  if (n == 0) {
    out[map.origin()] = BigUint(1);
    return out;
  }
  ExactAcc acc(static_cast<int>(map.vertex_count()) - 1);
  std::vector<char> visited(map.vertex_count(), 0);
  visited[map.origin()] = 1;
  saw_endpoint_dfs(map, map.origin(), 0, n, visited, acc,
                   [](VertexId w) { return static_cast<int>(w); });
  return acc.take();
}

double DisplacementHistogram::prob_at_least(double eps) const {
  if (total.is_zero()) return 0.0;
  BigUint hits;
  for (std::size_t r = 0; r < by_distance.size(); ++r)
    if (static_cast<double>(r) + 1e-12 >= eps * n) hits += by_distance[r];
  return hits.to_double() / total.to_double();
}

DisplacementHistogram displacement_distribution(const PlanarMap& map, int n,
                                                int workers) {
  require_horizon(map, n);
  DisplacementHistogram hist;
  hist.n = n;
  if (n == 0) {
    hist.by_distance = {BigUint(1)};
    hist.total = BigUint(1);
    return hist;
  }

  int plen = std::min(kPrefixLen, n);
  ExactAcc shallow(n);
  auto prefixes = saw_prefixes(map, plen, [&](int len, VertexId end) {
    if (len == n) shallow.bump(map.layer(end));
  });

  workers = std::max(1, workers);
  std::vector<ExactAcc> acc(workers, ExactAcc(n));
  if (n > plen) {
    std::vector<std::vector<char>> visited(
        workers, std::vector<char>(map.vertex_count(), 0));
    run_workers(prefixes.size(), workers, [&](int w, std::size_t i) {
      auto& vis = visited[w];
      for (VertexId v : prefixes[i]) vis[v] = 1;
      saw_endpoint_dfs(map, prefixes[i].back(), plen, n, vis, acc[w],
                       [&](VertexId end) { return map.layer(end); });
      for (VertexId v : prefixes[i]) vis[v] = 0;
    });
  }
  for (auto& a : acc) shallow.merge_from(a);
  hist.by_distance = shallow.take();
  for (const auto& c : hist.by_distance) hist.total += c;
  return hist;
}

void enumerate_saps(const PlanarMap& map, int n_max,
                    const std::function<void(const Sap&)>& sink) {
  require_horizon(map, n_max);
  if (n_max < 3) return;
  auto adj_o = origin_adjacency(map);

  std::vector<char> visited(map.vertex_count(), 0);
  std::vector<VertexId> path{map.origin()};
  visited[map.origin()] = 1;

  auto emit = [&]() {
    Sap sap;
    sap.edges.reserve(path.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      sap.edges.emplace_back(std::min(path[i], path[i + 1]),
                             std::max(path[i], path[i + 1]));
    sap.edges.emplace_back(std::min(path.back(), path.front()),
                           std::max(path.back(), path.front()));
    std::sort(sap.edges.begin(), sap.edges.end());
    sink(sap);
  };

  auto rec = [&](auto&& self) -> void {
    int t = static_cast<int>(path.size()) - 1;
    for (VertexId w : map.rotation(path.back())) {
      if (w == kNoVertex || visited[w]) continue;
      int nt = t + 1;
      if (nt + map.layer(w) > n_max) continue;
      visited[w] = 1;
      path.push_back(w);
      if (nt >= 2 && adj_o[w] && path[1] < w) emit();
      self(self);
      path.pop_back();
      visited[w] = 0;
    }
  };
  rec(rec);
}

}  // namespace hsaw
