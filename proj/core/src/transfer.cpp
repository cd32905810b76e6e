#include "hsaw/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsaw/errors.hpp"

namespace hsaw {

namespace {

RecurrenceSystem make(std::string name,
                      std::vector<std::vector<std::int64_t>> matrix,
                      std::vector<std::int64_t> initial) {
  RecurrenceSystem s;
  s.name = std::move(name);
  s.dim = static_cast<int>(initial.size());
  s.matrix = std::move(matrix);
  s.initial = std::move(initial);
  if (static_cast<int>(s.matrix.size()) != s.dim)
    throw InvariantError("recurrence system dimension mismatch");
  for (const auto& row : s.matrix)
    if (static_cast<int>(row.size()) != s.dim)
      throw InvariantError("recurrence system row length mismatch");
  return s;
}

}  // namespace

RecurrenceSystem parametric_system(int d) {
  if (d < 7)
    throw UsageError("parametric_system requires d >= 7, got " + std::to_string(d));
  std::int64_t a = d - 6, b = d - 5;
  return make("param(" + std::to_string(d) + ")",
              {{2, a, 0, 2}, {2, b, 2, 0}, {2, a, 0, 1}, {2, b, 1, 0}},
              {3, 4, 3, 4});
}

RecurrenceSystem builtin_system(std::string_view name) {
  if (name == "h73")
    return make("h73",
                {{2, 1, 0, 2}, {2, 2, 2, 0}, {2, 1, 0, 1}, {2, 2, 1, 0}},
                {3, 4, 3, 4});
  if (name == "h45")
    return make("h45", {{1, 0, 2}, {1, 0, 1}, {2, 1, 0}}, {1, 1, 2});
  if (name == "h37")
    // States a..h; each row lists which previous states feed the next value.
    return make("h37",
                {
                    {0, 0, 1, 0, 0, 1, 0, 0},  // a <- c + f
                    {0, 0, 1, 0, 0, 0, 0, 0},  // b <- c
                    {1, 0, 0, 1, 0, 0, 0, 0},  // c <- a + d
                    {1, 0, 0, 0, 1, 0, 0, 0},  // d <- a + e
                    {0, 0, 0, 0, 0, 1, 0, 0},  // e <- f
                    {1, 0, 0, 0, 0, 0, 1, 0},  // f <- a + g
                    {1, 0, 0, 0, 0, 0, 0, 1},  // g <- a + h
                    {1, 1, 0, 0, 0, 0, 0, 0},  // h <- a + b
                },
                {2, 1, 2, 2, 1, 2, 2, 2});
  if (name == "h38")
    // States a..j.
    return make("h38",
                {
                    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0},  // a <- c + g
                    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},  // b <- c
                    {1, 0, 0, 1, 0, 0, 0, 0, 0, 0},  // c <- a + d
                    {1, 0, 0, 0, 1, 0, 0, 0, 0, 0},  // d <- a + e
                    {1, 0, 0, 0, 0, 1, 0, 0, 0, 0},  // e <- a + f
                    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},  // f <- g
                    {1, 0, 0, 0, 0, 0, 0, 1, 0, 0},  // g <- a + h
                    {1, 0, 0, 0, 0, 0, 0, 0, 1, 0},  // h <- a + i
                    {1, 0, 0, 0, 0, 0, 0, 0, 0, 1},  // i <- a + j
                    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},  // j <- a + b
                },
                {2, 1, 2, 2, 2, 1, 2, 2, 2, 2});
  throw UsageError("unknown recurrence system '" + std::string(name) +
                   "' (expected h73, h45, h37 or h38)");
}

std::vector<std::string> builtin_system_names() {
  return {"h73", "h45", "h37", "h38"};
}

bool is_primitive(const std::vector<std::vector<std::int64_t>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return false;
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reach[i][j] = m[i][j] > 0;
  // Wielandt bound: primitive iff M^(n^2 - 2n + 2) is positive.
  int power = n * n - 2 * n + 2;
  auto cur = reach;
  for (int step = 1; step < power; ++step) {
    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (cur[i][l])
          for (int j = 0; j < n; ++j) next[i][j] |= reach[l][j];
    cur = std::move(next);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!cur[i][j]) return false;
  return true;
}

PerronResult perron_root(const RecurrenceSystem& system) {
  if (!is_primitive(system.matrix))
    throw UsageError("perron_root: matrix of '" + system.name +
                     "' is not primitive");
  const int n = system.dim;
  std::vector<long double> v(system.initial.begin(), system.initial.end());
  std::vector<long double> w(n);

  PerronResult res;
  const int cap = 200000;
  long double lambda = 0, resid = 0, vmax = 0;
  int it = 0;
  for (; it < cap; ++it) {
    long double dot_wv = 0, dot_vv = 0;
    for (int i = 0; i < n; ++i) {
      long double s = 0;
      for (int j = 0; j < n; ++j) s += system.matrix[i][j] * v[j];
      w[i] = s;
      dot_wv += s * v[i];
      dot_vv += v[i] * v[i];
    }
    lambda = dot_wv / dot_vv;  // Rayleigh quotient
    resid = 0;
    vmax = 0;
    for (int i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(w[i] - lambda * v[i]));
      vmax = std::max(vmax, std::abs(v[i]));
    }
    if (resid <= 1e-12L * vmax) break;
    long double norm = 0;
    for (int i = 0; i < n; ++i) norm = std::max(norm, std::abs(w[i]));
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  res.iterations = it + 1;
  res.lambda = static_cast<double>(lambda);
  res.residual = static_cast<double>(resid);
  if (it >= cap)
    throw InvariantError("perron_root: no convergence after " +
                         std::to_string(cap) + " iterations; residual " +
                         std::to_string(res.residual));
  if (res.residual > 1e-10 * static_cast<double>(vmax))
    throw InvariantError("perron_root: residual above tolerance");
  return res;
}

std::vector<long long> characteristic_polynomial(const RecurrenceSystem& system) {
  // Faddeev-LeVerrier in exact 128-bit integers. The divisions are exact.
  const int n = system.dim;
  if (n > 10)
    throw UsageError("characteristic_polynomial: dimension above 10");
  using I = __int128;
  std::vector<std::vector<I>> a(n, std::vector<I>(n, 0)), m(n, std::vector<I>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = system.matrix[i][j];

  std::vector<I> coeff(n + 1, 0);
  coeff[n] = 1;  // monic
  // m_1 = A, c_{n-1} = -tr(A); m_k = A (m_{k-1} + c_{n-k+1} I)
  std::vector<std::vector<I>> mk = a;
  for (int step = 1; step <= n; ++step) {
    I tr = 0;
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    I c = -tr / step;
    if (c * step != -tr)
      throw InvariantError("characteristic_polynomial: inexact division");
    coeff[n - step] = static_cast<long long>(c);
    if (step == n) break;
    for (int i = 0; i < n; ++i) mk[i][i] += c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        I s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        m[i][j] = s;
      }
    std::swap(mk, m);
  }
  std::vector<long long> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = coeff[i];
  return out;
}

double perron_root_poly(const RecurrenceSystem& system) {
  auto poly = characteristic_polynomial(system);
  const int n = system.dim;
  auto eval = [&](long double x) {
    long double r = 0;
    for (int i = n; i >= 0; --i) r = r * x + poly[i];
    return r;
  };

  // Row-sum bounds enclose the Perron root of a nonnegative matrix, and the
  // monic polynomial has no real root beyond it.
  long double lo = std::numeric_limits<long double>::max(), hi = 0;
  for (const auto& row : system.matrix) {
    long double s = 0;
    for (auto x : row) s += x;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  hi += 1;
  lo = std::max(0.0L, lo - 1);

  // Find a sign change scanning down from hi, then bisect.
  long double a = hi, b = hi;
  const int grid = 4096;
  for (int i = 1; i <= grid; ++i) {
    long double x = hi - (hi - lo) * i / grid;
    if (eval(x) < 0) {
      a = x;
      break;
    }
    b = x;
  }
  if (eval(a) >= 0)
    throw InvariantError("perron_root_poly: no sign change located");
  for (int i = 0; i < 200; ++i) {
    long double mid = (a + b) / 2;
    (eval(mid) < 0 ? a : b) = mid;
  }
  return static_cast<double>((a + b) / 2);
}

std::vector<std::vector<BigUint>> iterate_sequences(const RecurrenceSystem& system,
                                                    int n) {
  if (n < 1) throw UsageError("iterate_sequences: n must be >= 1");
  const int dim = system.dim;
  std::vector<std::vector<BigUint>> out;
  out.reserve(n);
  std::vector<BigUint> cur(dim);
  for (int i = 0; i < dim; ++i)
    cur[i] = BigUint(static_cast<std::uint64_t>(system.initial[i]));
  out.push_back(cur);
  for (int step = 2; step <= n; ++step) {
    std::vector<BigUint> next(dim);
    for (int i = 0; i < dim; ++i) {
      BigUint s;
      for (int j = 0; j < dim; ++j) {
        if (system.matrix[i][j] == 0) continue;
        BigUint term = cur[j];
        term *= static_cast<std::uint32_t>(system.matrix[i][j]);
        s += term;
      }
      next[i] = std::move(s);
    }
    cur = std::move(next);
    out.push_back(cur);
  }

  if (system.name == "h73" || system.name.starts_with("param(")) {
    for (const auto& x : out) {
      const BigUint &a = x[0], &b = x[1], &c = x[2], &d = x[3];
      BigUint c2 = c;
      c2 *= 2;
      if (a > b || c > d || d > b || b > c2)
        throw InvariantError("iterate_sequences: comparison inequality violated");
    }
  }
  return out;
}

long long g_at_d_minus_1(long long d) {
  return 6 * d * d - 10 * d + 2;
}

namespace {

// Exact sign of g_d(p/q) via q^4 g_d(p/q), 128-bit.
int sign_g_rational(long long d, __int128 p, __int128 q) {
  __int128 c3 = 3 - d, c2 = 9 - 2 * d, c1 = 3 - d, c0 = -2;
  __int128 val = p * p * p * p + c3 * p * p * p * q + c2 * p * p * q * q +
                 c1 * p * q * q * q + c0 * q * q * q * q;
  return val > 0 ? 1 : (val < 0 ? -1 : 0);
}

}  // namespace

std::vector<BracketRow> asymptotic_check(long long d_lo, long long d_hi) {
  if (d_lo < 7) throw UsageError("asymptotic_check: range must start at d >= 7");
  if (d_hi < d_lo) throw UsageError("asymptotic_check: empty range");
  std::vector<BracketRow> rows;
  rows.reserve(d_hi - d_lo + 1);
  for (long long d = d_lo; d <= d_hi; ++d) {
    BracketRow row;
    row.d = d;
    // d - 1 - 7/d = (d^2 - d - 7) / d
    row.sign_low = sign_g_rational(d, static_cast<__int128>(d) * d - d - 7, d);
    row.sign_high = sign_g_rational(d, d - 1, 1);
    row.bracket_ok = row.sign_low < 0 && row.sign_high > 0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hsaw
