#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsaw/bigint.hpp"

namespace hsaw {

// A linear recurrence x_n = M x_{n-1} over nonnegative integers, with the
// n = 1 base vector. The dominant eigenvalue of M is the growth rate of
// every component once M is primitive.
struct RecurrenceSystem {
  std::string name;
  int dim = 0;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<std::int64_t> initial;
};

// Built-in layered-walk systems: "h73", "h45", "h37", "h38".
RecurrenceSystem builtin_system(std::string_view name);

// The degree-parametric family for triangular tessellations, d >= 7;
// parametric_system(7) coincides with builtin_system("h73").
RecurrenceSystem parametric_system(int d);

std::vector<std::string> builtin_system_names();

struct PerronResult {
  double lambda = 0;
  double residual = 0;  // max-norm of M v - lambda v for the returned v
  int iterations = 0;
};

// True iff some power of the nonnegative matrix is entrywise positive.
bool is_primitive(const std::vector<std::vector<std::int64_t>>& m);

// Dominant eigenvalue by power iteration; requires a primitive matrix.
PerronResult perron_root(const RecurrenceSystem& system);

// Independent route: characteristic polynomial (exact integer
// Faddeev-LeVerrier) plus bisection on its largest real root.
double perron_root_poly(const RecurrenceSystem& system);

// Monic characteristic polynomial coefficients, constant term first.
std::vector<long long> characteristic_polynomial(const RecurrenceSystem& system);

// Exact integer iterates x_1..x_n, one inner vector per step. For "h73"
// additionally verifies the comparison inequalities the system is built on
// (a_n <= b_n, c_n <= d_n, d_n <= b_n, b_n <= 2 c_n) and throws
// InvariantError on violation.
std::vector<std::vector<BigUint>> iterate_sequences(const RecurrenceSystem& system,
                                                    int n);

struct BracketRow {
  long long d = 0;
  int sign_low = 0;   // sign of g_d at d - 1 - 7/d
  int sign_high = 0;  // sign of g_d at d - 1
  bool bracket_ok = false;
};

// Sign table of the quartic g_d(x) = x^4 + (3-d)x^3 + (9-2d)x^2 + (3-d)x - 2
// at the two bracket points, evaluated in exact integer arithmetic.
// bracket_ok certifies a root in (d-1-7/d, d-1).
std::vector<BracketRow> asymptotic_check(long long d_lo, long long d_hi);

// g_d(d-1), exactly. Equals 6d^2 - 10d + 2.
long long g_at_d_minus_1(long long d);

}  // namespace hsaw
