#pragma once

#include <string>

#include "hsaw/errors.hpp"

namespace hsaw {

// Parameters of the regular tessellation H(d,k): d k-gonal faces meet at
// every vertex. Hyperbolic iff (d-2)(k-2) > 4.
struct TessellationParams {
  int d = 0;  // vertex degree
  int k = 0;  // face degree

  bool is_hyperbolic() const {
    return d >= 3 && k >= 3 && (d - 2) * (k - 2) > 4;
  }

  // (d-2)(k-2) - 4, strictly positive for hyperbolic parameters. This is
  // the curvature excess that drives every isoperimetric constant.
  long long excess() const {
    return static_cast<long long>(d - 2) * (k - 2) - 4;
  }

  void ensure_hyperbolic() const {
    if (!is_hyperbolic())
      throw UsageError("(d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                       ") is not hyperbolic: require d,k >= 3 and (d-2)(k-2) > 4");
  }

  bool operator==(const TessellationParams&) const = default;
};

}  // namespace hsaw
