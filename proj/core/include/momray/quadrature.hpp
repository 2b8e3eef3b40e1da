#pragma once

#include <vector>

namespace momray {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given node count; thread-safe.
const GaussLegendre& gauss_legendre(int n);

} // namespace momray
