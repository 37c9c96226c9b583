#pragma once

#include <vector>

#include "digitop/image.hpp"

namespace digitop {

// counts[k] = number of cliques with k+1 vertices in the adjacency graph
// of the image (counts[0] = vertices, counts[1] = edges, ...).
std::vector<long long> clique_counts(const DigitalImage& x);

// Euler characteristic of the clique complex:
// sum_k (-1)^k * (number of (k+1)-point cliques).
long long euler_characteristic(const DigitalImage& x);

// | chi(a) - chi(b) |
long long euler_diff(const DigitalImage& a, const DigitalImage& b);

}  // namespace digitop
