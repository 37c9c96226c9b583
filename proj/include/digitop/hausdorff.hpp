#pragma once

#include <vector>

#include "digitop/ext_dist.hpp"
#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace digitop {

// value = max(directed(A->B), directed(B->A)) where
// directed(A->B) = max over a of min over b of the underlying distance.
// witness_a / witness_b realize the directed maxima of their sides; ties
// are broken lexicographically.
struct HausdorffResult {
    ExtDist value;
    Point witness_a;
    Point witness_b;
};

// Hausdorff distance under the l_p metric. Selections run on exact p-th
// power sums for integral p, so p in {1, 2} never touches floating-point
// comparison. Throws on empty input or dimension mismatch.
HausdorffResult hausdorff_lp(const std::vector<Point>& a, const std::vector<Point>& b,
                             double p);

// Hausdorff distance under the shortest-path metric of the ambient image:
// the least integer eps such that every point of a reaches b and every
// point of b reaches a by c_u-paths in x of length <= eps; infinity when
// some point cannot reach the other set at all. One multi-source BFS per
// direction. Throws when a or b is empty or not contained in x.
HausdorffResult hausdorff_path(const DigitalImage& x, const std::vector<Point>& a,
                               const std::vector<Point>& b);

}  // namespace digitop
