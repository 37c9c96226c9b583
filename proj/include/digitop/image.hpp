#pragma once

#include <cstddef>
#include <vector>

#include "digitop/ext_dist.hpp"
#include "digitop/point.hpp"

namespace digitop {

// A finite nonempty set of lattice points of one dimension together with
// the adjacency parameter u of the c_u relation. Immutable after
// construction; points are kept sorted lexicographically and adjacency
// lists are built once so every query afterwards is read-only.
class DigitalImage {
public:
    // Sorts and deduplicates. Throws std::invalid_argument if the set is
    // empty, dimensions are mixed, or u is outside [1, dim].
    DigitalImage(std::vector<Point> points, int u);

    int dim() const { return dim_; }
    int u() const { return u_; }
    std::size_t size() const { return points_.size(); }

    // Lexicographically sorted.
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const;
    // Throws std::invalid_argument if p is not in the image.
    std::size_t index_of(const Point& p) const;

    // adjacency()[i] lists the indices of points c_u-adjacent to point i,
    // in increasing index order.
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }

    // The c_u neighbors of x within the image. Throws if x is absent.
    std::vector<Point> neighbors(const Point& x) const;

    // True iff every pair of points is linked by a chain of c_u
    // adjacencies inside the image. Singletons are connected.
    bool is_connected() const;

    // Minimal number of adjacency steps from the source to every point,
    // aligned with points(); infinity for unreachable points.
    // Throws if the source is absent.
    std::vector<ExtDist> bfs_distances(const Point& source) const;

    // Index-based BFS used by the distance routines: -1 marks unreachable.
    std::vector<long long> bfs_steps_from(std::size_t source) const;
    // Multi-source variant: distance to the nearest of the given sources.
    std::vector<long long> bfs_steps_from_set(const std::vector<std::size_t>& sources) const;

    friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
        return a.u_ == b.u_ && a.points_ == b.points_;
    }

private:
    std::vector<Point> points_;
    int dim_;
    int u_;
    std::vector<std::vector<std::size_t>> adj_;
};

// Sorted, deduplicated copy; the canonical set form used by the
// set-valued metric operations.
std::vector<Point> normalized(std::vector<Point> points);

}  // namespace digitop
