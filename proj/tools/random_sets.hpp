#pragma once

// Deterministic random generators for the property suites. Sampling uses
// raw mt19937 draws with modulo reduction so identical seeds give
// identical sequences on every platform.

#include <random>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace randsets {

using digitop::DigitalImage;
using digitop::Point;

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// Nonempty uniform-ish subset of [0,xmax] x [0,ymax].
inline std::vector<Point> random_subset(Rng& rng, int xmax, int ymax) {
    std::vector<Point> pts;
    while (pts.empty()) {
        for (int x = 0; x <= xmax; ++x)
            for (int y = 0; y <= ymax; ++y)
                if (rng() % 4 == 0) pts.push_back(Point{x, y});
    }
    return pts;
}

// Connected set grown point by point from a random seed, staying inside
// [0,xmax] x [0,ymax]; connectivity is under c_u.
inline std::vector<Point> random_connected_points(Rng& rng, int xmax, int ymax, int max_points,
                                                  int u) {
    std::vector<Point> pts{Point{uniform(rng, 0, xmax), uniform(rng, 0, ymax)}};
    const int target = uniform(rng, 1, max_points);
    while (static_cast<int>(pts.size()) < target) {
        std::vector<Point> frontier;
        for (const Point& p : pts)
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy) {
                    if (dx == 0 && dy == 0) continue;
                    if (u == 1 && dx != 0 && dy != 0) continue;
                    Point q{p[0] + dx, p[1] + dy};
                    if (q[0] < 0 || q[0] > xmax || q[1] < 0 || q[1] > ymax) continue;
                    if (std::find(pts.begin(), pts.end(), q) == pts.end())
                        frontier.push_back(q);
                }
        if (frontier.empty()) break;
        pts.push_back(frontier[static_cast<std::size_t>(uniform(
            rng, 0, static_cast<int>(frontier.size()) - 1))]);
    }
    return digitop::normalized(pts);
}

inline DigitalImage random_connected_image(Rng& rng, int xmax, int ymax, int max_points, int u) {
    return DigitalImage(random_connected_points(rng, xmax, ymax, max_points, u), u);
}

// Connected subset of a host image, grown along the host's adjacency.
inline std::vector<Point> random_connected_subset(Rng& rng, const DigitalImage& host,
                                                  int max_points) {
    std::vector<std::size_t> chosen{
        static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(host.size()) - 1))};
    std::vector<char> in(host.size(), 0);
    in[chosen[0]] = 1;
    const int target = uniform(rng, 1, max_points);
    while (static_cast<int>(chosen.size()) < target) {
        std::vector<std::size_t> frontier;
        for (std::size_t v : chosen)
            for (std::size_t w : host.adjacency()[v])
                if (!in[w]) frontier.push_back(w);
        if (frontier.empty()) break;
        const std::size_t pick = frontier[static_cast<std::size_t>(
            uniform(rng, 0, static_cast<int>(frontier.size()) - 1))];
        in[pick] = 1;
        chosen.push_back(pick);
    }
    std::vector<Point> pts;
    for (std::size_t v : chosen) pts.push_back(host.point(v));
    return digitop::normalized(pts);
}

}  // namespace randsets
