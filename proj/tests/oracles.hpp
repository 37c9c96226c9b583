#pragma once

// Independent brute-force oracles for the test suite. Everything here
// is deliberately naive (enumeration over all simple paths, all maps,
// all subsets) and never calls the algorithmic path it is used to check.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/metrics.hpp"
#include "digitop/point.hpp"

namespace oracles {

using digitop::DigitalImage;
using digitop::Point;

// Shortest path lengths by enumerating every simple path from the source
// (exponential; keep images to <= 8 points). -1 marks unreachable.
inline std::vector<long long> shortest_paths_by_enumeration(const DigitalImage& x,
                                                            std::size_t source) {
    const std::size_t n = x.size();
    std::vector<long long> best(n, -1);
    std::vector<char> on_path(n, 0);

    auto dfs = [&](auto&& self, std::size_t v, long long len) -> void {
        if (best[v] < 0 || len < best[v]) best[v] = len;
        on_path[v] = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (on_path[w] || w == v) continue;
            if (digitop::cu_adjacent(x.point(v), x.point(w), x.u())) self(self, w, len + 1);
        }
        on_path[v] = 0;
    };
    dfs(dfs, source, 0);
    return best;
}

// Hausdorff distance evaluated straight from the forall/exists
// definition: the least realized eps such that for all (a,b) there exist
// (a',b') with eps >= d(a,b') and eps >= d(a',b). Works on l_p power
// sums so the comparison is exact.
inline double hausdorff_lp_by_forall_exists(const std::vector<Point>& a,
                                            const std::vector<Point>& b, double p) {
    std::vector<double> candidates{0.0};
    for (const Point& x : a)
        for (const Point& y : b) candidates.push_back(digitop::lp_power_sum(x, y, p));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (double eps : candidates) {
        bool all_ok = true;
        for (const Point& x : a) {
            for (const Point& y : b) {
                // exists (a', b'): eps >= d(x, b') and eps >= d(a', y)
                bool x_near = false, y_near = false;
                for (const Point& bp : b)
                    if (digitop::lp_power_sum(x, bp, p) <= eps) {
                        x_near = true;
                        break;
                    }
                for (const Point& ap : a)
                    if (digitop::lp_power_sum(ap, y, p) <= eps) {
                        y_near = true;
                        break;
                    }
                if (!(x_near && y_near)) {
                    all_ok = false;
                    break;
                }
            }
            if (!all_ok) break;
        }
        if (all_ok) return eps;  // power-sum space
    }
    return candidates.back();
}

// Exhaustive check for a continuous f: X -> Y with every displacement
// power-sum <= threshold, by trying all |Y|^|X| assignments.
inline bool feasible_by_full_enumeration(const DigitalImage& x, const DigitalImage& y,
                                         double power_threshold, double p) {
    const std::size_t nx = x.size(), ny = y.size();
    std::vector<std::size_t> assign(nx, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < nx; ++i)
            if (digitop::lp_power_sum(x.point(i), y.point(assign[i]), p) > power_threshold)
                ok = false;
        for (std::size_t i = 0; ok && i < nx; ++i)
            for (std::size_t j : x.adjacency()[i]) {
                if (j < i) continue;
                if (assign[i] != assign[j] &&
                    !digitop::cu_adjacent(y.point(assign[i]), y.point(assign[j]), y.u())) {
                    ok = false;
                    break;
                }
            }
        if (ok) return true;
        std::size_t k = 0;
        while (k < nx && ++assign[k] == ny) assign[k++] = 0;
        if (k == nx) return false;
    }
}

// Clique census by testing every subset for mutual adjacency
// (keep images to <= ~15 points). counts[k] = cliques of size k+1.
inline std::vector<long long> clique_counts_by_subsets(const DigitalImage& x) {
    const std::size_t n = x.size();
    std::vector<long long> counts;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) members.push_back(i);
        bool clique = true;
        for (std::size_t i = 0; clique && i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!digitop::cu_adjacent(x.point(members[i]), x.point(members[j]), x.u())) {
                    clique = false;
                    break;
                }
        if (clique) {
            if (counts.size() < members.size()) counts.resize(members.size(), 0);
            ++counts[members.size() - 1];
        }
    }
    return counts;
}

}  // namespace oracles
