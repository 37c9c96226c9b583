#include "digitop/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "digitop/metrics.hpp"

namespace digitop {

namespace {

struct DirectedLp {
    double power_sum;  // max over a of min over b of the p-power sum
    Point witness;
};

// Selections run on power sums; iteration over sorted sets with strict
// comparisons yields the lexicographically least witness.
DirectedLp directed_lp(const std::vector<Point>& from, const std::vector<Point>& to, double p) {
    DirectedLp out{-1.0, {}};
    for (const Point& a : from) {
        double nearest = -1.0;
        for (const Point& b : to) {
            const double s = lp_power_sum(a, b, p);
            if (nearest < 0.0 || s < nearest) nearest = s;
        }
        if (nearest > out.power_sum) {
            out.power_sum = nearest;
            out.witness = a;
        }
    }
    return out;
}

double root(double power_sum, double p) {
    if (p == 1.0) return power_sum;
    if (p == 2.0) return std::sqrt(power_sum);
    return std::pow(power_sum, 1.0 / p);
}

struct DirectedPath {
    long long steps;  // -1 marks an unreachable point
    Point witness;
};

DirectedPath directed_path(const DigitalImage& x, const std::vector<Point>& from,
                           const std::vector<long long>& dist_to_other) {
    DirectedPath out{0, from.front()};
    for (const Point& a : from) {
        const long long d = dist_to_other[x.index_of(a)];
        if (d < 0) return {-1, a};
        if (d > out.steps) {
            out.steps = d;
            out.witness = a;
        }
    }
    return out;
}

}  // namespace

HausdorffResult hausdorff_lp(const std::vector<Point>& a, const std::vector<Point>& b, double p) {
    const std::vector<Point> sa = normalized(a);
    const std::vector<Point> sb = normalized(b);
    if (sa.empty() || sb.empty())
        throw std::invalid_argument("hausdorff_lp: sets must be nonempty");
    if (sa.front().dim() != sb.front().dim())
        throw std::invalid_argument("hausdorff_lp: dimension mismatch");
    if (p < 1.0) throw std::invalid_argument("hausdorff_lp: p must be >= 1");

    const DirectedLp ab = directed_lp(sa, sb, p);
    const DirectedLp ba = directed_lp(sb, sa, p);
    const double worst = std::max(ab.power_sum, ba.power_sum);
    return {ExtDist(root(worst, p)), ab.witness, ba.witness};
}

HausdorffResult hausdorff_path(const DigitalImage& x, const std::vector<Point>& a,
                               const std::vector<Point>& b) {
    const std::vector<Point> sa = normalized(a);
    const std::vector<Point> sb = normalized(b);
    if (sa.empty() || sb.empty())
        throw std::invalid_argument("hausdorff_path: sets must be nonempty");

    std::vector<std::size_t> ia, ib;
    for (const Point& q : sa) ia.push_back(x.index_of(q));  // throws when not contained
    for (const Point& q : sb) ib.push_back(x.index_of(q));

    const std::vector<long long> dist_b = x.bfs_steps_from_set(ib);
    const std::vector<long long> dist_a = x.bfs_steps_from_set(ia);
    const DirectedPath ab = directed_path(x, sa, dist_b);
    const DirectedPath ba = directed_path(x, sb, dist_a);
    if (ab.steps < 0 || ba.steps < 0)
        return {ExtDist::infinity(), ab.witness, ba.witness};
    return {ExtDist(static_cast<double>(std::max(ab.steps, ba.steps))), ab.witness, ba.witness};
}

}  // namespace digitop
