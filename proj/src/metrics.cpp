#include "digitop/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace digitop {

namespace {

void check_same_dim(const Point& x, const Point& y, const char* who) {
    if (x.dim() != y.dim())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

long long l1_distance(const Point& x, const Point& y) {
    check_same_dim(x, y, "l1_distance");
    long long s = 0;
    for (int i = 0; i < x.dim(); ++i) s += std::llabs(static_cast<long long>(x[i]) - y[i]);
    return s;
}

long long l2_squared(const Point& x, const Point& y) {
    check_same_dim(x, y, "l2_squared");
    long long s = 0;
    for (int i = 0; i < x.dim(); ++i) {
        const long long d = static_cast<long long>(x[i]) - y[i];
        s += d * d;
    }
    return s;
}

double lp_power_sum(const Point& x, const Point& y, double p) {
    check_same_dim(x, y, "lp_power_sum");
    if (p < 1.0) throw std::invalid_argument("lp_power_sum: p must be >= 1");
    if (p == 1.0) return static_cast<double>(l1_distance(x, y));
    if (p == 2.0) return static_cast<double>(l2_squared(x, y));
    double s = 0.0;
    for (int i = 0; i < x.dim(); ++i)
        s += std::pow(std::abs(static_cast<double>(x[i]) - y[i]), p);
    return s;
}

double lp_distance(const Point& x, const Point& y, double p) {
    const double s = lp_power_sum(x, y, p);
    if (p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
}

ExtDist path_distance(const DigitalImage& ambient, const Point& x, const Point& y) {
    const std::size_t i = ambient.index_of(x);
    const std::size_t j = ambient.index_of(y);
    const std::vector<long long> dist = ambient.bfs_steps_from(i);
    return dist[j] < 0 ? ExtDist::infinity() : ExtDist(static_cast<double>(dist[j]));
}

PointMetric PointMetric::lp(double p) {
    if (p < 1.0) throw std::invalid_argument("PointMetric::lp: p must be >= 1");
    PointMetric m;
    m.kind_ = Kind::Lp;
    m.p_ = p;
    return m;
}

PointMetric PointMetric::path_in(DigitalImage ambient) {
    PointMetric m;
    m.kind_ = Kind::PathIn;
    m.ambient_ = std::make_shared<const DigitalImage>(std::move(ambient));
    return m;
}

PointMetric PointMetric::intrinsic_path(int u) {
    if (u < 1) throw std::invalid_argument("PointMetric::intrinsic_path: u must be >= 1");
    PointMetric m;
    m.kind_ = Kind::IntrinsicPath;
    m.u_ = u;
    return m;
}

namespace {

ExtDist lp_diameter(const std::vector<Point>& pts, double p) {
    double best = 0.0;  // power-sum space; monotone in the distance
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, lp_power_sum(pts[i], pts[j], p));
    if (p == 1.0) return ExtDist(best);
    if (p == 2.0) return ExtDist(std::sqrt(best));
    return ExtDist(std::pow(best, 1.0 / p));
}

// max over pairs of a of the path distance inside the ambient.
ExtDist path_diameter_in(const DigitalImage& ambient, const std::vector<Point>& pts) {
    std::vector<std::size_t> idx;
    idx.reserve(pts.size());
    for (const Point& q : pts) idx.push_back(ambient.index_of(q));
    long long best = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::vector<long long> dist = ambient.bfs_steps_from(idx[k]);
        for (std::size_t l = k + 1; l < idx.size(); ++l) {
            if (dist[idx[l]] < 0) return ExtDist::infinity();
            best = std::max(best, dist[idx[l]]);
        }
    }
    return ExtDist(static_cast<double>(best));
}

}  // namespace

ExtDist diameter(const std::vector<Point>& a, const PointMetric& metric) {
    const std::vector<Point> pts = normalized(a);
    if (pts.empty()) throw std::invalid_argument("diameter: set must be nonempty");
    switch (metric.kind()) {
        case PointMetric::Kind::Lp:
            return lp_diameter(pts, metric.p());
        case PointMetric::Kind::PathIn:
            return path_diameter_in(metric.ambient(), pts);
        case PointMetric::Kind::IntrinsicPath: {
            const DigitalImage self(pts, metric.u());
            return path_diameter_in(self, self.points());
        }
    }
    throw std::logic_error("diameter: unknown metric kind");
}

ExtDist diam_diff(const std::vector<Point>& a, const std::vector<Point>& b,
                  const PointMetric& metric) {
    return abs_diff(diameter(a, metric), diameter(b, metric));
}

}  // namespace digitop
