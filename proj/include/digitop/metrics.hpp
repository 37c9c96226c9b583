#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "digitop/ext_dist.hpp"
#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace digitop {

// --- point metrics ---------------------------------------------------

// l_p distance, p >= 1. Exact for p = 1; computed via squared integers
// for p = 2. Throws on dimension mismatch or p < 1.
double lp_distance(const Point& x, const Point& y, double p);

// Exact integer forms used wherever comparisons must not go through
// floating point.
long long l1_distance(const Point& x, const Point& y);
long long l2_squared(const Point& x, const Point& y);

// sum_i |x_i - y_i|^p, the p-th power of lp_distance. Monotone in the
// distance, so max/min selections can run on this value; integral for
// integral p.
double lp_power_sum(const Point& x, const Point& y, double p);

// Minimal c_u-path length between two points of the ambient image;
// infinity when no path exists. Throws if either point is absent.
ExtDist path_distance(const DigitalImage& ambient, const Point& x, const Point& y);

// A point metric to take diameters under: l_p, the shortest-path metric
// of a fixed ambient image, or the shortest-path metric of each argument
// set regarded as its own image under c_u.
class PointMetric {
public:
    enum class Kind { Lp, PathIn, IntrinsicPath };

    static PointMetric lp(double p);
    static PointMetric path_in(DigitalImage ambient);
    static PointMetric intrinsic_path(int u);

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    int u() const { return u_; }
    const DigitalImage& ambient() const { return *ambient_; }

private:
    PointMetric() = default;
    Kind kind_ = Kind::Lp;
    double p_ = 1.0;
    int u_ = 1;
    std::shared_ptr<const DigitalImage> ambient_;
};

// --- diameters --------------------------------------------------------

// max pairwise distance of a nonempty set under the given metric; 0 for
// singletons, infinity when some pair is unreachable under a path metric.
// Throws on empty input or (PathIn) points outside the ambient.
ExtDist diameter(const std::vector<Point>& a, const PointMetric& metric);

// | diam(a) - diam(b) | with the infinity conventions of abs_diff.
ExtDist diam_diff(const std::vector<Point>& a, const std::vector<Point>& b,
                  const PointMetric& metric);

}  // namespace digitop
