#include "digitop/image.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace digitop {

namespace {

// All nonzero offsets in {-1,0,1}^dim with at most u nonzero entries:
// exactly the c_u neighborhood of the origin.
std::vector<Point> cu_offsets(int dim, int u) {
    std::vector<Point> out;
    Point cur;
    cur.coords.assign(dim, -1);
    // counts in base 3 over {-1,0,1}^dim
    while (true) {
        int nonzero = 0;
        for (int c : cur.coords) nonzero += (c != 0);
        if (nonzero >= 1 && nonzero <= u) out.push_back(cur);
        int i = 0;
        for (; i < dim; ++i) {
            if (cur.coords[i] < 1) {
                ++cur.coords[i];
                break;
            }
            cur.coords[i] = -1;
        }
        if (i == dim) break;
    }
    return out;
}

}  // namespace

std::vector<Point> normalized(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

DigitalImage::DigitalImage(std::vector<Point> points, int u)
    : points_(normalized(std::move(points))), u_(u) {
    if (points_.empty())
        throw std::invalid_argument("DigitalImage: point set must be nonempty");
    dim_ = points_.front().dim();
    if (dim_ < 1)
        throw std::invalid_argument("DigitalImage: points must have dimension >= 1");
    for (const Point& p : points_)
        if (p.dim() != dim_)
            throw std::invalid_argument("DigitalImage: mixed point dimensions");
    if (u_ < 1 || u_ > dim_)
        throw std::invalid_argument("DigitalImage: u must be in [1, dim]");

    adj_.resize(points_.size());
    const std::vector<Point> offsets = cu_offsets(dim_, u_);
    Point probe;
    probe.coords.resize(dim_);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (const Point& off : offsets) {
            for (int k = 0; k < dim_; ++k)
                probe.coords[k] = points_[i].coords[k] + off.coords[k];
            auto it = std::lower_bound(points_.begin(), points_.end(), probe);
            if (it != points_.end() && *it == probe)
                adj_[i].push_back(static_cast<std::size_t>(it - points_.begin()));
        }
        std::sort(adj_[i].begin(), adj_[i].end());
    }
}

bool DigitalImage::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t DigitalImage::index_of(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p)
        throw std::invalid_argument("DigitalImage: point " + to_string(p) + " not in image");
    return static_cast<std::size_t>(it - points_.begin());
}

std::vector<Point> DigitalImage::neighbors(const Point& x) const {
    const std::size_t i = index_of(x);
    std::vector<Point> out;
    out.reserve(adj_[i].size());
    for (std::size_t j : adj_[i]) out.push_back(points_[j]);
    return out;
}

std::vector<long long> DigitalImage::bfs_steps_from(std::size_t source) const {
    return bfs_steps_from_set({source});
}

std::vector<long long> DigitalImage::bfs_steps_from_set(
    const std::vector<std::size_t>& sources) const {
    std::vector<long long> dist(points_.size(), -1);
    std::deque<std::size_t> queue;
    for (std::size_t s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj_[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool DigitalImage::is_connected() const {
    const std::vector<long long> dist = bfs_steps_from(0);
    return std::none_of(dist.begin(), dist.end(), [](long long d) { return d < 0; });
}

std::vector<ExtDist> DigitalImage::bfs_distances(const Point& source) const {
    const std::vector<long long> steps = bfs_steps_from(index_of(source));
    std::vector<ExtDist> out(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i)
        out[i] = steps[i] < 0 ? ExtDist::infinity() : ExtDist(static_cast<double>(steps[i]));
    return out;
}

}  // namespace digitop
