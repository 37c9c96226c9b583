#include "digitop/point.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace digitop {

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) os << ',';
        os << p.coords[i];
    }
    return os << ')';
}

bool cu_adjacent(const Point& x, const Point& y, int u) {
    const int n = x.dim();
    if (y.dim() != n)
        throw std::invalid_argument("cu_adjacent: dimension mismatch");
    if (u < 1 || u > n)
        throw std::invalid_argument("cu_adjacent: u must be in [1, dim]");
    int differing = 0;
    for (int i = 0; i < n; ++i) {
        const int d = std::abs(x.coords[i] - y.coords[i]);
        if (d == 0) continue;
        if (d != 1) return false;
        ++differing;
    }
    return differing >= 1 && differing <= u;
}

bool cu_adjacent_or_equal(const Point& x, const Point& y, int u) {
    return x == y || cu_adjacent(x, y, u);
}

}  // namespace digitop
