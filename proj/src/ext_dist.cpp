#include "digitop/ext_dist.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace digitop {

ExtDist::ExtDist(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0)
        throw std::invalid_argument("ExtDist: value must be nonnegative");
}

ExtDist operator*(double w, ExtDist d) {
    if (!(w > 0.0))
        throw std::invalid_argument("ExtDist: scale factor must be positive");
    return ExtDist(w * d.v_);
}

ExtDist abs_diff(ExtDist a, ExtDist b) {
    if (a.is_infinite() && b.is_infinite()) return ExtDist(0.0);
    if (a.is_infinite() || b.is_infinite()) return ExtDist::infinity();
    return ExtDist(std::fabs(a.value() - b.value()));
}

std::string to_display_string(ExtDist d) {
    if (d.is_infinite()) return "inf";
    const double v = d.value();
    if (v == std::rint(v) && std::fabs(v) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::ostream& operator<<(std::ostream& os, ExtDist d) {
    return os << to_display_string(d);
}

}  // namespace digitop
