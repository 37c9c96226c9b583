#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace digitop {

// A nonnegative distance value that may be infinite. Infinity stands for
// "no path exists" and compares greater than every finite value.
class ExtDist {
public:
    constexpr ExtDist() : v_(0.0) {}
    explicit ExtDist(double v);  // throws std::invalid_argument if v < 0 or NaN

    static constexpr ExtDist infinity() {
        return ExtDist(std::numeric_limits<double>::infinity(), unchecked{});
    }

    bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
    bool is_finite() const { return !is_infinite(); }
    double value() const { return v_; }

    friend bool operator==(ExtDist a, ExtDist b) { return a.v_ == b.v_; }
    friend auto operator<=>(ExtDist a, ExtDist b) { return a.v_ <=> b.v_; }

    // inf + x = inf
    friend ExtDist operator+(ExtDist a, ExtDist b) {
        return ExtDist(a.v_ + b.v_, unchecked{});
    }
    // w must be > 0; w * inf = inf
    friend ExtDist operator*(double w, ExtDist d);

private:
    struct unchecked {};
    constexpr ExtDist(double v, unchecked) : v_(v) {}
    double v_;
};

// |a - b| with the conventions used for diameter differences on possibly
// disconnected images: exactly one side infinite -> infinity, both
// infinite -> 0.
ExtDist abs_diff(ExtDist a, ExtDist b);

// "inf" for infinity, plain integer when the value is integral, otherwise
// fixed 9 decimal places.
std::string to_display_string(ExtDist d);

std::ostream& operator<<(std::ostream& os, ExtDist d);

}  // namespace digitop
