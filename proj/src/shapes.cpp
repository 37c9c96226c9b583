#include "digitop/shapes.hpp"

#include <stdexcept>

namespace digitop {
namespace shapes {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<Point> box(int x0, int x1, int y0, int y1) {
    std::vector<Point> pts;
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) pts.push_back(Point{x, y});
    return pts;
}

}  // namespace

DigitalImage full_square(int n, int u) {
    require(n >= 1, "full_square: n must be >= 1");
    return DigitalImage(box(0, n, 0, n), u);
}

DigitalImage square_snake(int n, int u) {
    require(n >= 2 && n % 2 == 0, "square_snake: n must be even and >= 2");
    std::vector<Point> pts;
    for (int x = 0; x <= n; ++x) {
        // columns x = 4k+1 keep only y = 0; columns x = 4k+3 keep only y = n
        const int r = x % 4;
        for (int y = 0; y <= n; ++y) {
            if (r == 1 && y >= 1) continue;
            if (r == 3 && y <= n - 1) continue;
            pts.push_back(Point{x, y});
        }
    }
    return DigitalImage(std::move(pts), u);
}

DigitalImage rect_bar(int n, int u) {
    require(n >= 1, "rect_bar: n must be >= 1");
    return DigitalImage(box(0, n, 0, 2), u);
}

DigitalImage c_bar(int n, int u) {
    require(n >= 1, "c_bar: n must be >= 1");
    std::vector<Point> pts;
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= 2; ++y) {
            if (y == 1 && x >= 1) continue;
            pts.push_back(Point{x, y});
        }
    return DigitalImage(std::move(pts), u);
}

DigitalImage baseline(int n, int u) {
    require(n >= 1, "baseline: n must be >= 1");
    std::vector<Point> pts;
    for (int x = 0; x <= n; ++x) pts.push_back(Point{x, 0});
    return DigitalImage(std::move(pts), u);
}

DigitalImage square_annulus(int n, int u) {
    require(n >= 1, "square_annulus: n must be >= 1");
    std::vector<Point> pts;
    for (int x = -n; x <= n; ++x)
        for (int y = -n; y <= n; ++y)
            if (x == -n || x == n || y == -n || y == n) pts.push_back(Point{x, y});
    return DigitalImage(std::move(pts), u);
}

DigitalImage punctured_annulus(int n, int u) {
    DigitalImage x = square_annulus(n, u);
    std::vector<Point> pts;
    for (const Point& p : x.points())
        if (!(p == Point{n, n})) pts.push_back(p);
    return DigitalImage(std::move(pts), u);
}

std::pair<DigitalImage, DigitalImage> rect_and_c(int n, int u) {
    return {rect_bar(n, u), c_bar(n, u)};
}

std::pair<DigitalImage, DigitalImage> annulus_pair(int n, int u) {
    return {square_annulus(n, u), punctured_annulus(n, u)};
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "full-square") return Family::FullSquare;
    if (name == "square-snake") return Family::SquareSnake;
    if (name == "rect-bar") return Family::RectBar;
    if (name == "c-bar") return Family::CBar;
    if (name == "baseline") return Family::Baseline;
    if (name == "square-annulus") return Family::SquareAnnulus;
    if (name == "punctured-annulus") return Family::PuncturedAnnulus;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::FullSquare: return "full-square";
        case Family::SquareSnake: return "square-snake";
        case Family::RectBar: return "rect-bar";
        case Family::CBar: return "c-bar";
        case Family::Baseline: return "baseline";
        case Family::SquareAnnulus: return "square-annulus";
        case Family::PuncturedAnnulus: return "punctured-annulus";
    }
    throw std::logic_error("family_name: unknown family");
}

DigitalImage make(Family f, int n, int u) {
    switch (f) {
        case Family::FullSquare: return full_square(n, u);
        case Family::SquareSnake: return square_snake(n, u);
        case Family::RectBar: return rect_bar(n, u);
        case Family::CBar: return c_bar(n, u);
        case Family::Baseline: return baseline(n, u);
        case Family::SquareAnnulus: return square_annulus(n, u);
        case Family::PuncturedAnnulus: return punctured_annulus(n, u);
    }
    throw std::logic_error("make: unknown family");
}

}  // namespace shapes
}  // namespace digitop
