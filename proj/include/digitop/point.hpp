#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace digitop {

// A lattice point: an n-tuple of integers, n >= 1. Ordering is
// lexicographic on coordinates; this is the iteration order used
// everywhere a deterministic order is needed.
struct Point {
    std::vector<int> coords;

    Point() = default;
    Point(std::initializer_list<int> c) : coords(c) {}
    explicit Point(std::vector<int> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    int operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        return a.coords <=> b.coords;
    }
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = p.coords.size();
        for (int c : p.coords)
            h = h * 1000003u + static_cast<std::size_t>(c) + 0x9e3779b9u;
        return h;
    }
};

// c_u adjacency: x != y, at most u coordinates differ, and every
// differing coordinate differs by exactly 1.
// Throws std::invalid_argument on dimension mismatch or u outside [1, n].
bool cu_adjacent(const Point& x, const Point& y, int u);

// cu_adjacent(x, y, u) || x == y. Same preconditions.
bool cu_adjacent_or_equal(const Point& x, const Point& y, int u);

}  // namespace digitop
