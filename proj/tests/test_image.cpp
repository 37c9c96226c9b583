#include "doctest.h"

#include <stdexcept>

#include "digitop/image.hpp"
#include "digitop/shapes.hpp"
#include "oracles.hpp"
#include "random_sets.hpp"

using digitop::DigitalImage;
using digitop::ExtDist;
using digitop::Point;

TEST_CASE("image construction validates its invariants") {
    CHECK_THROWS_AS(DigitalImage({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage({Point{0, 0}, Point{0, 0, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage({Point{0, 0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage({Point{0, 0}}, 3), std::invalid_argument);

    // duplicates collapse; points come back sorted
    const DigitalImage x({Point{1, 0}, Point{0, 0}, Point{1, 0}}, 1);
    CHECK(x.size() == 2);
    CHECK(x.point(0) == Point{0, 0});
    CHECK(x.point(1) == Point{1, 0});
}

TEST_CASE("neighbors") {
    const DigitalImage x({Point{0, 0}, Point{1, 0}, Point{5, 5}}, 1);
    CHECK(x.neighbors(Point{0, 0}) == std::vector<Point>{Point{1, 0}});
    CHECK(x.neighbors(Point{5, 5}).empty());
    CHECK_THROWS_AS(x.neighbors(Point{9, 9}), std::invalid_argument);

    const DigitalImage diag({Point{0, 0}, Point{1, 1}}, 2);
    CHECK(diag.neighbors(Point{0, 0}) == std::vector<Point>{Point{1, 1}});

    const DigitalImage single({Point{0, 0}}, 1);
    CHECK(single.neighbors(Point{0, 0}).empty());
}

TEST_CASE("is_connected") {
    CHECK(DigitalImage({Point{0, 0}}, 1).is_connected());
    CHECK_FALSE(DigitalImage({Point{0, 0}, Point{2, 0}}, 1).is_connected());
    CHECK(digitop::shapes::square_snake(6, 1).is_connected());
}

TEST_CASE("bfs_distances") {
    const DigitalImage path({Point{0, 0}, Point{1, 0}, Point{2, 0}}, 1);
    const std::vector<ExtDist> d = path.bfs_distances(Point{0, 0});
    CHECK(d[path.index_of(Point{0, 0})] == ExtDist(0));
    CHECK(d[path.index_of(Point{1, 0})] == ExtDist(1));
    CHECK(d[path.index_of(Point{2, 0})] == ExtDist(2));

    // maximally distant points of the C-shaped bar
    const DigitalImage b = digitop::shapes::c_bar(5, 1);
    const std::vector<ExtDist> db = b.bfs_distances(Point{5, 0});
    CHECK(db[b.index_of(Point{5, 2})] == ExtDist(12));

    const DigitalImage split({Point{0, 0}, Point{3, 3}}, 1);
    const std::vector<ExtDist> ds = split.bfs_distances(Point{0, 0});
    CHECK(ds[split.index_of(Point{3, 3})].is_infinite());

    CHECK_THROWS_AS(path.bfs_distances(Point{7, 7}), std::invalid_argument);
}

TEST_CASE("bfs agrees with exhaustive path enumeration on small random images") {
    randsets::Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> pts;
        while (pts.empty()) {
            for (int x = 0; x <= 3; ++x)
                for (int y = 0; y <= 3; ++y)
                    if (rng() % 3 == 0 && pts.size() < 8) pts.push_back(Point{x, y});
        }
        const int u = 1 + static_cast<int>(rng() % 2);
        const DigitalImage img(pts, u);
        const std::size_t source = rng() % img.size();
        const std::vector<long long> expected =
            oracles::shortest_paths_by_enumeration(img, source);
        const std::vector<long long> actual = img.bfs_steps_from(source);
        REQUIRE(actual == expected);
    }
}

TEST_CASE("connectivity is equivalent to all-finite BFS distances") {
    randsets::Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<Point> pts = randsets::random_subset(rng, 4, 4);
        const DigitalImage img(pts, 1 + static_cast<int>(rng() % 2));
        const std::vector<ExtDist> d = img.bfs_distances(img.point(0));
        const bool all_finite =
            std::all_of(d.begin(), d.end(), [](ExtDist e) { return e.is_finite(); });
        REQUIRE(img.is_connected() == all_finite);
    }
}

TEST_CASE("neighbor count never exceeds the c_u bound") {
    randsets::Rng rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<Point> pts = randsets::random_subset(rng, 4, 4);
        const DigitalImage img(pts, 2);
        for (const Point& p : img.points())
            REQUIRE(img.neighbors(p).size() <= 8);  // 3^2 - 1
    }
}
