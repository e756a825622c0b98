#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parmetric/metric_space.hpp"
#include "parmetric/partition.hpp"
#include "parmetric/semicontinuity.hpp"

using namespace parmetric;

TEST_CASE("validate_cover accepts a partition") {
    auto rep = validate_cover(3, {PointSet::of(3, {0, 1}), PointSet::of(3, {2})});
    CHECK(rep.ok());
}

TEST_CASE("validate_cover reports overlap with the witnessing point") {
    auto rep = validate_cover(2, {PointSet::of(2, {0}), PointSet::of(2, {0, 1})});
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].kind == CoverViolation::Kind::overlapping_blocks);
    CHECK(rep.violations[0].point == 0);
}

TEST_CASE("validate_cover reports uncovered points and empty blocks") {
    auto rep = validate_cover(2, {PointSet::of(2, {0})});
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].kind == CoverViolation::Kind::uncovered_point);
    CHECK(rep.violations[0].point == 1);

    auto rep2 = validate_cover(1, {PointSet::of(1, {0}), PointSet(1)});
    REQUIRE(!rep2.ok());
    CHECK(rep2.violations[0].kind == CoverViolation::Kind::empty_block);
}

TEST_CASE("Partition construction rejects invalid covers") {
    CHECK_THROWS_AS(Partition::from_blocks(2, {PointSet::of(2, {0}), PointSet::of(2, {0, 1})}),
                    invalid_partition);
}

TEST_CASE("star saturates to blocks") {
    auto p = Partition::from_blocks(3, {PointSet::of(3, {0, 1}), PointSet::of(3, {2})});
    CHECK(star(p, PointSet::of(3, {1})) == PointSet::of(3, {0, 1}));
    CHECK(star(p, PointSet(3)) == PointSet(3));
}

TEST_CASE("star matches the definitional scan (randomized)") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const int n = 10;
        std::uniform_int_distribution<int> lbl(0, 3);
        std::vector<int> labels;
        for (int i = 0; i < n; ++i) labels.push_back(i < 4 ? i : lbl(rng));
        auto p = Partition::from_labels(labels);
        PointSet s(n);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int i = 0; i < n; ++i)
            if (coin(rng)) s.insert(i);
        // independent scan over blocks
        PointSet expect(n);
        for (int b = 0; b < p.n_blocks(); ++b)
            if (p.block(b).intersects(s)) expect = expect | p.block(b);
        CHECK(star(p, s) == expect);
        // star properties
        CHECK(s.is_subset_of(star(p, s)));
        CHECK(star(p, star(p, s)) == star(p, s));
        CHECK(is_saturated(p, star(p, s)));
    }
}

TEST_CASE("star of a point is its block") {
    auto p = Partition::from_labels({0, 0, 1, 2, 1});
    for (int x = 0; x < 5; ++x) {
        PointSet s(5);
        s.insert(x);
        CHECK(star(p, s) == p.block(p.block_of(x)));
    }
}

TEST_CASE("is_saturated") {
    auto p = Partition::from_blocks(4, {PointSet::of(4, {0, 1}), PointSet::of(4, {2}), PointSet::of(4, {3})});
    CHECK(is_saturated(p, p.block(0)));
    CHECK(!is_saturated(p, PointSet::of(4, {0})));          // half a block
    CHECK(is_saturated(p, p.block(0) | p.block(2)));        // union of blocks
}

TEST_CASE("semicontinuity modulus for singleton blocks stays below epsilon") {
    auto m = euclidean_from_points({{0, 0}, {0.5, 0}, {1.3, 0}, {0.2, 0.9}});
    auto p = Partition::singletons(4);
    auto rep = semicontinuity_diagnostic(m, p, {0.25, 0.6, 1.0, 2.0});
    for (const auto& e : rep.entries) CHECK(e.modulus <= e.scale);
}

TEST_CASE("semicontinuity modulus vanishes below the separation of parallel segments") {
    std::vector<std::vector<double>> coords;
    std::vector<int> labels;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 10; ++i) {
            coords.push_back({i / 9.0, double(s)});
            labels.push_back(s);
        }
    auto m = euclidean_from_points(coords);
    auto p = Partition::from_labels(labels);
    auto rep = semicontinuity_diagnostic(m, p, {0.3, 0.6, 0.99});
    for (const auto& e : rep.entries) CHECK(e.modulus == 0.0);
}

TEST_CASE("semicontinuity modulus is positive across nearby concentric circles") {
    std::vector<std::vector<double>> coords;
    std::vector<int> labels;
    for (int c = 0; c < 2; ++c) {
        double r = c == 0 ? 1.0 : 1.2;
        for (int i = 0; i < 64; ++i) {
            double t = 2 * M_PI * i / 64;
            coords.push_back({r * std::cos(t), r * std::sin(t)});
            labels.push_back(c);
        }
    }
    auto m = euclidean_from_points(coords);
    auto p = Partition::from_labels(labels);
    auto rep = semicontinuity_diagnostic(m, p, {0.25, 0.5});
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.modulus > 0.0);
        CHECK(e.modulus < 0.5);  // finite, about the radial gap
    }
}
