#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parmetric/construct.hpp"
#include "parmetric/parallel.hpp"

using namespace parmetric;

namespace {

std::pair<FiniteMetricSpace, Partition> random_instance(std::mt19937_64& rng, int n, int max_blocks) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> lbl(0, max_blocks - 1);
    std::vector<std::vector<double>> coords;
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) {
        coords.push_back({u(rng), u(rng)});
        labels.push_back(i < max_blocks ? i : lbl(rng));
    }
    return {euclidean_from_points(coords), Partition::from_labels(labels)};
}

}  // namespace

TEST_CASE("construction on the singleton partition yields a valid dominating metric") {
    std::mt19937_64 rng(5);
    auto [m, p] = random_instance(rng, 8, 8);
    auto [d, trace] = construct_parallel_metric(m, Partition::singletons(8));
    CHECK(validate_metric(d).ok());
    auto rho = truncate_to_unit(m);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            CHECK(rho.dist(i, j) <= d.dist(i, j).to_double());
            CHECK(d.dist(i, j) <= DyadicValue::one());
        }
}

TEST_CASE("construction with a single block still yields a valid metric") {
    std::mt19937_64 rng(6);
    auto [m, p] = random_instance(rng, 6, 1);
    auto [d, trace] = construct_parallel_metric(m, p);
    CHECK(validate_metric(d).ok());
}

TEST_CASE("unequal cross distances become exactly parallel") {
    // blocks {a1,a2} and {b1,b2} with unequal cross distances under rho
    auto m = euclidean_from_points({{0, 0}, {0.4, 0}, {0, 1}, {0.4, 1.3}});
    auto p = Partition::from_labels({0, 0, 1, 1});
    auto [d, trace] = construct_parallel_metric(m, p);
    CHECK(validate_metric(d).ok());
    auto a = p.block(0);
    auto b = p.block(1);
    auto dab = set_distance(d, a, b).value;
    for (int x : a.to_vector()) CHECK(point_set_distance(d, x, b) == dab);
    for (int y : b.to_vector()) CHECK(point_set_distance(d, y, a) == dab);
}

TEST_CASE("construction rejects mismatched or invalid input") {
    auto m = euclidean_from_points({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(construct_parallel_metric(m, Partition::singletons(3)), structural_error);
    auto bad = FiniteMetricSpace::from_table({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
    CHECK_THROWS_AS(construct_parallel_metric(bad, Partition::singletons(3)), structural_error);
}

TEST_CASE("optimal chains are valid witnesses of the constructed distance") {
    std::mt19937_64 rng(13);
    auto [m, p] = random_instance(rng, 10, 3);
    auto [d, trace] = construct_parallel_metric(m, p);
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y) {
            auto w = optimal_chain(trace, x, y);
            CHECK(validate_witness(trace, w));
            CHECK(w.total == d.dist(x, y));
            CHECK(w.points.front() == x);
            CHECK(w.points.back() == y);
        }
}

TEST_CASE("transport from the chain's own start keeps the cost") {
    std::mt19937_64 rng(14);
    auto [m, p] = random_instance(rng, 8, 2);
    auto [d, trace] = construct_parallel_metric(m, p);
    auto sd = set_distance(d, p.block(0), p.block(1));
    auto chain = optimal_chain(trace, sd.a, sd.b);
    auto moved = transport_chain(trace, p, chain, sd.a);
    CHECK(validate_witness(trace, moved));
    CHECK(moved.total == chain.total);
}

TEST_CASE("transported chains witness the set distance from every start point") {
    auto m = euclidean_from_points({{0, 0}, {0.4, 0}, {0, 1}, {0.4, 1.3}});
    auto p = Partition::from_labels({0, 0, 1, 1});
    auto [d, trace] = construct_parallel_metric(m, p);
    auto sd = set_distance(d, p.block(0), p.block(1));
    auto chain = optimal_chain(trace, sd.a, sd.b);
    for (int a : p.block(0).to_vector()) {
        auto moved = transport_chain(trace, p, chain, a);
        CHECK(validate_witness(trace, moved));
        CHECK(moved.total == sd.value);
        CHECK(moved.points.front() == a);
        CHECK(p.block(1).contains(moved.points.back()));
        CHECK(point_set_distance(d, a, p.block(1)) == sd.value);
    }
}

TEST_CASE("transport rejects a start point outside the chain's block") {
    auto m = euclidean_from_points({{0, 0}, {0.4, 0}, {0, 1}, {0.4, 1.3}});
    auto p = Partition::from_labels({0, 0, 1, 1});
    auto [d, trace] = construct_parallel_metric(m, p);
    auto chain = optimal_chain(trace, 0, 2);
    CHECK_THROWS_AS(transport_chain(trace, p, chain, 2), std::invalid_argument);
}

TEST_CASE("deeper level ladders do not change the metric") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 5; ++t) {
        auto [m, p] = random_instance(rng, 9, 3);
        auto [d1, tr1] = construct_parallel_metric(m, p);
        auto [d2, tr2] = construct_parallel_metric(m, p, tr1.plan.n_max + 3);
        CHECK(tr1.delta == tr2.delta);
        CHECK(d1 == d2);
    }
}

TEST_CASE("override below the planned ladder is rejected") {
    std::mt19937_64 rng(16);
    auto [m, p] = random_instance(rng, 6, 2);
    auto plan = plan_levels(truncate_to_unit(m));
    CHECK_THROWS_AS(construct_parallel_metric(m, p, plan.n_max - 1), std::invalid_argument);
}

TEST_CASE("pairs sharing a cover member are close in the constructed metric") {
    // finite surrogate of topology equivalence: within any member at level n,
    // the constructed distance is at most 2^(-n)
    std::mt19937_64 rng(17);
    auto [m, p] = random_instance(rng, 10, 3);
    auto [d, trace] = construct_parallel_metric(m, p);
    for (const auto& lvl : trace.levels)
        for (const auto& bc : lvl.per_block)
            for (const auto& u : bc.members) {
                auto pts = u.to_vector();
                for (std::size_t i = 0; i < pts.size(); ++i)
                    for (std::size_t j = i + 1; j < pts.size(); ++j)
                        CHECK(d.dist(pts[i], pts[j]) <= DyadicValue::pow2(lvl.level));
            }
}

TEST_CASE("single point space constructs trivially") {
    FiniteMetricSpace m(1);
    auto p = Partition::singletons(1);
    auto [d, trace] = construct_parallel_metric(m, p);
    CHECK(d.n_points() == 1);
    CHECK(validate_metric(d).ok());
}
