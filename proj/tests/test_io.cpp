#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "parmetric/construct.hpp"
#include "parmetric/generate.hpp"
#include "parmetric/io.hpp"
#include "parmetric/parallel.hpp"

using namespace parmetric;

namespace {

std::string tmp_path(const std::string& name) {
    return std::string("parmetric_test_") + name;
}

}  // namespace

TEST_CASE("coords instance realizes to metric and partition") {
    Instance inst;
    inst.coords = {{0, 0}, {3, 4}};
    inst.labels = {"A", "B"};
    auto [m, p] = inst.realize();
    CHECK(m.n_points() == 2);
    CHECK(m.dist(0, 1) == 5.0);
    CHECK(p.n_blocks() == 2);
}

TEST_CASE("lower triangular table is mirrored") {
    auto j = nlohmann::json::parse(R"({"dist": [[], [1.0]], "labels": ["A", "A"]})");
    auto inst = instance_from_json(j);
    auto [m, p] = inst.realize();
    CHECK(m.n_points() == 2);
    CHECK(m.dist(0, 1) == 1.0);
    CHECK(m.dist(1, 0) == 1.0);
    CHECK(p.n_blocks() == 1);
}

TEST_CASE("label length mismatch is a parse error") {
    Instance inst;
    inst.coords = {{0, 0}, {3, 4}};
    inst.labels = {"A"};
    CHECK_THROWS_AS(inst.realize(), parse_error);
}

TEST_CASE("asymmetric full table is rejected at validation") {
    auto j = nlohmann::json::parse(R"({"dist": [[0, 1], [2, 0]], "labels": ["A", "B"]})");
    auto inst = instance_from_json(j);
    CHECK_THROWS_AS(inst.realize(), structural_error);
}

TEST_CASE("instance schema errors") {
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"labels": ["A"]})")), parse_error);
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(
                        R"({"coords": [[0]], "dist": [[0]], "labels": ["A"]})")),
                    parse_error);
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(
                        R"({"dist": [[0, 1], [1, 0], [1, 1]], "labels": ["A", "B"]})")),
                    parse_error);
}

TEST_CASE("explicit overlapping blocks are rejected with a witness") {
    auto j = nlohmann::json::parse(
        R"({"coords": [[0,0],[1,0],[0,1]], "blocks": [[0,1],[1,2]]})");
    auto inst = instance_from_json(j);
    try {
        inst.realize();
        FAIL("expected invalid_partition");
    } catch (const invalid_partition& e) {
        REQUIRE(!e.report.ok());
        CHECK(e.report.violations[0].kind == CoverViolation::Kind::overlapping_blocks);
        CHECK(e.report.violations[0].point == 1);
    }
}

TEST_CASE("instance save/load round trip") {
    auto inst = generate("random_partition", GenParams{}, 99);
    auto path = tmp_path("roundtrip.json");
    save_instance(inst, path);
    auto back = load_instance(path);
    CHECK(back.coords == inst.coords);
    CHECK(back.labels == inst.labels);
    CHECK(back.name == inst.name);
    std::remove(path.c_str());
}

TEST_CASE("generators are deterministic byte for byte") {
    auto a = generate("random_partition", GenParams{}, 1234);
    auto b = generate("random_partition", GenParams{}, 1234);
    CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
    auto c = generate("random_partition", GenParams{}, 1235);
    CHECK(instance_to_json(a).dump() != instance_to_json(c).dump());
}

TEST_CASE("generator shapes") {
    GenParams gp;
    gp.n_segments = 2;
    gp.points_per = 5;
    gp.separation = 1.0;
    auto seg = generate("segments", gp, 0);
    CHECK(seg.n_points() == 10);
    auto [m, p] = seg.realize();
    CHECK(p.n_blocks() == 2);
    CHECK(set_distance(m, p.block(0), p.block(1)).value >= 1.0);

    CHECK_THROWS_AS(generate("nope", gp, 0), std::invalid_argument);
}

TEST_CASE("certificate file round trips losslessly and re-verifies") {
    auto inst = generate("random_partition", GenParams{.n = 10, .n_blocks = 3}, 7);
    auto [m, p] = inst.realize();
    auto [d, trace] = construct_parallel_metric(m, p);
    auto cert = certify_parallel(d, p, 0.0);
    REQUIRE(cert.pass);

    CertificateFile file;
    file.scale_exp = d.scale_exp();
    file.d_scaled.assign(d.n_points(), std::vector<std::int64_t>(d.n_points(), 0));
    for (int i = 0; i < d.n_points(); ++i)
        for (int j = 0; j < d.n_points(); ++j) file.d_scaled[i][j] = d.scaled(i, j);
    file.labels = inst.labels;
    file.block_labels = inst.block_labels();
    file.block_distances_scaled.assign(p.n_blocks(), std::vector<std::int64_t>(p.n_blocks(), 0));
    for (const auto& pd : cert.pair_distances) {
        auto s = pd.dist.scaled_numerator(d.scale_exp());
        file.block_distances_scaled[pd.block_a][pd.block_b] = s;
        file.block_distances_scaled[pd.block_b][pd.block_a] = s;
    }
    file.pass = true;

    auto path = tmp_path("cert.json");
    save_certificate(file, path);
    auto back = load_certificate(path);
    std::remove(path.c_str());

    CHECK(back.scale_exp == file.scale_exp);
    CHECK(back.d_scaled == file.d_scaled);
    CHECK(back.pass);
    // reload and re-verify at zero tolerance
    auto d2 = back.metric();
    CHECK(d2 == d);
    CHECK(certify_parallel(d2, p, 0.0).pass);
}
