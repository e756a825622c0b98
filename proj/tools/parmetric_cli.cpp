// Command-line surface for the parallel-metrization library: instance
// validation, metric construction with exact certification, parallelism
// checks on given metrics, quotient tables, instance generation, and
// plot-data export.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parmetric/parmetric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCertification = 4;
constexpr int kExitInternal = 5;

using namespace parmetric;

struct cli_failure {
    int code;
    std::string message;
};

std::pair<FiniteMetricSpace, Partition> realize_or_fail(const Instance& inst, double tol) {
    try {
        return inst.realize(tol);
    } catch (const parse_error& e) {
        throw cli_failure{kExitParse, e.what()};
    } catch (const invalid_partition& e) {
        throw cli_failure{kExitValidation, std::string("partition invalid: ") + e.report.summary()};
    } catch (const structural_error& e) {
        throw cli_failure{kExitValidation, e.what()};
    }
}

Instance load_or_fail(const std::string& path) {
    try {
        return load_instance(path);
    } catch (const parse_error& e) {
        throw cli_failure{kExitParse, e.what()};
    }
}

CertificateFile make_certificate(const Instance& inst, const Partition& p, const DyadicMetric& d,
                                 const ParallelCertificate<DyadicValue>& cert) {
    CertificateFile file;
    file.scale_exp = d.scale_exp();
    file.d_scaled.assign(d.n_points(), std::vector<std::int64_t>(d.n_points(), 0));
    for (int i = 0; i < d.n_points(); ++i)
        for (int j = 0; j < d.n_points(); ++j) file.d_scaled[i][j] = d.scaled(i, j);
    if (inst.has_blocks()) {
        for (int q = 0; q < p.n_points(); ++q)
            file.labels.push_back("B" + std::to_string(p.block_of(q)));
    } else {
        file.labels = inst.labels;
    }
    file.block_labels = inst.block_labels();
    file.block_distances_scaled.assign(p.n_blocks(), std::vector<std::int64_t>(p.n_blocks(), 0));
    for (const auto& pd : cert.pair_distances) {
        auto s = pd.dist.scaled_numerator(d.scale_exp());
        file.block_distances_scaled[pd.block_a][pd.block_b] = s;
        file.block_distances_scaled[pd.block_b][pd.block_a] = s;
    }
    file.pass = cert.pass;
    for (const auto& v : cert.violations) {
        nlohmann::json jv;
        jv["block_a"] = v.block_a;
        jv["block_b"] = v.block_b;
        jv["point"] = v.point;
        jv["side"] = v.point_in_a ? "a" : "b";
        jv["point_dist_scaled"] = v.point_dist.scaled_numerator(d.scale_exp());
        jv["set_dist_scaled"] = v.set_dist.scaled_numerator(d.scale_exp());
        file.violations.push_back(jv);
    }
    return file;
}

nlohmann::json witness_to_json(const ChainWitness& w) {
    nlohmann::json j;
    j["points"] = w.points;
    auto steps = nlohmann::json::array();
    for (const auto& s : w.steps)
        steps.push_back({{"level", s.level}, {"block", s.block}, {"member", s.member}});
    j["steps"] = steps;
    j["cost"] = w.total.to_string();
    return j;
}

void oracle_cross_check(const ConstructionTrace& trace, const DyadicMetric& d) {
    const int n = d.n_points();
    if (n <= 16) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (trace.delta.exponent(x, y) != oracle_delta(trace.levels, x, y))
                    throw cli_failure{kExitInternal, "gauge table disagrees with definitional scan"};
    }
    if (n <= 12) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (!(oracle_chain_infimum(trace.delta, x, y) == d.dist(x, y)))
                    throw cli_failure{kExitInternal, "closure disagrees with exhaustive chain minimum"};
    }
    if (n > 16)
        std::cerr << "oracle cross-check skipped: instance larger than the oracle size limit\n";
}

int cmd_validate(const std::string& path, double tol) {
    auto inst = load_or_fail(path);
    auto [m, p] = realize_or_fail(inst, tol);
    std::cout << "metric: valid (" << m.n_points() << " points)\n"
              << "partition: valid (" << p.n_blocks() << " blocks)\n";
    return kExitOk;
}

int cmd_construct(const std::string& path, double tol, std::optional<int> max_level,
                  bool use_oracle, bool with_witnesses, const std::string& out) {
    auto inst = load_or_fail(path);
    auto [m, p] = realize_or_fail(inst, tol);
    auto [d, trace] = construct_parallel_metric(m, p, max_level, tol);
    if (!validate_metric(d).ok())
        throw cli_failure{kExitInternal, "constructed table fails exact metric validation"};
    auto cert = certify_parallel(d, p, 0.0);
    if (use_oracle) oracle_cross_check(trace, d);
    auto file = make_certificate(inst, p, d, cert);
    if (with_witnesses) {
        auto witnesses = nlohmann::json::array();
        for (const auto& pd : cert.pair_distances) {
            auto sd = set_distance(d, p.block(pd.block_a), p.block(pd.block_b));
            auto chain = optimal_chain(trace, sd.a, sd.b);
            for (int a : p.block(pd.block_a).to_vector()) {
                auto w = transport_chain(trace, p, chain, a);
                auto jw = witness_to_json(w);
                jw["block_a"] = pd.block_a;
                jw["block_b"] = pd.block_b;
                jw["from"] = a;
                witnesses.push_back(jw);
            }
        }
        file.witnesses = witnesses;
    }
    if (!out.empty()) save_certificate(file, out);
    std::cout << "levels: " << trace.levels.size() << ", scale_exp: " << d.scale_exp()
              << ", verdict: " << (cert.pass ? "pass" : "fail") << "\n";
    if (!cert.pass) {
        std::cout << cert.violations.front().describe() << "\n";
        return kExitCertification;
    }
    return kExitOk;
}

int cmd_certify(const std::string& path, double tol, const std::string& out) {
    auto inst = load_or_fail(path);
    auto [m, p] = realize_or_fail(inst, tol);
    auto cert = certify_parallel(m, p, tol);
    if (!out.empty()) {
        nlohmann::json j;
        j["verdict"] = cert.pass ? "pass" : "fail";
        auto jp = nlohmann::json::array();
        for (const auto& pd : cert.pair_distances)
            jp.push_back({{"block_a", pd.block_a}, {"block_b", pd.block_b}, {"dist", pd.dist}});
        j["block_distances"] = jp;
        auto jv = nlohmann::json::array();
        for (const auto& v : cert.violations)
            jv.push_back({{"block_a", v.block_a},
                          {"block_b", v.block_b},
                          {"point", v.point},
                          {"side", v.point_in_a ? "a" : "b"},
                          {"point_dist", v.point_dist},
                          {"set_dist", v.set_dist}});
        j["violations"] = jv;
        std::ofstream o(out);
        o << j.dump(2) << "\n";
    }
    if (!cert.pass) {
        std::cout << "verdict: fail\n" << cert.violations.front().describe() << "\n";
        return kExitCertification;
    }
    std::cout << "verdict: pass\n";
    return kExitOk;
}

int cmd_quotient(const std::string& path, double tol, std::optional<int> max_level,
                 const std::string& out) {
    auto inst = load_or_fail(path);
    auto [m, p] = realize_or_fail(inst, tol);
    auto [d, trace] = construct_parallel_metric(m, p, max_level, tol);
    auto cert = certify_parallel(d, p, 0.0);
    if (!cert.pass)
        throw cli_failure{kExitCertification, "constructed metric failed certification"};
    auto q = quotient_metric(d, p, cert);
    if (!validate_metric(q).ok())
        throw cli_failure{kExitInternal, "quotient table fails exact metric validation"};
    auto labels = inst.block_labels();
    std::ostringstream table;
    table << "block";
    for (const auto& l : labels) table << "\t" << l;
    table << "\n";
    for (int a = 0; a < q.n_points(); ++a) {
        table << labels[a];
        for (int b = 0; b < q.n_points(); ++b) table << "\t" << q.dist(a, b).to_string();
        table << "\n";
    }
    if (!out.empty()) {
        std::ofstream o(out);
        o << table.str();
    } else {
        std::cout << table.str();
    }
    return kExitOk;
}

int cmd_gen(const std::string& kind, const GenParams& gp, std::uint64_t seed, const std::string& out) {
    Instance inst;
    try {
        inst = generate(kind, gp, seed);
    } catch (const std::invalid_argument& e) {
        throw cli_failure{kExitParse, e.what()};
    }
    if (!out.empty()) {
        save_instance(inst, out);
    } else {
        std::cout << instance_to_json(inst).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_plot_data(const std::string& path, double tol, const std::string& prefix) {
    auto inst = load_or_fail(path);
    auto [m, p] = realize_or_fail(inst, tol);
    auto [d, trace] = construct_parallel_metric(m, p, std::nullopt, tol);
    {
        std::ofstream pts(prefix + "_points.tsv");
        pts << "point\tblock";
        std::size_t dim = inst.has_coords() ? inst.coords[0].size() : 0;
        for (std::size_t k = 0; k < dim; ++k) pts << "\tx" << k;
        pts << "\n";
        for (int i = 0; i < m.n_points(); ++i) {
            pts << i << "\t" << p.block_of(i);
            for (std::size_t k = 0; k < dim; ++k) pts << "\t" << inst.coords[i][k];
            pts << "\n";
        }
    }
    {
        std::ofstream pairs(prefix + "_pairs.tsv");
        pairs << "i\tj\trho\td\n";
        for (int i = 0; i < m.n_points(); ++i)
            for (int j = i + 1; j < m.n_points(); ++j)
                pairs << i << "\t" << j << "\t" << m.dist(i, j) << "\t"
                      << d.dist(i, j).to_double() << "\n";
    }
    std::cout << "wrote " << prefix << "_points.tsv and " << prefix << "_pairs.tsv\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel metrization of finite metric spaces"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    double tol = kDefaultMetricTol;
    std::uint64_t seed = 0;
    int max_level = -1;
    bool use_oracle = false, with_witnesses = false;
    std::string kind = "random_partition";
    GenParams gp;
    std::string plot_prefix = "plot";

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("instance", in_path, "instance file (JSON)")->required();
        sub->add_option("--tol", tol, "tolerance for real-valued metric checks");
        sub->add_option("--out", out_path, "output path");
    };

    auto* v = app.add_subcommand("validate", "validate an instance's metric and partition");
    add_common(v, true);

    auto* c = app.add_subcommand("construct", "construct and certify a parallel metric");
    add_common(c, true);
    c->add_option("--max-level", max_level, "override the level ladder depth");
    c->add_flag("--oracle", use_oracle, "cross-check against brute-force oracles (small instances)");
    c->add_flag("--witnesses", with_witnesses, "include transported chain witnesses");

    auto* ce = app.add_subcommand("certify", "check parallelism of the instance's own metric");
    add_common(ce, true);

    auto* q = app.add_subcommand("quotient", "construct, certify, and print the block-level metric");
    add_common(q, true);
    q->add_option("--max-level", max_level, "override the level ladder depth");

    auto* g = app.add_subcommand("gen", "generate a deterministic instance");
    g->add_option("--kind", kind, "circles | segments | product_fibers | random_partition");
    g->add_option("--seed", seed, "generator seed");
    g->add_option("--out", out_path, "output path");
    g->add_option("--points-per", gp.points_per, "points per circle/segment");
    g->add_option("--radii", gp.radii, "circle radii");
    g->add_option("--segments", gp.n_segments, "number of segments");
    g->add_option("--separation", gp.separation, "segment separation");
    g->add_option("--length", gp.length, "segment length");
    g->add_option("--fiber-size", gp.fiber_size, "fiber size");
    g->add_option("--base-size", gp.base_size, "base size");
    g->add_option("--n", gp.n, "point count");
    g->add_option("--blocks", gp.n_blocks, "block count");

    auto* pl = app.add_subcommand("plot-data", "emit point/block/distance tables");
    pl->add_option("instance", in_path, "instance file (JSON)")->required();
    pl->add_option("--tol", tol, "tolerance for real-valued metric checks");
    pl->add_option("--out", plot_prefix, "output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitParse;
    }

    std::optional<int> level_override;
    if (max_level >= 0) level_override = max_level;

    try {
        if (v->parsed()) return cmd_validate(in_path, tol);
        if (c->parsed()) return cmd_construct(in_path, tol, level_override, use_oracle, with_witnesses, out_path);
        if (ce->parsed()) return cmd_certify(in_path, tol, out_path);
        if (q->parsed()) return cmd_quotient(in_path, tol, level_override, out_path);
        if (g->parsed()) return cmd_gen(kind, gp, seed, out_path);
        if (pl->parsed()) return cmd_plot_data(in_path, tol, plot_prefix);
    } catch (const cli_failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
