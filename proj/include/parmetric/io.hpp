#ifndef PARMETRIC_IO_HPP
#define PARMETRIC_IO_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parmetric/metric_space.hpp"
#include "parmetric/parallel.hpp"
#include "parmetric/partition.hpp"

namespace parmetric {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk instance: point coordinates or a distance table (full square or
/// lower-triangular rows), plus one block label per point.
struct Instance {
    std::string name;
    std::vector<std::vector<double>> coords;  // exactly one of coords/dist nonempty
    std::vector<std::vector<double>> dist;
    std::vector<std::string> labels;          // one of labels/blocks present
    std::vector<std::vector<int>> blocks;     // explicit cover; may fail validation

    bool has_coords() const { return !coords.empty(); }
    bool has_blocks() const { return labels.empty(); }

    int n_points() const {
        return static_cast<int>(has_coords() ? coords.size() : dist.size());
    }

    /// Builds the validated metric and partition. Axiom violations raise a
    /// structural_error carrying the full report; a cover that is not a
    /// partition raises invalid_partition with the witnessing points.
    std::pair<FiniteMetricSpace, Partition> realize(double tol = kDefaultMetricTol) const {
        const int n = n_points();
        if (!has_blocks() && static_cast<int>(labels.size()) != n)
            throw parse_error("labels length " + std::to_string(labels.size()) +
                              " does not match point count " + std::to_string(n));
        FiniteMetricSpace m = has_coords() ? euclidean_from_points(coords)
                                           : FiniteMetricSpace::from_table(dist);
        ValidationReport rep = validate_metric(m, tol);
        if (!rep.ok()) throw structural_error("metric axioms violated: " + rep.summary());
        if (has_blocks()) {
            std::vector<PointSet> sets;
            for (const auto& b : blocks) {
                PointSet s(n);
                for (int p : b) {
                    if (p < 0 || p >= n) throw parse_error("block point index out of range");
                    s.insert(p);
                }
                sets.push_back(std::move(s));
            }
            return {std::move(m), Partition::from_blocks(n, std::move(sets))};
        }
        std::vector<int> ids(n);
        std::vector<std::string> seen;
        for (int p = 0; p < n; ++p) {
            int id = -1;
            for (std::size_t i = 0; i < seen.size(); ++i)
                if (seen[i] == labels[p]) { id = static_cast<int>(i); break; }
            if (id < 0) {
                id = static_cast<int>(seen.size());
                seen.push_back(labels[p]);
            }
            ids[p] = id;
        }
        return {std::move(m), Partition::from_labels(ids)};
    }

    /// Distinct labels in order of first appearance (block order).
    std::vector<std::string> block_labels() const {
        if (has_blocks()) {
            std::vector<std::string> out;
            for (std::size_t b = 0; b < blocks.size(); ++b) out.push_back("B" + std::to_string(b));
            return out;
        }
        std::vector<std::string> seen;
        for (const auto& l : labels) {
            bool found = false;
            for (const auto& s : seen)
                if (s == l) { found = true; break; }
            if (!found) seen.push_back(l);
        }
        return seen;
    }
};

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    if (inst.has_coords()) j["coords"] = inst.coords;
    else j["dist"] = inst.dist;
    if (inst.has_blocks()) j["blocks"] = inst.blocks;
    else j["labels"] = inst.labels;
    return j;
}

/// Accepts either a full square table or lower-triangular rows (row i of
/// length i, diagonal omitted); the latter is mirrored.
inline Instance instance_from_json(const nlohmann::json& j) {
    Instance inst;
    if (j.contains("name")) inst.name = j.at("name").get<std::string>();
    const bool has_coords = j.contains("coords");
    const bool has_dist = j.contains("dist");
    if (has_coords == has_dist)
        throw parse_error("instance must contain exactly one of 'coords' and 'dist'");
    if (j.contains("labels") == j.contains("blocks"))
        throw parse_error("instance must contain exactly one of 'labels' and 'blocks'");
    if (j.contains("labels"))
        inst.labels = j.at("labels").get<std::vector<std::string>>();
    else
        inst.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    if (has_coords) {
        inst.coords = j.at("coords").get<std::vector<std::vector<double>>>();
        return inst;
    }
    auto rows = j.at("dist").get<std::vector<std::vector<double>>>();
    const int n = static_cast<int>(rows.size());
    bool lower = true, full = true;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != i) lower = false;
        if (static_cast<int>(rows[i].size()) != n) full = false;
    }
    if (full) {
        inst.dist = std::move(rows);
    } else if (lower) {
        inst.dist.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < i; ++k) {
                inst.dist[i][k] = rows[i][k];
                inst.dist[k][i] = rows[i][k];
            }
    } else {
        throw parse_error("'dist' must be a full square table or lower-triangular rows");
    }
    return inst;
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad instance schema in ") + path + ": " + e.what());
    }
}

inline void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << instance_to_json(inst).dump(2) << "\n";
}

/// Serialized construction result. Dyadic data is stored as integers at a
/// shared scale, so reloading is lossless.
struct CertificateFile {
    int scale_exp = 0;
    std::vector<std::vector<std::int64_t>> d_scaled;
    std::vector<std::string> labels;                       // per point
    std::vector<std::string> block_labels;                 // per block
    std::vector<std::vector<std::int64_t>> block_distances_scaled;
    bool pass = false;
    nlohmann::json violations = nlohmann::json::array();
    nlohmann::json witnesses;                              // optional

    DyadicMetric metric() const {
        const int n = static_cast<int>(d_scaled.size());
        DyadicMetric m(n, scale_exp);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set_scaled(i, j, d_scaled[i][j]);
        return m;
    }
};

inline nlohmann::json certificate_to_json(const CertificateFile& c) {
    nlohmann::json j;
    j["scale_exp"] = c.scale_exp;
    j["d_scaled"] = c.d_scaled;
    j["labels"] = c.labels;
    j["block_labels"] = c.block_labels;
    j["block_distances_scaled"] = c.block_distances_scaled;
    j["verdict"] = c.pass ? "pass" : "fail";
    j["violations"] = c.violations;
    if (!c.witnesses.is_null()) j["witnesses"] = c.witnesses;
    return j;
}

inline CertificateFile certificate_from_json(const nlohmann::json& j) {
    CertificateFile c;
    c.scale_exp = j.at("scale_exp").get<int>();
    c.d_scaled = j.at("d_scaled").get<std::vector<std::vector<std::int64_t>>>();
    c.labels = j.at("labels").get<std::vector<std::string>>();
    c.block_labels = j.at("block_labels").get<std::vector<std::string>>();
    c.block_distances_scaled = j.at("block_distances_scaled").get<std::vector<std::vector<std::int64_t>>>();
    c.pass = j.at("verdict").get<std::string>() == "pass";
    if (j.contains("violations")) c.violations = j.at("violations");
    if (j.contains("witnesses")) c.witnesses = j.at("witnesses");
    return c;
}

inline CertificateFile load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
        return certificate_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad certificate in ") + path + ": " + e.what());
    }
}

inline void save_certificate(const CertificateFile& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << certificate_to_json(c).dump(2) << "\n";
}

}  // namespace parmetric

#endif
