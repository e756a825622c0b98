#ifndef PARMETRIC_GENERATE_HPP
#define PARMETRIC_GENERATE_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parmetric/io.hpp"

namespace parmetric {

struct GenParams {
    // circles
    std::vector<double> radii = {1.0, 1.2};
    // circles / segments: sample points per block
    int points_per = 8;
    // segments
    int n_segments = 2;
    double separation = 1.0;
    double length = 1.0;
    // product_fibers
    int fiber_size = 3;
    int base_size = 3;
    // random_partition
    int n = 16;
    int n_blocks = 3;
};

/// Deterministic instance generators. Same (kind, params, seed) always
/// yields the same instance, byte for byte after serialization.
inline Instance generate(const std::string& kind, const GenParams& gp, std::uint64_t seed) {
    Instance inst;
    inst.name = kind + "-" + std::to_string(seed);
    if (kind == "circles") {
        if (gp.radii.size() < 2 || gp.points_per < 1)
            throw std::invalid_argument("circles needs >= 2 radii and >= 1 point per circle");
        // Sample angles are jittered: perfectly aligned uniform samples of
        // concentric circles are exactly parallel by rotational symmetry,
        // which would defeat this generator's purpose as a negative control.
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> jitter(0.0, 0.25);
        for (std::size_t c = 0; c < gp.radii.size(); ++c)
            for (int i = 0; i < gp.points_per; ++i) {
                double t = 2.0 * M_PI * (i + jitter(rng)) / gp.points_per;
                inst.coords.push_back({gp.radii[c] * std::cos(t), gp.radii[c] * std::sin(t)});
                inst.labels.push_back("C" + std::to_string(c));
            }
    } else if (kind == "segments") {
        if (gp.n_segments < 1 || gp.points_per < 1)
            throw std::invalid_argument("segments needs >= 1 segment and >= 1 point each");
        for (int s = 0; s < gp.n_segments; ++s)
            for (int i = 0; i < gp.points_per; ++i) {
                double x = gp.points_per > 1 ? gp.length * i / (gp.points_per - 1) : 0.0;
                inst.coords.push_back({x, s * gp.separation});
                inst.labels.push_back("S" + std::to_string(s));
            }
    } else if (kind == "product_fibers") {
        if (gp.fiber_size < 1 || gp.base_size < 1)
            throw std::invalid_argument("product_fibers needs positive fiber and base sizes");
        // Grid F x Q with one block per base element; fibers are parallel
        // already under the Euclidean metric.
        for (int q = 0; q < gp.base_size; ++q)
            for (int f = 0; f < gp.fiber_size; ++f) {
                inst.coords.push_back({0.25 * f, 1.0 * q});
                inst.labels.push_back("Q" + std::to_string(q));
            }
    } else if (kind == "random_partition") {
        if (gp.n < 1 || gp.n_blocks < 1 || gp.n_blocks > gp.n)
            throw std::invalid_argument("random_partition needs 1 <= n_blocks <= n");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coord(0.0, 1.0);
        std::uniform_int_distribution<int> block(0, gp.n_blocks - 1);
        for (int p = 0; p < gp.n; ++p) {
            inst.coords.push_back({coord(rng), coord(rng)});
            // First n_blocks points pin one point per block so none is empty.
            int b = p < gp.n_blocks ? p : block(rng);
            inst.labels.push_back("B" + std::to_string(b));
        }
    } else {
        throw std::invalid_argument("unknown generator kind: " + kind);
    }
    return inst;
}

}  // namespace parmetric

#endif
