#ifndef PARMETRIC_SEMICONTINUITY_HPP
#define PARMETRIC_SEMICONTINUITY_HPP

#include <algorithm>
#include <vector>

#include "parmetric/metric_space.hpp"
#include "parmetric/partition.hpp"

namespace parmetric {

struct ModulusEntry {
    double scale;     // epsilon
    double modulus;   // worst one-sided Hausdorff gap over pairs within epsilon
    int witness_x = -1, witness_y = -1;
};

struct ModulusReport {
    std::vector<ModulusEntry> entries;
};

namespace detail {

/// Directed Hausdorff gap: sup over p in A of d(p, B).
inline double directed_gap(const FiniteMetricSpace& m, const PointSet& a, const PointSet& b) {
    double worst = 0.0;
    for (int p = 0; p < m.n_points(); ++p) {
        if (!a.contains(p)) continue;
        double best = -1.0;
        for (int q = 0; q < m.n_points(); ++q) {
            if (!b.contains(q)) continue;
            if (best < 0 || m.dist(p, q) < best) best = m.dist(p, q);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace detail

/// Quantitative stand-in for cover continuity on a finite sample: for each
/// scale epsilon, the worst one-sided Hausdorff gap between the blocks of
/// any two points within distance epsilon. A modulus decreasing with
/// epsilon is evidence that the sampled cover is continuous.
inline ModulusReport semicontinuity_diagnostic(const FiniteMetricSpace& m,
                                               const Partition& p,
                                               const std::vector<double>& scales) {
    ModulusReport rep;
    const int n = m.n_points();
    // Gap between blocks is symmetrized over the two directions and cached
    // per block pair.
    const int nb = p.n_blocks();
    std::vector<double> gap(std::size_t(nb) * nb, 0.0);
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
            if (a != b)
                gap[std::size_t(a) * nb + b] =
                    std::max(detail::directed_gap(m, p.block(a), p.block(b)),
                             detail::directed_gap(m, p.block(b), p.block(a)));
    for (double eps : scales) {
        ModulusEntry e{eps, 0.0, -1, -1};
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (m.dist(x, y) > eps) continue;
                double g = gap[std::size_t(p.block_of(x)) * nb + p.block_of(y)];
                if (g > e.modulus) { e.modulus = g; e.witness_x = x; e.witness_y = y; }
            }
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace parmetric

#endif
