#ifndef PARMETRIC_CHAIN_CLOSURE_HPP
#define PARMETRIC_CHAIN_CLOSURE_HPP

#include <cstdint>
#include <vector>

#include "parmetric/delta.hpp"
#include "parmetric/metric_space.hpp"

namespace parmetric {

/// Metric closure of the gauge, plus next-hop data for reconstructing an
/// optimal chain per pair.
struct ChainClosureResult {
    DyadicMetric metric;
    int scale_exp = 0;            // scale the closure ran at, before canonicalization
    std::vector<int> next;        // next[x*n+y]: successor of x on a shortest x->y chain

    std::vector<int> path(int x, int y) const {
        const int n = metric.n_points();
        std::vector<int> p{x};
        while (x != y) {
            x = next[std::size_t(x) * n + y];
            p.push_back(x);
        }
        return p;
    }
};

/// All-pairs shortest chains over the complete graph weighted by the gauge,
/// in exact integer arithmetic at the table's finest scale. Positive weights
/// make simple chains sufficient, so the relaxation is exact.
inline ChainClosureResult chain_closure(const DeltaTable& delta) {
    const int n = delta.n_points();
    const int scale = delta.max_exponent();
    ChainClosureResult r;
    r.scale_exp = scale;
    r.metric = DyadicMetric(n, scale);
    r.next.assign(std::size_t(n) * n, 0);
    std::vector<std::int64_t> w(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) w[std::size_t(i) * n + j] = std::int64_t{1} << (scale - delta.exponent(i, j));
            r.next[std::size_t(i) * n + j] = j;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const std::int64_t dik = w[std::size_t(i) * n + k];
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                std::int64_t cand = dik + w[std::size_t(k) * n + j];
                if (cand < w[std::size_t(i) * n + j]) {
                    w[std::size_t(i) * n + j] = cand;
                    r.next[std::size_t(i) * n + j] = r.next[std::size_t(i) * n + k];
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r.metric.set_scaled(i, j, w[std::size_t(i) * n + j]);
    return r;
}

}  // namespace parmetric

#endif
