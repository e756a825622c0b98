#ifndef PARMETRIC_ORACLE_HPP
#define PARMETRIC_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "parmetric/delta.hpp"
#include "parmetric/dyadic.hpp"
#include "parmetric/scale_cover.hpp"

namespace parmetric {

/// Literal chain infimum: minimum gauge cost over every simple sequence from
/// x to y, by exhaustive search. Cross-checks chain_closure on small
/// instances; refuses anything larger than 12 points.
inline DyadicValue oracle_chain_infimum(const DeltaTable& delta, int x, int y) {
    const int n = delta.n_points();
    if (n > 12) throw std::invalid_argument("oracle_chain_infimum limited to 12 points");
    if (x == y) return DyadicValue::zero();
    DyadicValue best = delta.delta(x, y);
    std::vector<bool> visited(n, false);
    visited[x] = true;
    // DFS over simple chains; prune when the partial cost already exceeds
    // the best complete chain found.
    auto dfs = [&](auto&& self, int at, DyadicValue cost) -> void {
        for (int nxt = 0; nxt < n; ++nxt) {
            if (visited[nxt]) continue;
            DyadicValue c = cost + delta.delta(at, nxt);
            if (best < c) continue;
            if (nxt == y) {
                if (c < best) best = c;
                continue;
            }
            visited[nxt] = true;
            self(self, nxt, c);
            visited[nxt] = false;
        }
    };
    dfs(dfs, x, DyadicValue::zero());
    return best;
}

/// Literal gauge evaluation: scans every (level, block, member) triple and
/// returns the deepest co-occurrence of x and y, 0 if none.
inline int oracle_delta(const std::vector<ScaleCoverLevel>& levels, int x, int y) {
    int best = 0;
    for (const auto& lvl : levels)
        for (const auto& bc : lvl.per_block)
            for (const auto& u : bc.members)
                if (u.contains(x) && u.contains(y) && lvl.level > best) best = lvl.level;
    return best;
}

}  // namespace parmetric

#endif
