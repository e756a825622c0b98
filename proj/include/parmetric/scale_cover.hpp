#ifndef PARMETRIC_SCALE_COVER_HPP
#define PARMETRIC_SCALE_COVER_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "parmetric/distances.hpp"
#include "parmetric/metric_space.hpp"
#include "parmetric/partition.hpp"

namespace parmetric {

/// A scale-cover construction reached a state its own invariants rule out.
/// Seeing this means a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Level ladder for the cover construction. Level n uses net radius
/// 2^(-(n+2)), so base-cover members have diameter at most 2^(-(n+1)).
struct LevelPlan {
    int n_max = 0;

    double radius(int level) const { return std::ldexp(1.0, -(level + 2)); }
    double diameter_bound(int level) const { return std::ldexp(1.0, -level); }
};

/// Picks n_max so that at the deepest level the net balls are singletons:
/// n_max = ceil(log2(1 / min_positive_distance)) + 1.
inline LevelPlan plan_levels(const FiniteMetricSpace& m) {
    if (m.n_points() < 2) throw std::invalid_argument("plan_levels needs >= 2 points");
    double minpos = min_positive_distance(m);
    if (!(minpos > 0)) throw std::invalid_argument("metric has a non-positive off-diagonal entry");
    int k = 0;  // smallest k with 2^-k <= minpos
    while (std::ldexp(1.0, -k) > minpos) {
        ++k;
        if (k + 3 > DyadicValue::kMaxExp)
            throw structural_error("minimum distance too small for the dyadic scale range");
    }
    return LevelPlan{k + 1};
}

/// Greedy net cover at one level: repeatedly take the lowest-index point not
/// yet covered and form the closed ball of radius 2^(-(level+2)) around it.
/// Deterministic by point-index order.
inline std::vector<PointSet> build_base_cover(const FiniteMetricSpace& m, int level) {
    if (level < 1) throw std::invalid_argument("base cover level must be >= 1");
    const int n = m.n_points();
    const double r = LevelPlan{}.radius(level);
    std::vector<PointSet> cover;
    PointSet covered(n);
    for (int p = 0; p < n; ++p) {
        if (covered.contains(p)) continue;
        PointSet ball(n);
        for (int q = 0; q < n; ++q)
            if (m.dist(p, q) <= r) ball.insert(q);
        covered = covered | ball;
        cover.push_back(std::move(ball));
    }
    return cover;
}

/// Per-block refinement of the base cover at one level. members is the
/// family U(C); f and w are the intermediate saturated sets it is carved
/// from.
struct BlockCover {
    std::vector<int> base_indices;   // the V's meeting this block
    PointSet f;                      // saturation of the part of X the V's miss
    PointSet w;                      // saturated neighborhood of the block
    std::vector<PointSet> members;   // { w ∩ V }, empty intersections dropped
};

struct ScaleCoverLevel {
    int level = 0;
    std::vector<PointSet> base_cover;
    std::vector<BlockCover> per_block;  // indexed by BlockId
    bool checks_passed = false;
};

namespace detail {

/// Verifies, exhaustively, the two conditions every level must satisfy:
/// (i) each member has diameter at most 2^(-level);
/// (ii) a block meeting any member is contained in the union of members and
///      meets every member.
inline void check_level(const FiniteMetricSpace& m, const Partition& p, ScaleCoverLevel& lvl) {
    const double bound = LevelPlan{}.diameter_bound(lvl.level);
    for (int c = 0; c < p.n_blocks(); ++c) {
        const auto& bc = lvl.per_block[c];
        PointSet member_union(m.n_points());
        for (std::size_t u = 0; u < bc.members.size(); ++u) {
            if (diameter(m, bc.members[u]) > bound)
                throw internal_error("diameter bound violated at level " + std::to_string(lvl.level) +
                                     ", block " + std::to_string(c) + ", member " + std::to_string(u));
            member_union = member_union | bc.members[u];
        }
        if (!p.block(c).is_subset_of(member_union))
            throw internal_error("block " + std::to_string(c) + " not covered by its members at level " +
                                 std::to_string(lvl.level));
        for (int a = 0; a < p.n_blocks(); ++a) {
            bool meets_some = false;
            for (const auto& u : bc.members)
                if (p.block(a).intersects(u)) { meets_some = true; break; }
            if (!meets_some) continue;
            if (!p.block(a).is_subset_of(member_union))
                throw internal_error("block " + std::to_string(a) +
                                     " meets but is not contained in the cover of block " +
                                     std::to_string(c) + " at level " + std::to_string(lvl.level));
            for (std::size_t u = 0; u < bc.members.size(); ++u)
                if (!p.block(a).intersects(bc.members[u]))
                    throw internal_error("block " + std::to_string(a) + " misses member " +
                                         std::to_string(u) + " of block " + std::to_string(c) +
                                         " at level " + std::to_string(lvl.level));
        }
    }
    lvl.checks_passed = true;
}

}  // namespace detail

/// Builds one level of the per-block scale covers and verifies its
/// invariants. For each block C:
///   V(C)  = base-cover members meeting C
///   F(C)  = star of the set the V(C) miss
///   W(C)  = intersection of the stars of the V(C), minus F(C)
///   U(C)  = { W(C) ∩ V : V in V(C) }, empties dropped
inline ScaleCoverLevel build_scale_cover(const FiniteMetricSpace& m, const Partition& p, int level) {
    ScaleCoverLevel lvl;
    lvl.level = level;
    lvl.base_cover = build_base_cover(m, level);
    const int n = m.n_points();
    // Stars of base-cover members are shared across blocks.
    std::vector<PointSet> base_star;
    base_star.reserve(lvl.base_cover.size());
    for (const auto& v : lvl.base_cover) base_star.push_back(star(p, v));
    for (int c = 0; c < p.n_blocks(); ++c) {
        BlockCover bc;
        PointSet v_union(n);
        for (int vi = 0; vi < static_cast<int>(lvl.base_cover.size()); ++vi)
            if (lvl.base_cover[vi].intersects(p.block(c))) {
                bc.base_indices.push_back(vi);
                v_union = v_union | lvl.base_cover[vi];
            }
        PointSet missed = v_union.complement();
        bc.f = missed.empty() ? PointSet(n) : star(p, missed);
        PointSet w = PointSet::full(n);
        for (int vi : bc.base_indices) w = w & base_star[vi];
        bc.w = w - bc.f;
        for (int vi : bc.base_indices) {
            PointSet u = bc.w & lvl.base_cover[vi];
            if (!u.empty()) bc.members.push_back(std::move(u));
        }
        lvl.per_block.push_back(std::move(bc));
    }
    detail::check_level(m, p, lvl);
    return lvl;
}

}  // namespace parmetric

#endif
