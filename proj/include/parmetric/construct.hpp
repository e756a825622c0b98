#ifndef PARMETRIC_CONSTRUCT_HPP
#define PARMETRIC_CONSTRUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "parmetric/chain_closure.hpp"
#include "parmetric/delta.hpp"
#include "parmetric/distances.hpp"
#include "parmetric/metric_space.hpp"
#include "parmetric/partition.hpp"
#include "parmetric/scale_cover.hpp"

namespace parmetric {

/// One step of a chain: the cover member certifying that two consecutive
/// points lie at gauge distance 2^(-level). level 0 means the whole space.
struct ChainStep {
    int level = 0;
    int block = -1;
    int member = -1;
};

/// A chain x_0, ..., x_m with, for each step, the cover member containing
/// both endpoints. The total cost bounds the chain metric between the ends.
struct ChainWitness {
    std::vector<int> points;
    std::vector<ChainStep> steps;   // steps[i] joins points[i] and points[i+1]
    DyadicValue total;
};

/// Everything the construction produced on the way to the final metric.
/// Kept for certification and chain transport.
struct ConstructionTrace {
    FiniteMetricSpace rho;                 // input metric truncated to <= 1
    LevelPlan plan;
    std::vector<ScaleCoverLevel> levels;   // levels[k] holds level k+1
    DeltaTable delta;
    ChainClosureResult closure;

    /// Cover member referenced by a step; the whole space for level 0.
    PointSet member_set(const ChainStep& s) const {
        if (s.level == 0) return PointSet::full(rho.n_points());
        return levels[s.level - 1].per_block[s.block].members[s.member];
    }
};

/// Checks a witness against a trace: consecutive points must co-occur in the
/// recorded member and the total must equal the sum of the step costs.
inline bool validate_witness(const ConstructionTrace& trace, const ChainWitness& w) {
    if (w.points.size() != w.steps.size() + 1) return false;
    DyadicValue sum = DyadicValue::zero();
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        PointSet u = trace.member_set(w.steps[i]);
        if (!u.contains(w.points[i]) || !u.contains(w.points[i + 1])) return false;
        sum = sum + DyadicValue::pow2(w.steps[i].level);
    }
    return sum == w.total;
}

/// Optimal chain between two points, read off the closure's next-hop data.
/// Each step carries the gauge witness for its pair, so the chain's cost is
/// exactly the constructed distance d(x,y).
inline ChainWitness optimal_chain(const ConstructionTrace& trace, int x, int y) {
    ChainWitness w;
    w.points = trace.closure.path(x, y);
    w.total = DyadicValue::zero();
    for (std::size_t i = 0; i + 1 < w.points.size(); ++i) {
        const DeltaWitness& dw = trace.delta.witness(w.points[i], w.points[i + 1]);
        w.steps.push_back({dw.level, dw.block, dw.member});
        w.total = w.total + DyadicValue::pow2(dw.level);
    }
    return w;
}

/// Builds a parallel metric for the partition: truncate the input, build the
/// scale covers level by level, collapse them into the gauge, close under
/// chains. The returned metric is canonicalized and dominates the truncated
/// input entrywise.
inline std::pair<DyadicMetric, ConstructionTrace> construct_parallel_metric(
    const FiniteMetricSpace& m, const Partition& p,
    std::optional<int> max_level_override = std::nullopt,
    double tol = kDefaultMetricTol) {
    if (p.n_points() != m.n_points())
        throw structural_error("partition and metric sizes differ");
    {
        ValidationReport rep = validate_metric(m, tol);
        if (!rep.ok()) throw structural_error("input metric invalid: " + rep.summary());
    }
    ConstructionTrace trace;
    trace.rho = truncate_to_unit(m);
    if (m.n_points() == 1) {
        trace.plan = LevelPlan{0};
        trace.delta = DeltaTable(1);
        trace.closure = chain_closure(trace.delta);
        DyadicMetric d = trace.closure.metric;
        return {std::move(d), std::move(trace)};
    }
    trace.plan = plan_levels(trace.rho);
    int n_levels = trace.plan.n_max;
    if (max_level_override) {
        if (*max_level_override < trace.plan.n_max)
            throw std::invalid_argument("max level override below the planned level count");
        n_levels = *max_level_override;
    }
    for (int n = 1; n <= n_levels; ++n)
        trace.levels.push_back(build_scale_cover(trace.rho, p, n));
    trace.delta = build_delta(trace.levels, m.n_points());
    // Gauge domination: every co-occurring pair sits in a member of diameter
    // at most its gauge value, so rho <= delta holds by the level checks.
    trace.closure = chain_closure(trace.delta);
    DyadicMetric d = trace.closure.metric;
    d.canonicalize();
    return {std::move(d), std::move(trace)};
}

/// Replays a chain from a different start point of the same block. Step i of
/// the input chain joins two points inside a member of some block cover; the
/// replay walks members of the same cover, so every step keeps its cost and
/// the result ends in the block the input chain ended in.
inline ChainWitness transport_chain(const ConstructionTrace& trace, const Partition& p,
                                    const ChainWitness& chain, int a) {
    if (chain.points.empty()) throw std::invalid_argument("empty chain");
    if (p.block_of(a) != p.block_of(chain.points.front()))
        throw std::invalid_argument("start point is not in the chain's starting block");
    ChainWitness out;
    out.points.push_back(a);
    out.total = DyadicValue::zero();
    PointSet used(p.n_points());
    used.insert(a);
    int prev = a;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& s = chain.steps[i];
        const PointSet& target_block = p.block(p.block_of(chain.points[i + 1]));
        ChainStep out_step = s;
        int next_pt = -1;
        if (s.level == 0) {
            // Whole-space member: any point of the target block works.
            PointSet fresh = target_block - used;
            next_pt = fresh.empty() ? target_block.first() : fresh.first();
        } else {
            const auto& members = trace.levels[s.level - 1].per_block[s.block].members;
            int mi = -1;
            for (int u = 0; u < static_cast<int>(members.size()); ++u)
                if (members[u].contains(prev)) { mi = u; break; }
            if (mi < 0)
                throw internal_error("transported point escaped the level cover");
            PointSet meet = target_block & members[mi];
            if (meet.empty())
                throw internal_error("target block misses a cover member");
            PointSet fresh = meet - used;
            next_pt = fresh.empty() ? meet.first() : fresh.first();
            out_step.member = mi;
        }
        out.points.push_back(next_pt);
        out.steps.push_back(out_step);
        out.total = out.total + DyadicValue::pow2(s.level);
        used.insert(next_pt);
        prev = next_pt;
    }
    return out;
}

}  // namespace parmetric

#endif
