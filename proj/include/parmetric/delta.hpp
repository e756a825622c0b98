#ifndef PARMETRIC_DELTA_HPP
#define PARMETRIC_DELTA_HPP

#include <vector>

#include "parmetric/dyadic.hpp"
#include "parmetric/scale_cover.hpp"

namespace parmetric {

/// Where a pair's gauge exponent was realized: member `member` of block
/// `block`'s cover at `level`. level 0 is the implicit whole-space cover
/// (block and member are -1).
struct DeltaWitness {
    int level = 0;
    int block = -1;
    int member = -1;
};

/// Symmetric table of gauge exponents: delta(x,y) = 2^(-e(x,y)) for x != y,
/// where e(x,y) is the deepest level at which x and y share a cover member.
/// delta(x,x) = 0 by convention.
class DeltaTable {
public:
    DeltaTable() = default;

    explicit DeltaTable(int n_points)
        : n_(n_points),
          exp_(std::size_t(n_points) * n_points, 0),
          wit_(std::size_t(n_points) * n_points) {}

    int n_points() const { return n_; }

    int exponent(int x, int y) const { return exp_[std::size_t(x) * n_ + y]; }

    DyadicValue delta(int x, int y) const {
        if (x == y) return DyadicValue::zero();
        return DyadicValue::pow2(exponent(x, y));
    }

    const DeltaWitness& witness(int x, int y) const { return wit_[std::size_t(x) * n_ + y]; }

    void record(int x, int y, int level, const DeltaWitness& w) {
        if (level <= exponent(x, y)) return;
        exp_[std::size_t(x) * n_ + y] = level;
        exp_[std::size_t(y) * n_ + x] = level;
        wit_[std::size_t(x) * n_ + y] = w;
        wit_[std::size_t(y) * n_ + x] = w;
    }

    int max_exponent() const {
        int e = 0;
        for (auto v : exp_) e = std::max(e, v);
        return e;
    }

    bool operator==(const DeltaTable& o) const { return n_ == o.n_ && exp_ == o.exp_; }

private:
    int n_ = 0;
    std::vector<int> exp_;
    std::vector<DeltaWitness> wit_;
};

/// Collapses the built levels into the gauge table: for every pair, the
/// deepest (level, block, member) co-occurrence wins. Pairs sharing no
/// member beyond the whole space stay at exponent 0.
inline DeltaTable build_delta(const std::vector<ScaleCoverLevel>& levels, int n_points) {
    DeltaTable t(n_points);
    for (const auto& lvl : levels)
        for (int c = 0; c < static_cast<int>(lvl.per_block.size()); ++c)
            for (int u = 0; u < static_cast<int>(lvl.per_block[c].members.size()); ++u) {
                const auto pts = lvl.per_block[c].members[u].to_vector();
                for (std::size_t a = 0; a < pts.size(); ++a)
                    for (std::size_t b = a + 1; b < pts.size(); ++b)
                        t.record(pts[a], pts[b], lvl.level, {lvl.level, c, u});
            }
    return t;
}

}  // namespace parmetric

#endif
