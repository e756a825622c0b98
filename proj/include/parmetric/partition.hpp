#ifndef PARMETRIC_PARTITION_HPP
#define PARMETRIC_PARTITION_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parmetric/point_set.hpp"

namespace parmetric {

struct CoverViolation {
    enum class Kind { uncovered_point, overlapping_blocks, empty_block };
    Kind kind;
    int point = -1;     // witnessing point (uncovered / overlap)
    int block_a = -1;
    int block_b = -1;

    std::string describe() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::uncovered_point:
                os << "point " << point << " belongs to no block"; break;
            case Kind::overlapping_blocks:
                os << "point " << point << " belongs to blocks " << block_a << " and " << block_b; break;
            case Kind::empty_block:
                os << "block " << block_a << " is empty"; break;
        }
        return os.str();
    }
};

struct CoverReport {
    std::vector<CoverViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        if (ok()) return "valid partition";
        std::ostringstream os;
        os << violations.size() << " violation(s):";
        for (const auto& v : violations) os << "\n  " << v.describe();
        return os.str();
    }
};

/// Checks that a family of blocks is a partition: disjoint, covering, no
/// empty member. Overlapping covers are diagnosed, never accepted.
inline CoverReport validate_cover(int n_points, const std::vector<PointSet>& blocks) {
    CoverReport r;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        if (blocks[b].empty())
            r.violations.push_back({CoverViolation::Kind::empty_block, -1, b, -1});
    std::vector<int> owner(n_points, -1);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int p = 0; p < n_points; ++p) {
            if (!blocks[b].contains(p)) continue;
            if (owner[p] >= 0)
                r.violations.push_back({CoverViolation::Kind::overlapping_blocks, p, owner[p], b});
            else
                owner[p] = b;
        }
    for (int p = 0; p < n_points; ++p)
        if (owner[p] < 0)
            r.violations.push_back({CoverViolation::Kind::uncovered_point, p, -1, -1});
    return r;
}

struct invalid_partition : std::runtime_error {
    CoverReport report;
    explicit invalid_partition(CoverReport rep)
        : std::runtime_error(rep.summary()), report(std::move(rep)) {}
};

/// Disjoint cover of {0, ..., n_points-1} by labeled nonempty blocks.
/// Immutable once constructed; construction rejects anything that is not a
/// genuine partition.
class Partition {
public:
    static Partition from_blocks(int n_points, std::vector<PointSet> blocks) {
        CoverReport rep = validate_cover(n_points, blocks);
        if (!rep.ok()) throw invalid_partition(std::move(rep));
        Partition p;
        p.n_ = n_points;
        p.blocks_ = std::move(blocks);
        p.block_of_.assign(n_points, -1);
        for (int b = 0; b < static_cast<int>(p.blocks_.size()); ++b)
            for (int q = 0; q < n_points; ++q)
                if (p.blocks_[b].contains(q)) p.block_of_[q] = b;
        return p;
    }

    /// Blocks are numbered in order of first appearance of each label.
    static Partition from_labels(const std::vector<int>& labels) {
        const int n = static_cast<int>(labels.size());
        std::vector<PointSet> blocks;
        std::vector<int> label_to_block;
        for (int p = 0; p < n; ++p) {
            int lbl = labels[p];
            int b = -1;
            for (std::size_t i = 0; i < label_to_block.size(); ++i)
                if (label_to_block[i] == lbl) { b = static_cast<int>(i); break; }
            if (b < 0) {
                b = static_cast<int>(blocks.size());
                blocks.emplace_back(n);
                label_to_block.push_back(lbl);
            }
            blocks[b].insert(p);
        }
        return from_blocks(n, std::move(blocks));
    }

    static Partition singletons(int n_points) {
        std::vector<PointSet> blocks;
        for (int p = 0; p < n_points; ++p) {
            blocks.emplace_back(n_points);
            blocks.back().insert(p);
        }
        return from_blocks(n_points, std::move(blocks));
    }

    int n_points() const { return n_; }
    int n_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_of(int p) const { return block_of_[p]; }
    const PointSet& block(int b) const { return blocks_[b]; }
    const std::vector<PointSet>& blocks() const { return blocks_; }

private:
    Partition() = default;
    int n_ = 0;
    std::vector<PointSet> blocks_;
    std::vector<int> block_of_;
};

/// Star of S: the union of all blocks meeting S. For a partition this is
/// the block-saturation of S; St(empty) = empty.
inline PointSet star(const Partition& p, const PointSet& s) {
    PointSet r(p.n_points());
    for (const auto& block : p.blocks())
        if (block.intersects(s)) r = r | block;
    return r;
}

/// True iff S is a union of blocks, i.e. a fixed point of star.
inline bool is_saturated(const Partition& p, const PointSet& s) {
    return star(p, s) == s;
}

}  // namespace parmetric

#endif
