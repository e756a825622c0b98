#ifndef PARMETRIC_PARALLEL_HPP
#define PARMETRIC_PARALLEL_HPP

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "parmetric/distances.hpp"
#include "parmetric/metric_space.hpp"
#include "parmetric/partition.hpp"

namespace parmetric {

namespace detail {

inline bool values_equal(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
inline bool values_equal(const DyadicValue& a, const DyadicValue& b, double) { return a == b; }

inline double as_double(double v) { return v; }
inline double as_double(const DyadicValue& v) { return v.to_double(); }

}  // namespace detail

/// A point whose distance to the opposite set differs from the set-to-set
/// distance. Re-evaluating the recorded values reproduces the failure.
template <class Value>
struct ParallelViolation {
    int block_a = -1, block_b = -1;
    int point = -1;
    bool point_in_a = true;
    Value point_dist{};
    Value set_dist{};

    std::string describe() const {
        std::ostringstream os;
        os << "blocks (" << block_a << "," << block_b << "): point " << point
           << (point_in_a ? " in first" : " in second") << " block has d(point,other) = "
           << detail::as_double(point_dist) << " but d(A,B) = " << detail::as_double(set_dist);
        return os.str();
    }
};

/// Two sets are parallel when every cross point-to-set distance equals the
/// set-to-set distance. Returns the first violation in point-index order,
/// or nothing.
template <class Metric>
auto is_parallel_pair(const Metric& m, const PointSet& a, const PointSet& b, double tol = 0.0)
    -> std::optional<ParallelViolation<decltype(m.dist(0, 0))>> {
    using Value = decltype(m.dist(0, 0));
    const Value dab = set_distance(m, a, b).value;
    for (int x = 0; x < m.n_points(); ++x) {
        if (!a.contains(x)) continue;
        Value dx = point_set_distance(m, x, b);
        if (!detail::values_equal(dx, dab, tol))
            return ParallelViolation<Value>{-1, -1, x, true, dx, dab};
    }
    for (int y = 0; y < m.n_points(); ++y) {
        if (!b.contains(y)) continue;
        Value dy = point_set_distance(m, y, a);
        if (!detail::values_equal(dy, dab, tol))
            return ParallelViolation<Value>{-1, -1, y, false, dy, dab};
    }
    return std::nullopt;
}

template <class Value>
struct BlockPairDistance {
    int block_a, block_b;
    Value dist;
    int attain_a, attain_b;
};

/// Exhaustive parallelism certificate over all block pairs of a partition.
template <class Value>
struct ParallelCertificate {
    std::vector<BlockPairDistance<Value>> pair_distances;
    std::vector<ParallelViolation<Value>> violations;
    bool pass = false;
};

template <class Metric>
auto certify_parallel(const Metric& m, const Partition& p, double tol = 0.0)
    -> ParallelCertificate<decltype(m.dist(0, 0))> {
    using Value = decltype(m.dist(0, 0));
    ParallelCertificate<Value> cert;
    for (int a = 0; a < p.n_blocks(); ++a)
        for (int b = a + 1; b < p.n_blocks(); ++b) {
            auto sd = set_distance(m, p.block(a), p.block(b));
            cert.pair_distances.push_back({a, b, sd.value, sd.a, sd.b});
            if (auto v = is_parallel_pair(m, p.block(a), p.block(b), tol)) {
                v->block_a = a;
                v->block_b = b;
                cert.violations.push_back(*v);
            }
        }
    cert.pass = cert.violations.empty();
    return cert;
}

enum class Dichotomy { disjoint, coincide, violated };

/// Parallel closed sets are either disjoint or equal. A `violated` verdict
/// flags inconsistent input (possible only with a nonzero tolerance or a
/// non-metric table).
template <class Metric>
Dichotomy disjoint_or_coincide(const Metric& m, const PointSet& a, const PointSet& b, double tol = 0.0) {
    if (is_parallel_pair(m, a, b, tol))
        throw std::invalid_argument("disjoint_or_coincide requires a parallel pair");
    if (!a.intersects(b)) return Dichotomy::disjoint;
    return a == b ? Dichotomy::coincide : Dichotomy::violated;
}

namespace detail {
inline FiniteMetricSpace empty_like(const FiniteMetricSpace&, int n) { return FiniteMetricSpace(n); }
inline DyadicMetric empty_like(const DyadicMetric& m, int n) { return DyadicMetric(n, m.scale_exp()); }
}  // namespace detail

/// Block-level metric D(A,B) = d(A,B). Well defined (and a metric) exactly
/// because the certificate says d is parallel for the partition.
template <class Metric>
Metric quotient_metric(const Metric& m, const Partition& p,
                       const ParallelCertificate<decltype(std::declval<Metric>().dist(0, 0))>& cert) {
    if (!cert.pass) throw std::invalid_argument("quotient requires a passing parallelism certificate");
    Metric q = detail::empty_like(m, p.n_blocks());
    for (const auto& pd : cert.pair_distances)
        q.set(pd.block_a, pd.block_b, pd.dist);
    return q;
}

}  // namespace parmetric

#endif
