#ifndef PARMETRIC_DISTANCES_HPP
#define PARMETRIC_DISTANCES_HPP

#include <stdexcept>
#include <utility>

#include "parmetric/point_set.hpp"

namespace parmetric {

template <class Value>
struct SetDistanceResult {
    Value value;
    int a = -1;  // attaining point in A
    int b = -1;  // attaining point in B
};

/// d(A,B) = min over cross pairs, together with an attaining pair. The
/// minimum is attained because the space is finite.
template <class Metric>
auto set_distance(const Metric& m, const PointSet& a, const PointSet& b)
    -> SetDistanceResult<decltype(m.dist(0, 0))> {
    if (a.empty() || b.empty()) throw std::invalid_argument("set_distance on empty set");
    SetDistanceResult<decltype(m.dist(0, 0))> best;
    for (int i = 0; i < m.n_points(); ++i) {
        if (!a.contains(i)) continue;
        for (int j = 0; j < m.n_points(); ++j) {
            if (!b.contains(j)) continue;
            auto d = m.dist(i, j);
            if (best.a < 0 || d < best.value) best = {d, i, j};
        }
    }
    return best;
}

/// d(x,B) = d({x},B).
template <class Metric>
auto point_set_distance(const Metric& m, int x, const PointSet& b) {
    PointSet a(m.n_points());
    a.insert(x);
    return set_distance(m, a, b).value;
}

/// Largest pairwise distance within S; 0 for singletons.
template <class Metric>
auto diameter(const Metric& m, const PointSet& s) -> decltype(m.dist(0, 0)) {
    if (s.empty()) throw std::invalid_argument("diameter of empty set");
    auto best = m.dist(s.first(), s.first());  // zero of the value type
    for (int i = 0; i < m.n_points(); ++i) {
        if (!s.contains(i)) continue;
        for (int j = i + 1; j < m.n_points(); ++j) {
            if (!s.contains(j)) continue;
            auto d = m.dist(i, j);
            if (best < d) best = d;
        }
    }
    return best;
}

}  // namespace parmetric

#endif
