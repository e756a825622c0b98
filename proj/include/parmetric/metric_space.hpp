#ifndef PARMETRIC_METRIC_SPACE_HPP
#define PARMETRIC_METRIC_SPACE_HPP

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parmetric/dyadic.hpp"

namespace parmetric {

/// Malformed input (non-square table, NaN entries, size mismatch). Distinct
/// from axiom violations, which are reported, not thrown.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultMetricTol = 1e-9;

enum class ViolationKind {
    nonzero_diagonal,
    asymmetry,
    negative_entry,
    zero_off_diagonal,
    triangle,
};

struct AxiomViolation {
    ViolationKind kind;
    int i = -1, j = -1, k = -1;  // witnessing indices; k used by triangle only
    double lhs = 0.0, rhs = 0.0;

    std::string describe() const {
        std::ostringstream os;
        switch (kind) {
            case ViolationKind::nonzero_diagonal:
                os << "dist(" << i << "," << i << ") = " << lhs << " != 0"; break;
            case ViolationKind::asymmetry:
                os << "dist(" << i << "," << j << ") = " << lhs
                   << " != " << rhs << " = dist(" << j << "," << i << ")"; break;
            case ViolationKind::negative_entry:
                os << "dist(" << i << "," << j << ") = " << lhs << " < 0"; break;
            case ViolationKind::zero_off_diagonal:
                os << "dist(" << i << "," << j << ") = " << lhs << " not positive"; break;
            case ViolationKind::triangle:
                os << "dist(" << i << "," << k << ") = " << lhs << " > "
                   << rhs << " = dist(" << i << "," << j << ") + dist(" << j << "," << k << ")";
                break;
        }
        return os.str();
    }
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;

    bool ok() const { return violations.empty(); }

    std::string summary() const {
        if (ok()) return "valid";
        std::ostringstream os;
        os << violations.size() << " violation(s):";
        for (const auto& v : violations) os << "\n  " << v.describe();
        return os.str();
    }
};

/// Finite metric space over points {0, ..., n-1} with a real-valued
/// symmetric distance table.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;

    explicit FiniteMetricSpace(int n_points) : n_(n_points), d_(std::size_t(n_points) * n_points, 0.0) {
        if (n_points <= 0) throw structural_error("metric space needs at least one point");
    }

    /// Builds from a full square table. Structural checks only; axiom
    /// violations are left for validate().
    static FiniteMetricSpace from_table(const std::vector<std::vector<double>>& table) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw structural_error("empty distance table");
        FiniteMetricSpace m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n)
                throw structural_error("distance table is not square at row " + std::to_string(i));
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(table[i][j]))
                    throw structural_error("non-finite distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                m.d_[std::size_t(i) * n + j] = table[i][j];
            }
        }
        return m;
    }

    int n_points() const { return n_; }

    double dist(int i, int j) const { return d_[std::size_t(i) * n_ + j]; }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double v) {
        d_[std::size_t(i) * n_ + j] = v;
        d_[std::size_t(j) * n_ + i] = v;
    }

    bool operator==(const FiniteMetricSpace& o) const { return n_ == o.n_ && d_ == o.d_; }

private:
    int n_ = 0;
    std::vector<double> d_;
};

/// Exact metric whose entries are integer multiples of 2^(-scale_exp).
class DyadicMetric {
public:
    DyadicMetric() = default;

    DyadicMetric(int n_points, int scale_exp)
        : n_(n_points), scale_(scale_exp), num_(std::size_t(n_points) * n_points, 0) {
        if (n_points <= 0) throw structural_error("metric space needs at least one point");
        if (scale_exp < 0 || scale_exp > DyadicValue::kMaxExp)
            throw structural_error("dyadic scale exponent out of range");
    }

    int n_points() const { return n_; }
    int scale_exp() const { return scale_; }

    DyadicValue dist(int i, int j) const {
        return DyadicValue(num_[std::size_t(i) * n_ + j], scale_);
    }

    std::int64_t scaled(int i, int j) const { return num_[std::size_t(i) * n_ + j]; }

    void set(int i, int j, const DyadicValue& v) {
        std::int64_t s = v.scaled_numerator(scale_);
        num_[std::size_t(i) * n_ + j] = s;
        num_[std::size_t(j) * n_ + i] = s;
    }

    void set_scaled(int i, int j, std::int64_t s) {
        num_[std::size_t(i) * n_ + j] = s;
        num_[std::size_t(j) * n_ + i] = s;
    }

    /// Divides out the largest power of 2 common to every entry, so that two
    /// tables representing the same metric compare bit-identical.
    void canonicalize() {
        while (scale_ > 0) {
            bool all_even = true;
            for (auto v : num_)
                if (v & 1) { all_even = false; break; }
            if (!all_even) break;
            for (auto& v : num_) v >>= 1;
            --scale_;
        }
    }

    bool operator==(const DyadicMetric& o) const {
        return n_ == o.n_ && scale_ == o.scale_ && num_ == o.num_;
    }

private:
    int n_ = 0;
    int scale_ = 0;
    std::vector<std::int64_t> num_;
};

/// Checks the metric axioms with an absolute-or-relative slack of tol.
/// Every violation is reported with its witnessing pair or triple.
inline ValidationReport validate_metric(const FiniteMetricSpace& m, double tol = kDefaultMetricTol) {
    ValidationReport r;
    const int n = m.n_points();
    auto slack = [&](double a, double b) { return tol * std::max({1.0, std::fabs(a), std::fabs(b)}); };
    for (int i = 0; i < n; ++i) {
        if (std::fabs(m.dist(i, i)) > tol)
            r.violations.push_back({ViolationKind::nonzero_diagonal, i, i, -1, m.dist(i, i), 0.0});
        for (int j = i + 1; j < n; ++j) {
            double dij = m.dist(i, j), dji = m.dist(j, i);
            if (std::fabs(dij - dji) > slack(dij, dji))
                r.violations.push_back({ViolationKind::asymmetry, i, j, -1, dij, dji});
            if (dij < 0)
                r.violations.push_back({ViolationKind::negative_entry, i, j, -1, dij, 0.0});
            else if (dij <= tol)
                r.violations.push_back({ViolationKind::zero_off_diagonal, i, j, -1, dij, 0.0});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double lhs = m.dist(i, k), rhs = m.dist(i, j) + m.dist(j, k);
                if (lhs > rhs + slack(lhs, rhs))
                    r.violations.push_back({ViolationKind::triangle, i, j, k, lhs, rhs});
            }
        }
    return r;
}

/// Exact validation, zero tolerance. Constructed metrics must pass this.
inline ValidationReport validate_metric(const DyadicMetric& m) {
    ValidationReport r;
    const int n = m.n_points();
    for (int i = 0; i < n; ++i) {
        if (m.scaled(i, i) != 0)
            r.violations.push_back({ViolationKind::nonzero_diagonal, i, i, -1, m.dist(i, i).to_double(), 0.0});
        for (int j = i + 1; j < n; ++j) {
            if (m.scaled(i, j) != m.scaled(j, i))
                r.violations.push_back({ViolationKind::asymmetry, i, j, -1,
                                        m.dist(i, j).to_double(), m.dist(j, i).to_double()});
            if (m.scaled(i, j) <= 0)
                r.violations.push_back({ViolationKind::zero_off_diagonal, i, j, -1, m.dist(i, j).to_double(), 0.0});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (m.scaled(i, k) > m.scaled(i, j) + m.scaled(j, k))
                    r.violations.push_back({ViolationKind::triangle, i, j, k,
                                            m.dist(i, k).to_double(),
                                            (m.dist(i, j) + m.dist(j, k)).to_double()});
            }
        }
    return r;
}

/// Caps every distance at 1. A valid metric stays valid; entries already
/// below the cap are untouched.
inline FiniteMetricSpace truncate_to_unit(const FiniteMetricSpace& m) {
    FiniteMetricSpace r(m.n_points());
    for (int i = 0; i < m.n_points(); ++i)
        for (int j = i + 1; j < m.n_points(); ++j)
            r.set(i, j, std::min(m.dist(i, j), 1.0));
    return r;
}

/// Euclidean metric on a list of pairwise-distinct coordinate vectors.
inline FiniteMetricSpace euclidean_from_points(const std::vector<std::vector<double>>& coords) {
    const int n = static_cast<int>(coords.size());
    if (n == 0) throw structural_error("no points");
    const std::size_t dim = coords[0].size();
    for (const auto& c : coords)
        if (c.size() != dim) throw structural_error("inconsistent coordinate dimensions");
    FiniteMetricSpace m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                double t = coords[i][k] - coords[j][k];
                s += t * t;
            }
            double d = std::sqrt(s);
            if (d == 0.0)
                throw structural_error("duplicate points at indices " + std::to_string(i) +
                                       " and " + std::to_string(j));
            m.set(i, j, d);
        }
    return m;
}

/// Smallest distance between distinct points. Requires >= 2 points.
template <class Metric>
auto min_positive_distance(const Metric& m) {
    if (m.n_points() < 2) throw std::invalid_argument("min_positive_distance needs >= 2 points");
    auto best = m.dist(0, 1);
    for (int i = 0; i < m.n_points(); ++i)
        for (int j = i + 1; j < m.n_points(); ++j)
            if (m.dist(i, j) < best) best = m.dist(i, j);
    return best;
}

}  // namespace parmetric

#endif
