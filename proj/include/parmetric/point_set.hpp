#ifndef PARMETRIC_POINT_SET_HPP
#define PARMETRIC_POINT_SET_HPP

#include <cstdint>
#include <vector>
#include <stdexcept>

namespace parmetric {

/// Subset of a fixed ground set {0, ..., n_points-1}, stored as a bitset.
/// All set algebra used by cover constructions goes through this type.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(int universe_size)
        : n_(universe_size), bits_((universe_size + 63) / 64, 0) {
        if (universe_size < 0) throw std::invalid_argument("negative universe size");
    }

    static PointSet full(int universe_size) {
        PointSet s(universe_size);
        for (int i = 0; i < universe_size; ++i) s.insert(i);
        return s;
    }

    static PointSet of(int universe_size, std::initializer_list<int> pts) {
        PointSet s(universe_size);
        for (int p : pts) s.insert(p);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int p) const {
        check(p);
        return (bits_[p >> 6] >> (p & 63)) & 1u;
    }

    void insert(int p) {
        check(p);
        bits_[p >> 6] |= std::uint64_t{1} << (p & 63);
    }

    void erase(int p) {
        check(p);
        bits_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_) if (w) return false;
        return true;
    }

    bool intersects(const PointSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool is_subset_of(const PointSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    PointSet operator&(const PointSet& o) const {
        check_same(o);
        PointSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
        return r;
    }

    PointSet operator|(const PointSet& o) const {
        check_same(o);
        PointSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
        return r;
    }

    /// Set difference: elements of *this not in o.
    PointSet operator-(const PointSet& o) const {
        check_same(o);
        PointSet r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
        return r;
    }

    PointSet complement() const {
        PointSet r(n_);
        for (int i = 0; i < n_; ++i)
            if (!contains(i)) r.insert(i);
        return r;
    }

    bool operator==(const PointSet& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    bool operator!=(const PointSet& o) const { return !(*this == o); }

    /// Smallest element, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(bits_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size());
        for (int i = 0; i < n_; ++i)
            if (contains(i)) v.push_back(i);
        return v;
    }

private:
    void check(int p) const {
        if (p < 0 || p >= n_) throw std::out_of_range("point id out of range");
    }
    void check_same(const PointSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("point sets over different universes");
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace parmetric

#endif
