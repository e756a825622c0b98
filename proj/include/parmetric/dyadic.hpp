#ifndef PARMETRIC_DYADIC_HPP
#define PARMETRIC_DYADIC_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parmetric {

/// Non-negative dyadic rational num / 2^exp, with exact add / compare / min.
/// exp is capped so that every sum arising from chain costs fits in 64 bits.
class DyadicValue {
public:
    static constexpr int kMaxExp = 60;

    DyadicValue() : num_(0), exp_(0) {}

    DyadicValue(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
        if (numerator < 0) throw std::invalid_argument("negative dyadic numerator");
        if (exponent < 0 || exponent > kMaxExp) throw std::invalid_argument("dyadic exponent out of range");
        normalize();
    }

    static DyadicValue zero() { return DyadicValue(); }
    static DyadicValue one() { return DyadicValue(1, 0); }

    /// 1 / 2^n.
    static DyadicValue pow2(int n) { return DyadicValue(1, n); }

    std::int64_t numerator() const { return num_; }
    int exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }

    /// Numerator after rescaling to denominator 2^exp. Exact or throws.
    std::int64_t scaled_numerator(int exp) const {
        if (exp < exp_) {
            int down = exp_ - exp;
            if (num_ & ((std::int64_t{1} << down) - 1))
                throw std::invalid_argument("dyadic value not representable at coarser scale");
            return num_ >> down;
        }
        int up = exp - exp_;
        if (up > 62 || (num_ != 0 && num_ > (INT64_MAX >> up)))
            throw std::overflow_error("dyadic rescale overflow");
        return num_ << up;
    }

    DyadicValue operator+(const DyadicValue& o) const {
        int e = std::max(exp_, o.exp_);
        std::int64_t a = scaled_numerator(e);
        std::int64_t b = o.scaled_numerator(e);
        if (a > INT64_MAX - b) throw std::overflow_error("dyadic add overflow");
        return DyadicValue(a + b, e);
    }

    bool operator==(const DyadicValue& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const DyadicValue& o) const { return !(*this == o); }

    bool operator<(const DyadicValue& o) const {
        int e = std::max(exp_, o.exp_);
        return scaled_numerator(e) < o.scaled_numerator(e);
    }
    bool operator<=(const DyadicValue& o) const { return *this < o || *this == o; }
    bool operator>(const DyadicValue& o) const { return o < *this; }
    bool operator>=(const DyadicValue& o) const { return o <= *this; }

    double to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

    std::string to_string() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/2^" + std::to_string(exp_);
    }

private:
    // Canonical form: numerator odd or zero.
    void normalize() {
        if (num_ == 0) { exp_ = 0; return; }
        while ((num_ & 1) == 0 && exp_ > 0) { num_ >>= 1; --exp_; }
    }

    std::int64_t num_;
    int exp_;
};

inline DyadicValue min(const DyadicValue& a, const DyadicValue& b) { return a < b ? a : b; }

}  // namespace parmetric

#endif
