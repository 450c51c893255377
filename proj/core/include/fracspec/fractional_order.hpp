#pragma once

#include <cmath>

#include "fracspec/errors.hpp"

namespace fracspec {

/// Which one-sided operator: left integrates the past (-inf, x], right the
/// future [x, inf).
enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Order s >= 0 together with its derived integer part n (the smallest
/// integer strictly greater than s, so n-1 <= s < n) and the complementary
/// integral order sigma = n - s in (0, 1]. Integer s >= 1 gets n = s + 1 and
/// sigma = 1.
class FractionalOrder {
public:
    explicit FractionalOrder(double s) : s_(s) {
        if (!(s >= 0.0) || !std::isfinite(s))
            throw InvalidOrderError("fractional order must be finite and nonnegative");
        n_ = static_cast<int>(std::floor(s)) + 1;
        sigma_ = n_ - s_;
    }

    double s() const { return s_; }
    int n() const { return n_; }
    double sigma() const { return sigma_; }
    bool is_integer() const { return sigma_ == 1.0; }

private:
    double s_;
    int n_;
    double sigma_;
};

}  // namespace fracspec
