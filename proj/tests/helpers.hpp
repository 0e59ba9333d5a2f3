#pragma once

#include <cmath>
#include <vector>

#include "gqd/state_core.hpp"

namespace gqd::test {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline std::vector<cplx> bell_vector() { return {kInvSqrt2, 0.0, 0.0, kInvSqrt2}; }

inline DensityMatrix bell_state() { return DensityMatrix{outer(bell_vector())}; }

inline DensityMatrix maximally_mixed() {
    Mat m = Mat::identity(4);
    m *= 0.25;
    return DensityMatrix{m};
}

inline DensityMatrix diag4(double a, double b, double c, double d) {
    Mat m(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return DensityMatrix{m};
}

inline double max_entry_diff(const Mat& a, const Mat& b) {
    return (a - b).max_abs();
}

}  // namespace gqd::test
