#ifndef QDEFORM_TEST_HELPERS_HPP
#define QDEFORM_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>

#include "qdeform/fockspace.hpp"

namespace qdeform_test {

inline double max_abs_diff(const qdeform::Matrix& a, const qdeform::Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs(const qdeform::Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// |a - b| with the same mixed absolute/relative floor the library reports.
inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace qdeform_test

#endif
