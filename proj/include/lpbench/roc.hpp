#pragma once

#include <span>

namespace lpbench {

/// One point of an ROC curve.
struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;

    friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Trapezoidal area under a piecewise-linear curve given by points with
/// non-decreasing fpr. The curve is integrated from the first point's fpr.
inline double trapezoid_area(std::span<const RocPoint> points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) / 2.0;
    return area;
}

} // namespace lpbench
