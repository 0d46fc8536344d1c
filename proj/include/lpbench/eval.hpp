#pragma once

#include <span>
#include <vector>

#include "lpbench/roc.hpp"

namespace lpbench {

/// ROC curve swept over the distinct scores in descending order. points[i]
/// is the (FPR, TPR) reached once every score >= thresholds[i] is predicted;
/// thresholds[0] is +infinity for the (0, 0) start. Both rates are
/// non-decreasing and the curve ends at exactly (1, 1).
struct RocCurve {
    std::vector<RocPoint> points;
    std::vector<double> thresholds;
};

/// Tie-aware rank AUC: P(score+ > score-) + 1/2 P(score+ = score-),
/// computed by ranking in O((n+m) log(n+m)). Throws ConfigError on empty
/// inputs or non-finite scores.
double auc(std::span<const double> positive_scores, std::span<const double> negative_scores);

/// Threshold sweep; trapezoidal integration of the points equals auc().
RocCurve roc_curve(std::span<const double> positive_scores,
                   std::span<const double> negative_scores);

/// Replicate aggregation: sample mean and unbiased sample variance
/// (variance 0 for a single replicate).
struct AucSummary {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t n_replicates = 0;
    std::vector<double> per_replicate;
};

AucSummary aggregate(std::span<const double> aucs);

} // namespace lpbench
