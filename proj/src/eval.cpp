#include "lpbench/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpbench/errors.hpp"

namespace lpbench {

namespace {

void check_scores(std::span<const double> positives, std::span<const double> negatives) {
    if (positives.empty() || negatives.empty())
        throw ConfigError("AUC needs at least one positive and one negative score");
    const auto finite = [](double s) { return std::isfinite(s); };
    if (!std::all_of(positives.begin(), positives.end(), finite) ||
        !std::all_of(negatives.begin(), negatives.end(), finite))
        throw ConfigError("scores must be finite");
}

} // namespace

double auc(std::span<const double> positive_scores, std::span<const double> negative_scores) {
    check_scores(positive_scores, negative_scores);

    // Mann-Whitney rank sum with average ranks over tie groups.
    std::vector<std::pair<double, bool>> scored;
    scored.reserve(positive_scores.size() + negative_scores.size());
    for (const double s : positive_scores) scored.emplace_back(s, true);
    for (const double s : negative_scores) scored.emplace_back(s, false);
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < scored.size()) {
        std::size_t j = i;
        std::size_t positives_in_group = 0;
        while (j < scored.size() && scored[j].first == scored[i].first) {
            positives_in_group += scored[j].second ? 1 : 0;
            ++j;
        }
        const double average_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        positive_rank_sum += average_rank * static_cast<double>(positives_in_group);
        i = j;
    }

    const double n_pos = static_cast<double>(positive_scores.size());
    const double n_neg = static_cast<double>(negative_scores.size());
    const double wins_plus_half_ties = positive_rank_sum - n_pos * (n_pos + 1.0) / 2.0;
    return wins_plus_half_ties / (n_pos * n_neg);
}

RocCurve roc_curve(std::span<const double> positive_scores,
                   std::span<const double> negative_scores) {
    check_scores(positive_scores, negative_scores);

    std::vector<std::pair<double, bool>> scored;
    scored.reserve(positive_scores.size() + negative_scores.size());
    for (const double s : positive_scores) scored.emplace_back(s, true);
    for (const double s : negative_scores) scored.emplace_back(s, false);
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    RocCurve curve;
    curve.points.push_back({0.0, 0.0});
    curve.thresholds.push_back(std::numeric_limits<double>::infinity());

    const double n_pos = static_cast<double>(positive_scores.size());
    const double n_neg = static_cast<double>(negative_scores.size());
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < scored.size()) {
        const double threshold = scored[i].first;
        while (i < scored.size() && scored[i].first == threshold) {
            (scored[i].second ? tp : fp) += 1;
            ++i;
        }
        curve.points.push_back(
            {static_cast<double>(fp) / n_neg, static_cast<double>(tp) / n_pos});
        curve.thresholds.push_back(threshold);
    }
    return curve;
}

AucSummary aggregate(std::span<const double> aucs) {
    if (aucs.empty()) throw ConfigError("cannot aggregate an empty AUC list");
    AucSummary summary;
    summary.n_replicates = aucs.size();
    summary.per_replicate.assign(aucs.begin(), aucs.end());

    double sum = 0.0;
    for (const double a : aucs) sum += a;
    summary.mean = sum / static_cast<double>(aucs.size());

    if (aucs.size() > 1) {
        double squared = 0.0;
        for (const double a : aucs) squared += (a - summary.mean) * (a - summary.mean);
        summary.variance = squared / static_cast<double>(aucs.size() - 1);
    }
    return summary;
}

} // namespace lpbench
