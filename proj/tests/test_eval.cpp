#include "lpbench/eval.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpbench/rng.hpp"
#include "test_support.hpp"

using namespace lpbench;
using lpbench::testing::brute_force_auc;

namespace {

// Random score lists with deliberate ties: values snap to a small grid.
struct TieCorpus {
    std::vector<double> positives;
    std::vector<double> negatives;
};

TieCorpus random_tie_lists(Rng& rng) {
    TieCorpus corpus;
    const std::size_t n_pos = 1 + rng.below(60);
    const std::size_t n_neg = 1 + rng.below(60);
    const std::uint64_t grid = 1 + rng.below(8); // coarse grid forces ties
    for (std::size_t i = 0; i < n_pos; ++i)
        corpus.positives.push_back(static_cast<double>(rng.below(grid)) / static_cast<double>(grid));
    for (std::size_t i = 0; i < n_neg; ++i)
        corpus.negatives.push_back(static_cast<double>(rng.below(grid)) / static_cast<double>(grid));
    return corpus;
}

} // namespace

TEST(Auc, PerfectSeparation) {
    EXPECT_DOUBLE_EQ(auc(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0}), 1.0);
}

TEST(Auc, AllTies) {
    EXPECT_DOUBLE_EQ(auc(std::vector<double>{0.3, 0.3, 0.3}, std::vector<double>{0.3, 0.3}), 0.5);
}

TEST(Auc, HandArithmetic) {
    // 3 wins, 1 loss, 0 ties over 4 comparisons.
    EXPECT_DOUBLE_EQ(auc(std::vector<double>{0.9, 0.4}, std::vector<double>{0.6, 0.1}), 0.75);
}

TEST(Auc, RejectsBadInput) {
    EXPECT_THROW(auc({}, std::vector<double>{0.1}), ConfigError);
    EXPECT_THROW(auc(std::vector<double>{0.1}, {}), ConfigError);
    EXPECT_THROW(auc(std::vector<double>{std::nan("")}, std::vector<double>{0.1}), ConfigError);
}

TEST(Auc, MatchesBruteForceOnTieCorpus) {
    Rng rng(2024);
    for (int round = 0; round < 300; ++round) {
        const auto corpus = random_tie_lists(rng);
        EXPECT_NEAR(auc(corpus.positives, corpus.negatives),
                    brute_force_auc(corpus.positives, corpus.negatives), 1e-12);
    }
}

TEST(Auc, MonotoneInvariance) {
    Rng rng(77);
    for (int round = 0; round < 50; ++round) {
        const auto corpus = random_tie_lists(rng);
        auto mapped = corpus;
        const auto monotone = [](double s) { return std::exp(3.0 * s) - 1.0; };
        std::transform(mapped.positives.begin(), mapped.positives.end(), mapped.positives.begin(),
                       monotone);
        std::transform(mapped.negatives.begin(), mapped.negatives.end(), mapped.negatives.begin(),
                       monotone);
        EXPECT_NEAR(auc(corpus.positives, corpus.negatives),
                    auc(mapped.positives, mapped.negatives), 1e-12);
    }
}

TEST(Auc, Symmetry) {
    Rng rng(99);
    for (int round = 0; round < 50; ++round) {
        const auto corpus = random_tie_lists(rng);
        EXPECT_NEAR(auc(corpus.positives, corpus.negatives) +
                        auc(corpus.negatives, corpus.positives),
                    1.0, 1e-12);
    }
}

TEST(RocCurve, PerfectSeparationPassesThroughTopLeft) {
    const auto curve = roc_curve(std::vector<double>{0.9, 0.8}, std::vector<double>{0.2, 0.1});
    ASSERT_GE(curve.points.size(), 3u);
    bool hits_top_left = false;
    for (const auto& point : curve.points)
        if (point.fpr == 0.0 && point.tpr == 1.0) hits_top_left = true;
    EXPECT_TRUE(hits_top_left);
}

TEST(RocCurve, AllTiesIsDiagonal) {
    const auto curve = roc_curve(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5});
    ASSERT_EQ(curve.points.size(), 2u);
    EXPECT_EQ(curve.points.front(), (RocPoint{0.0, 0.0}));
    EXPECT_EQ(curve.points.back(), (RocPoint{1.0, 1.0}));
}

TEST(RocCurve, EndpointsAndMonotonicity) {
    Rng rng(31);
    for (int round = 0; round < 100; ++round) {
        const auto corpus = random_tie_lists(rng);
        const auto curve = roc_curve(corpus.positives, corpus.negatives);
        ASSERT_EQ(curve.points.size(), curve.thresholds.size());
        EXPECT_EQ(curve.points.front(), (RocPoint{0.0, 0.0}));
        EXPECT_EQ(curve.points.back(), (RocPoint{1.0, 1.0}));
        EXPECT_TRUE(std::isinf(curve.thresholds.front()));
        for (std::size_t i = 1; i < curve.points.size(); ++i) {
            EXPECT_GE(curve.points[i].fpr, curve.points[i - 1].fpr);
            EXPECT_GE(curve.points[i].tpr, curve.points[i - 1].tpr);
            EXPECT_LT(curve.thresholds[i], curve.thresholds[i - 1]);
        }
    }
}

TEST(RocCurve, TrapezoidEqualsRankAuc) {
    Rng rng(123);
    for (int round = 0; round < 300; ++round) {
        const auto corpus = random_tie_lists(rng);
        const auto curve = roc_curve(corpus.positives, corpus.negatives);
        EXPECT_NEAR(trapezoid_area(curve.points), auc(corpus.positives, corpus.negatives), 1e-12);
    }
}

TEST(Aggregate, SingleReplicate) {
    const auto summary = aggregate(std::vector<double>{0.8});
    EXPECT_DOUBLE_EQ(summary.mean, 0.8);
    EXPECT_DOUBLE_EQ(summary.variance, 0.0);
    EXPECT_EQ(summary.n_replicates, 1u);
}

TEST(Aggregate, HandArithmetic) {
    const auto summary = aggregate(std::vector<double>{0.7, 0.9});
    EXPECT_DOUBLE_EQ(summary.mean, 0.8);
    EXPECT_NEAR(summary.variance, 0.02, 1e-15);
    EXPECT_EQ(summary.per_replicate, (std::vector<double>{0.7, 0.9}));
}

TEST(Aggregate, RejectsEmpty) { EXPECT_THROW(aggregate({}), ConfigError); }
