#ifndef BOOKSUIT_EVAL_HPP
#define BOOKSUIT_EVAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "booksuit/dataset.hpp"

namespace booksuit {

/// Counts with "suitable" (label 1) as the positive class.
struct ConfusionMatrix {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    long tn = 0;

    long total() const { return tp + fp + fn + tn; }
};

/// Accuracy plus precision/recall/F-measure; the latter are absent (rather
/// than silently 0) when their denominators vanish. Per-class accuracies
/// are reported separately.
struct MetricsReport {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f_measure;
    std::optional<double> suitable_accuracy;
    std::optional<double> unsuitable_accuracy;
};

/// Tally predictions against labels; prob >= threshold predicts class 1.
ConfusionMatrix confusion(std::span<const double> predicted_probs, std::span<const int> labels,
                          double threshold = 0.5);

MetricsReport metrics(const ConfusionMatrix& cm);

/// The coefficient-of-positivity threshold rule: cop >= threshold -> 1.
int cop_baseline_classify(double cop_percent, double threshold = 30.0);

/// Per-class proportional split with a seeded shuffle; the test half gets
/// round(N * test_fraction) records, apportioned by largest remainder.
/// Refuses datasets with a class of fewer than 2 records.
std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>>
stratified_split(const std::vector<DatasetRecord>& records, double test_fraction,
                 std::uint64_t seed);

} // namespace booksuit

#endif
