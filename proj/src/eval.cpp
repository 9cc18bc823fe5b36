#include "booksuit/eval.hpp"

#include <algorithm>
#include <cmath>

#include "booksuit/errors.hpp"
#include "booksuit/rng.hpp"

namespace booksuit {

ConfusionMatrix confusion(std::span<const double> predicted_probs, std::span<const int> labels,
                          double threshold) {
    if (predicted_probs.size() != labels.size() || predicted_probs.empty())
        throw ContractError("confusion requires equal-length nonempty lists");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted_probs.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1)
            throw ContractError("labels must be 0 or 1");
        const int predicted = predicted_probs[i] >= threshold ? 1 : 0;
        if (predicted == 1)
            (labels[i] == 1 ? cm.tp : cm.fp) += 1;
        else
            (labels[i] == 1 ? cm.fn : cm.tn) += 1;
    }
    return cm;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
    if (cm.total() <= 0)
        throw ContractError("metrics requires a nonempty confusion matrix");
    MetricsReport report;
    report.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    if (cm.tp + cm.fp > 0)
        report.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    if (cm.tp + cm.fn > 0) {
        report.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
        report.suitable_accuracy = report.recall;
    }
    if (cm.tn + cm.fp > 0)
        report.unsuitable_accuracy =
            static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp);
    if (report.precision && report.recall && *report.precision + *report.recall > 0.0)
        report.f_measure =
            2.0 * *report.precision * *report.recall / (*report.precision + *report.recall);
    return report;
}

int cop_baseline_classify(double cop_percent, double threshold) {
    return cop_percent >= threshold ? 1 : 0;
}

std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>>
stratified_split(const std::vector<DatasetRecord>& records, double test_fraction,
                 std::uint64_t seed) {
    if (test_fraction < 0.0 || test_fraction > 1.0)
        throw ContractError("test_fraction must lie in [0, 1]");

    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].suitability)
            throw ContractError("record '" + records[i].book_name + "' has no label");
        by_class[*records[i].suitability].push_back(i);
    }
    for (const auto& members : by_class)
        if (members.size() < 2)
            throw ContractError("stratified_split needs at least 2 records per class");

    const auto total_test = static_cast<long>(
        std::llround(static_cast<double>(records.size()) * test_fraction));

    // largest-remainder apportionment across the two classes
    long quota[2];
    double remainder[2];
    long assigned = 0;
    for (int c = 0; c < 2; ++c) {
        const double exact = static_cast<double>(by_class[c].size()) * test_fraction;
        quota[c] = static_cast<long>(std::floor(exact));
        remainder[c] = exact - std::floor(exact);
        assigned += quota[c];
    }
    while (assigned < total_test) {
        const int pick = remainder[0] >= remainder[1] ? 0 : 1;
        ++quota[pick];
        remainder[pick] = -1.0;
        ++assigned;
    }
    while (assigned > total_test) {
        const int pick = quota[0] >= quota[1] ? 0 : 1;
        --quota[pick];
        --assigned;
    }

    Rng rng(seed);
    std::vector<bool> in_test(records.size(), false);
    for (int c = 0; c < 2; ++c) {
        auto members = by_class[c];
        rng.shuffle(members);
        for (long k = 0; k < quota[c] && k < static_cast<long>(members.size()); ++k)
            in_test[members[static_cast<std::size_t>(k)]] = true;
    }

    std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>> halves;
    for (std::size_t i = 0; i < records.size(); ++i)
        (in_test[i] ? halves.second : halves.first).push_back(records[i]);
    return halves;
}

} // namespace booksuit
