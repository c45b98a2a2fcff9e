#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "textcat/corpus.hpp"

namespace textcat {

struct ConfusionCounts {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }

    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct PrecisionRecallF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// One-vs-rest task labels: +1 iff the document carries the category.
// Throws on a category absent from corpus.categories.
std::vector<int> make_binary_task(const Corpus& corpus, const std::string& category);

// Same labeling without the membership check; used for test splits that may
// lack some training category entirely.
std::vector<int> binary_labels(const std::vector<Document>& documents,
                               const std::string& category);

// Throws on length mismatch.
ConfusionCounts confusion(const std::vector<int>& predicted, const std::vector<int>& gold);

// precision = TP/(TP+FP), recall = TP/(TP+FN), F = 2pr/(p+r);
// every ratio with a zero denominator is 0.
PrecisionRecallF precision_recall_f(const ConfusionCounts& counts);

struct BinaryTaskResult {
    std::string category;
    ConfusionCounts counts;
    PrecisionRecallF metrics;
    bool degenerate = false;  // task had no training positives (or negatives)
};

// Pools TP/FP/FN across tasks, then applies the ratios to the pooled counts.
PrecisionRecallF micro_f(const std::vector<ConfusionCounts>& tasks);

// Unweighted mean of per-task F.
double macro_f(const std::vector<BinaryTaskResult>& tasks);

// 2x2 confusion grid, TSV.
void dump_confusion(const ConfusionCounts& counts, std::ostream& out);

}  // namespace textcat
