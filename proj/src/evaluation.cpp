#include "textcat/evaluation.hpp"

#include <algorithm>
#include <stdexcept>

namespace textcat {

std::vector<int> binary_labels(const std::vector<Document>& documents,
                               const std::string& category) {
    std::vector<int> labels;
    labels.reserve(documents.size());
    for (const Document& doc : documents) {
        bool positive = std::binary_search(doc.labels.begin(), doc.labels.end(), category);
        labels.push_back(positive ? +1 : -1);
    }
    return labels;
}

std::vector<int> make_binary_task(const Corpus& corpus, const std::string& category) {
    if (!std::binary_search(corpus.categories.begin(), corpus.categories.end(), category))
        throw std::invalid_argument("make_binary_task: unknown category '" + category + "'");
    return binary_labels(corpus.documents, category);
}

ConfusionCounts confusion(const std::vector<int>& predicted, const std::vector<int>& gold) {
    if (predicted.size() != gold.size())
        throw std::invalid_argument("confusion: prediction/gold length mismatch");
    ConfusionCounts c;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] > 0)
            (gold[i] > 0 ? c.tp : c.fp)++;
        else
            (gold[i] > 0 ? c.fn : c.tn)++;
    }
    return c;
}

PrecisionRecallF precision_recall_f(const ConfusionCounts& counts) {
    PrecisionRecallF m;
    double tp = static_cast<double>(counts.tp);
    double pred_pos = static_cast<double>(counts.tp + counts.fp);
    double gold_pos = static_cast<double>(counts.tp + counts.fn);
    m.precision = pred_pos == 0.0 ? 0.0 : tp / pred_pos;
    m.recall = gold_pos == 0.0 ? 0.0 : tp / gold_pos;
    double denom = m.precision + m.recall;
    m.f1 = denom == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / denom;
    return m;
}

PrecisionRecallF micro_f(const std::vector<ConfusionCounts>& tasks) {
    if (tasks.empty()) throw std::invalid_argument("micro_f: no tasks");
    ConfusionCounts pooled;
    for (const auto& t : tasks) {
        pooled.tp += t.tp;
        pooled.fp += t.fp;
        pooled.fn += t.fn;
        pooled.tn += t.tn;
    }
    return precision_recall_f(pooled);
}

double macro_f(const std::vector<BinaryTaskResult>& tasks) {
    if (tasks.empty()) throw std::invalid_argument("macro_f: no tasks");
    double sum = 0.0;
    for (const auto& t : tasks) sum += t.metrics.f1;
    return sum / static_cast<double>(tasks.size());
}

void dump_confusion(const ConfusionCounts& counts, std::ostream& out) {
    out << "\tpred+\tpred-\n";
    out << "gold+\t" << counts.tp << '\t' << counts.fn << '\n';
    out << "gold-\t" << counts.fp << '\t' << counts.tn << '\n';
}

}  // namespace textcat
