#include "textcat/feature_selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace textcat {

ContingencyTable contingency(std::uint32_t term_index,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels) {
    if (train_counts.size() != binary_labels.size())
        throw std::invalid_argument("contingency: vectors and labels differ in length");

    std::uint64_t positives = 0, present_pos = 0, present_neg = 0;
    for (std::size_t i = 0; i < train_counts.size(); ++i) {
        bool positive = binary_labels[i] > 0;
        if (positive) ++positives;
        const auto& entries = train_counts[i].entries;
        auto pos = std::lower_bound(
            entries.begin(), entries.end(), term_index,
            [](const SparseEntry& e, std::uint32_t idx) { return e.index < idx; });
        if (pos != entries.end() && pos->index == term_index)
            (positive ? present_pos : present_neg)++;
    }

    ContingencyTable t;
    t.a = present_pos;
    t.b = positives - present_pos;
    t.c = present_neg;
    t.d = train_counts.size() - positives - present_neg;
    return t;
}

ContingencyTable contingency(const std::string& term, const Vocabulary& vocab,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels) {
    auto it = vocab.index.find(term);
    if (it == vocab.index.end())
        throw std::invalid_argument("contingency: unknown term '" + term + "'");
    return contingency(it->second, train_counts, binary_labels);
}

double chi_square(const ContingencyTable& t) {
    double a = static_cast<double>(t.a), b = static_cast<double>(t.b);
    double c = static_cast<double>(t.c), d = static_cast<double>(t.d);
    double denom = (a + c) * (b + d) * (a + b) * (c + d);
    if (denom == 0.0) return 0.0;
    double n = a + b + c + d;
    double cross = a * d - b * c;
    return n * cross * cross / denom;
}

FeatureRanking rank_features(const std::string& category, const Vocabulary& vocab,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels) {
    if (train_counts.size() != binary_labels.size())
        throw std::invalid_argument("rank_features: vectors and labels differ in length");

    // Presence counts in the positive class per term; c comes from df - a.
    std::vector<std::uint64_t> present_pos(vocab.size(), 0);
    std::uint64_t positives = 0;
    for (std::size_t i = 0; i < train_counts.size(); ++i) {
        if (binary_labels[i] <= 0) continue;
        ++positives;
        for (const auto& e : train_counts[i].entries) ++present_pos[e.index];
    }

    const std::uint64_t n = train_counts.size();
    FeatureRanking ranking;
    ranking.category = category;
    ranking.scored.reserve(vocab.size());
    for (std::uint32_t t = 0; t < vocab.size(); ++t) {
        ContingencyTable table;
        table.a = present_pos[t];
        table.b = positives - table.a;
        table.c = vocab.df[t] - table.a;
        table.d = n - positives - table.c;
        ranking.scored.push_back({t, vocab.terms[t], chi_square(table)});
    }

    std::sort(ranking.scored.begin(), ranking.scored.end(),
              [](const ScoredTerm& x, const ScoredTerm& y) {
                  if (x.score != y.score) return x.score > y.score;
                  return x.term < y.term;
              });
    return ranking;
}

FeatureSet::FeatureSet(const FeatureRanking& ranking, std::size_t k) {
    std::size_t take = std::min(k, ranking.scored.size());
    selected_.assign(ranking.scored.begin(),
                     ranking.scored.begin() + static_cast<std::ptrdiff_t>(take));
    vocab_dim_ = static_cast<std::uint32_t>(ranking.scored.size());
    compact_.assign(vocab_dim_, -1);
    for (std::size_t j = 0; j < selected_.size(); ++j)
        compact_[selected_[j].index] = static_cast<std::int32_t>(j);
}

std::int64_t FeatureSet::remap(std::uint32_t vocab_index) const {
    if (vocab_index >= compact_.size()) return -1;
    return compact_[vocab_index];
}

SparseVector FeatureSet::project(const SparseVector& full) const {
    if (full.dim != vocab_dim_)
        throw std::invalid_argument("FeatureSet::project: dimension mismatch");
    std::vector<SparseEntry> raw;
    for (const auto& e : full.entries) {
        std::int32_t j = compact_[e.index];
        if (j >= 0) raw.push_back({static_cast<std::uint32_t>(j), e.weight});
    }
    return make_sparse(static_cast<std::uint32_t>(selected_.size()), std::move(raw));
}

FeatureSet select_top_k(const FeatureRanking& ranking, std::size_t k) {
    if (k == 0) throw std::invalid_argument("select_top_k: k must be positive");
    return FeatureSet(ranking, k);
}

void dump_ranking(const FeatureRanking& ranking, std::ostream& out) {
    for (std::size_t i = 0; i < ranking.scored.size(); ++i)
        out << (i + 1) << '\t' << ranking.scored[i].term << '\t' << ranking.scored[i].score
            << '\n';
}

}  // namespace textcat
