#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "textcat/sparse_vector.hpp"
#include "textcat/vector_space.hpp"

namespace textcat {

// 2x2 term-presence vs class-membership counts for one binary task:
//   a: positive documents containing the term
//   b: positive documents not containing it
//   c: negative documents containing it
//   d: negative documents not containing it
struct ContingencyTable {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;

    std::uint64_t total() const { return a + b + c + d; }
};

// Presence is document-level (tf >= 1). binary_labels holds +1/-1 per
// training document, parallel to train_counts.
ContingencyTable contingency(std::uint32_t term_index,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels);

// Convenience overload resolving the term through the vocabulary; throws on
// unknown terms.
ContingencyTable contingency(const std::string& term, const Vocabulary& vocab,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels);

// N(ad-bc)^2 / ((a+c)(b+d)(a+b)(c+d)). Any zero denominator factor means the
// term or the task carries no signal, so the score is 0.
double chi_square(const ContingencyTable& t);

struct ScoredTerm {
    std::uint32_t index = 0;  // vocabulary index
    std::string term;
    double score = 0.0;
};

// All vocabulary terms scored against one category, sorted by descending
// score with lexicographic tie-breaking.
struct FeatureRanking {
    std::string category;
    std::vector<ScoredTerm> scored;
};

FeatureRanking rank_features(const std::string& category, const Vocabulary& vocab,
                             const std::vector<SparseVector>& train_counts,
                             const std::vector<int>& binary_labels);

// Top-k slice of a ranking plus the compact reindexing used to project
// full-vocabulary vectors onto the selected features. Selected feature j is
// the j-th best term; projected vectors have dimension size().
class FeatureSet {
public:
    FeatureSet() = default;
    FeatureSet(const FeatureRanking& ranking, std::size_t k);

    std::size_t size() const { return selected_.size(); }
    const std::vector<ScoredTerm>& selected() const { return selected_; }

    // Maps a full-vocabulary index to the compact index, or -1.
    std::int64_t remap(std::uint32_t vocab_index) const;

    SparseVector project(const SparseVector& full) const;

private:
    std::vector<ScoredTerm> selected_;
    std::vector<std::int32_t> compact_;  // vocab index -> compact index or -1
    std::uint32_t vocab_dim_ = 0;
};

FeatureSet select_top_k(const FeatureRanking& ranking, std::size_t k);

// Debug dump: `rank<TAB>term<TAB>chi_score` per line.
void dump_ranking(const FeatureRanking& ranking, std::ostream& out);

}  // namespace textcat
