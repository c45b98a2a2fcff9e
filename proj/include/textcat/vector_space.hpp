#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

// Bag-of-words vocabulary over the training split. Terms are sorted
// lexicographically so feature indices are reproducible; df[t] is the number
// of training documents containing terms[t] at least once.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::uint32_t> df;
    std::size_t train_docs = 0;

    std::size_t size() const { return terms.size(); }
};

// Throws "empty vocabulary" when no training document yields a token.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& train_tokens);

// ln(N/df). Requires 1 <= df <= n_docs; a term unseen in training (df = 0)
// must never be weighted.
double idf(std::size_t n_docs, std::size_t df);

// Per-term idf, parallel to Vocabulary::terms, training split only.
struct IdfTable {
    std::vector<double> values;
};

IdfTable build_idf(const Vocabulary& vocab);

// Raw in-document term counts over the vocabulary. Out-of-vocabulary tokens
// are dropped.
SparseVector count_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab);

// weight(t) = tf(t) * idf(t). Entries whose idf is 0 (df = N) are not stored.
SparseVector tfidf_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                          const IdfTable& idf_table);

// Reweights a count vector in place of recomputing from tokens.
SparseVector tfidf_from_counts(const SparseVector& counts, const IdfTable& idf_table);

// Debug dump: `term<TAB>df<TAB>idf` per line.
void dump_vocabulary(const Vocabulary& vocab, const IdfTable& idf_table, std::ostream& out);

}  // namespace textcat
