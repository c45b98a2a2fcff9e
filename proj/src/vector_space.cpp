#include "textcat/vector_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace textcat {

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& train_tokens) {
    if (train_tokens.empty())
        throw std::invalid_argument("build_vocabulary: empty training list");

    std::map<std::string, std::uint32_t> df;  // ordered -> lexicographic terms
    std::vector<std::string> doc_distinct;
    for (const auto& tokens : train_tokens) {
        doc_distinct.assign(tokens.begin(), tokens.end());
        std::sort(doc_distinct.begin(), doc_distinct.end());
        doc_distinct.erase(std::unique(doc_distinct.begin(), doc_distinct.end()),
                           doc_distinct.end());
        for (auto& t : doc_distinct) ++df[t];
    }
    if (df.empty()) throw std::runtime_error("empty vocabulary");

    Vocabulary vocab;
    vocab.train_docs = train_tokens.size();
    vocab.terms.reserve(df.size());
    vocab.df.reserve(df.size());
    for (auto& [term, count] : df) {
        vocab.index.emplace(term, static_cast<std::uint32_t>(vocab.terms.size()));
        vocab.terms.push_back(term);
        vocab.df.push_back(count);
    }
    return vocab;
}

double idf(std::size_t n_docs, std::size_t df) {
    if (df == 0) throw std::invalid_argument("idf: df is zero (term unseen in training)");
    if (df > n_docs) throw std::invalid_argument("idf: df exceeds document count");
    return std::log(static_cast<double>(n_docs) / static_cast<double>(df));
}

IdfTable build_idf(const Vocabulary& vocab) {
    IdfTable table;
    table.values.reserve(vocab.size());
    for (std::uint32_t d : vocab.df) table.values.push_back(idf(vocab.train_docs, d));
    return table;
}

SparseVector count_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
    std::vector<SparseEntry> raw;
    raw.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto it = vocab.index.find(t);
        if (it != vocab.index.end()) raw.push_back({it->second, 1.0});
    }
    return make_sparse(static_cast<std::uint32_t>(vocab.size()), std::move(raw));
}

SparseVector tfidf_vector(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                          const IdfTable& idf_table) {
    return tfidf_from_counts(count_vector(tokens, vocab), idf_table);
}

SparseVector tfidf_from_counts(const SparseVector& counts, const IdfTable& idf_table) {
    SparseVector v;
    v.dim = counts.dim;
    v.entries.reserve(counts.entries.size());
    for (const auto& e : counts.entries) {
        double w = e.weight * idf_table.values[e.index];
        if (w != 0.0) v.entries.push_back({e.index, w});
    }
    return v;
}

void dump_vocabulary(const Vocabulary& vocab, const IdfTable& idf_table, std::ostream& out) {
    for (std::size_t i = 0; i < vocab.size(); ++i)
        out << vocab.terms[i] << '\t' << vocab.df[i] << '\t' << idf_table.values[i] << '\n';
}

}  // namespace textcat
