#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

struct TrainingSet;
class Rng;

// Binary gain-ratio tree over (feature, threshold) splits. Nodes are stored
// flat; children of a split node go left when value <= threshold.
struct TreeNode {
    bool is_leaf = true;
    int label = -1;               // leaf payload
    std::uint32_t feature = 0;    // split payload
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::uint32_t dim = 0;
    int min_leaf = 1;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t depth() const;

    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

// Entropy of a two-class node in bits.
double binary_entropy(std::size_t pos, std::size_t neg);

struct SplitScore {
    double info_gain = 0.0;
    double split_info = 0.0;
    double gain_ratio = 0.0;
};

// Scores a left/right partition of a node holding (pos, neg) examples.
SplitScore score_split(std::size_t left_pos, std::size_t left_neg, std::size_t right_pos,
                       std::size_t right_neg);

// Grows the tree until nodes are pure, smaller than 2*min_leaf, or no
// admissible split has positive information gain. Candidate thresholds are
// midpoints between consecutive distinct observed values (absent sparse
// entries count as zeros, so zero-vs-nonzero is always represented).
// Single-class input yields a single leaf. Ties on gain ratio break toward
// the lower feature index, then the lower threshold.
DecisionTree tree_fit(const TrainingSet& train, int min_leaf);

int tree_predict(const DecisionTree& tree, const SparseVector& v);

namespace detail {

// Reusable tree builder: densifies the training matrix once so a forest can
// grow many trees over the same data. When rng is non-null each split draws
// a fresh subset of m_try features; indices selects the (bootstrap) rows.
class TreeBuilder {
public:
    TreeBuilder(const TrainingSet& train, int min_leaf);
    ~TreeBuilder();
    TreeBuilder(const TreeBuilder&) = delete;
    TreeBuilder& operator=(const TreeBuilder&) = delete;

    DecisionTree grow(const std::vector<std::size_t>& indices, Rng* rng,
                      std::uint32_t m_try) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace detail

}  // namespace textcat
