#pragma once

#include <cstdint>
#include <vector>

#include "textcat/decision_tree.hpp"
#include "textcat/sparse_vector.hpp"

namespace textcat {

struct TrainingSet;

// Bagged gain-ratio trees with per-split feature subsampling. Prediction is
// a majority vote over trees; vote ties go to -1.
struct RandomForestModel {
    std::vector<DecisionTree> trees;
    std::vector<std::uint64_t> tree_seeds;
    std::uint64_t seed = 0;
    std::uint32_t m_try = 0;
    bool bootstrap = true;
};

// m_try = 0 picks the default floor(log2(dimension)) + 1. Setting
// bootstrap = false (debug) grows every tree on the full training set, so a
// single tree with m_try = dimension reproduces tree_fit exactly.
RandomForestModel forest_fit(const TrainingSet& train, int n_trees, std::uint32_t m_try,
                             std::uint64_t seed, bool bootstrap = true, int min_leaf = 1);

int forest_predict(const RandomForestModel& model, const SparseVector& v);

}  // namespace textcat
