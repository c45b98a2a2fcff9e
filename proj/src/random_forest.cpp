#include "textcat/random_forest.hpp"

#include <cmath>
#include <stdexcept>

#include "textcat/classifier.hpp"
#include "textcat/rng.hpp"

namespace textcat {

RandomForestModel forest_fit(const TrainingSet& train, int n_trees, std::uint32_t m_try,
                             std::uint64_t seed, bool bootstrap, int min_leaf) {
    if (train.size() == 0) throw std::invalid_argument("forest_fit: empty training set");
    if (n_trees < 1) throw std::invalid_argument("forest_fit: need at least one tree");
    if (m_try == 0)
        m_try = static_cast<std::uint32_t>(
                    train.dimension > 0 ? std::floor(std::log2(train.dimension)) : 0) + 1;
    if (m_try > train.dimension) m_try = train.dimension;

    RandomForestModel model;
    model.seed = seed;
    model.m_try = m_try;
    model.bootstrap = bootstrap;
    model.trees.reserve(static_cast<std::size_t>(n_trees));
    model.tree_seeds.reserve(static_cast<std::size_t>(n_trees));

    detail::TreeBuilder builder(train, min_leaf);
    std::vector<std::size_t> rows(train.size());
    for (int t = 0; t < n_trees; ++t) {
        std::uint64_t tree_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        model.tree_seeds.push_back(tree_seed);
        Rng rng(tree_seed);
        if (bootstrap) {
            for (auto& r : rows) r = rng.bounded(train.size());
        } else {
            for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        }
        model.trees.push_back(builder.grow(rows, &rng, m_try));
    }
    return model;
}

int forest_predict(const RandomForestModel& model, const SparseVector& v) {
    if (model.trees.empty()) throw std::invalid_argument("forest_predict: empty model");
    int vote = 0;
    for (const auto& tree : model.trees) vote += tree_predict(tree, v);
    return vote > 0 ? +1 : -1;
}

}  // namespace textcat
