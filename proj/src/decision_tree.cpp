#include "textcat/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "textcat/classifier.hpp"
#include "textcat/rng.hpp"

namespace textcat {

namespace {

double xlog2x(double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); }

struct BestSplit {
    std::uint32_t feature = 0;
    double threshold = 0.0;
    double gain_ratio = -1.0;
    double info_gain = 0.0;
};

}  // namespace

double binary_entropy(std::size_t pos, std::size_t neg) {
    std::size_t n = pos + neg;
    if (n == 0) return 0.0;
    double pp = static_cast<double>(pos) / static_cast<double>(n);
    double pn = static_cast<double>(neg) / static_cast<double>(n);
    return -xlog2x(pp) - xlog2x(pn);
}

SplitScore score_split(std::size_t left_pos, std::size_t left_neg, std::size_t right_pos,
                       std::size_t right_neg) {
    std::size_t left_n = left_pos + left_neg;
    std::size_t right_n = right_pos + right_neg;
    std::size_t n = left_n + right_n;
    if (n == 0 || left_n == 0 || right_n == 0)
        throw std::invalid_argument("score_split: empty side");

    double fl = static_cast<double>(left_n) / static_cast<double>(n);
    double fr = static_cast<double>(right_n) / static_cast<double>(n);

    SplitScore s;
    s.info_gain = binary_entropy(left_pos + right_pos, left_neg + right_neg) -
                  fl * binary_entropy(left_pos, left_neg) -
                  fr * binary_entropy(right_pos, right_neg);
    s.split_info = -xlog2x(fl) - xlog2x(fr);
    s.gain_ratio = s.split_info > 0.0 ? s.info_gain / s.split_info : 0.0;
    return s;
}

std::size_t DecisionTree::depth() const {
    if (nodes.empty()) return 0;
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{0, 1}};
    std::size_t deepest = 0;
    while (!stack.empty()) {
        auto [id, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        const TreeNode& node = nodes[static_cast<std::size_t>(id)];
        if (!node.is_leaf) {
            stack.push_back({node.left, d + 1});
            stack.push_back({node.right, d + 1});
        }
    }
    return deepest;
}

namespace detail {

// Column-major dense view of the training vectors; tree growth reads whole
// feature columns repeatedly, which is miserable on sparse rows.
struct TreeBuilder::Impl {
    const TrainingSet& train;
    std::size_t min_leaf;
    std::size_t rows;
    std::vector<double> columns;  // column-major, rows * dim

    Impl(const TrainingSet& t, int leaf)
        : train(t), min_leaf(static_cast<std::size_t>(leaf)), rows(t.size()),
          columns(static_cast<std::size_t>(t.dimension) * t.size(), 0.0) {
        for (std::size_t i = 0; i < rows; ++i)
            for (const auto& e : t.vectors[i].entries)
                columns[static_cast<std::size_t>(e.index) * rows + i] = e.weight;
    }

    double at(std::size_t row, std::uint32_t col) const {
        return columns[static_cast<std::size_t>(col) * rows + row];
    }

    int majority_label(const std::vector<std::size_t>& idx) const {
        std::ptrdiff_t vote = 0;
        for (std::size_t i : idx) vote += train.labels[i];
        return vote > 0 ? +1 : -1;  // tie -> -1
    }

    std::vector<std::uint32_t> candidate_features(Rng* rng, std::uint32_t m_try) const {
        if (!rng || m_try >= train.dimension) {
            std::vector<std::uint32_t> all(train.dimension);
            for (std::uint32_t f = 0; f < train.dimension; ++f) all[f] = f;
            return all;
        }
        // Floyd's sampling without replacement, sorted for determinism.
        std::vector<std::uint32_t> picked;
        picked.reserve(m_try);
        for (std::uint32_t j = train.dimension - m_try; j < train.dimension; ++j) {
            auto t = static_cast<std::uint32_t>(rng->bounded(j + 1));
            if (std::find(picked.begin(), picked.end(), t) == picked.end())
                picked.push_back(t);
            else
                picked.push_back(j);
        }
        std::sort(picked.begin(), picked.end());
        return picked;
    }

    BestSplit find_best_split(const std::vector<std::size_t>& idx, Rng* rng,
                              std::uint32_t m_try) const {
        BestSplit best;
        std::vector<std::pair<double, int>> column(idx.size());  // (value, label)
        for (std::uint32_t f : candidate_features(rng, m_try)) {
            for (std::size_t r = 0; r < idx.size(); ++r)
                column[r] = {at(idx[r], f), train.labels[idx[r]]};
            std::sort(column.begin(), column.end());

            std::size_t total_pos = 0;
            for (const auto& [v, y] : column)
                if (y > 0) ++total_pos;

            std::size_t left_n = 0, left_pos = 0;
            for (std::size_t r = 0; r + 1 < column.size(); ++r) {
                ++left_n;
                if (column[r].second > 0) ++left_pos;
                if (column[r].first == column[r + 1].first) continue;
                if (left_n < min_leaf || column.size() - left_n < min_leaf) continue;

                SplitScore score =
                    score_split(left_pos, left_n - left_pos, total_pos - left_pos,
                                column.size() - left_n - (total_pos - left_pos));
                if (score.info_gain <= 0.0) continue;
                if (score.gain_ratio > best.gain_ratio) {
                    best.feature = f;
                    best.threshold =
                        column[r].first + 0.5 * (column[r + 1].first - column[r].first);
                    best.gain_ratio = score.gain_ratio;
                    best.info_gain = score.info_gain;
                }
            }
        }
        return best;
    }

    std::int32_t build(const std::vector<std::size_t>& idx, DecisionTree& tree, Rng* rng,
                       std::uint32_t m_try) const {
        auto node_id = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.emplace_back();

        std::size_t pos = 0;
        for (std::size_t i : idx)
            if (train.labels[i] > 0) ++pos;
        bool pure = pos == 0 || pos == idx.size();
        if (pure || idx.size() < 2 * min_leaf) {
            tree.nodes[static_cast<std::size_t>(node_id)].label = majority_label(idx);
            return node_id;
        }

        BestSplit best = find_best_split(idx, rng, m_try);
        if (best.gain_ratio < 0.0 || best.info_gain <= 0.0) {
            tree.nodes[static_cast<std::size_t>(node_id)].label = majority_label(idx);
            return node_id;
        }

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx)
            (at(i, best.feature) <= best.threshold ? left_idx : right_idx).push_back(i);

        std::int32_t left = build(left_idx, tree, rng, m_try);
        std::int32_t right = build(right_idx, tree, rng, m_try);
        TreeNode& node = tree.nodes[static_cast<std::size_t>(node_id)];
        node.is_leaf = false;
        node.feature = best.feature;
        node.threshold = best.threshold;
        node.left = left;
        node.right = right;
        return node_id;
    }
};

TreeBuilder::TreeBuilder(const TrainingSet& train, int min_leaf)
    : impl_(std::make_unique<Impl>(train, min_leaf)) {}

TreeBuilder::~TreeBuilder() = default;

DecisionTree TreeBuilder::grow(const std::vector<std::size_t>& indices, Rng* rng,
                               std::uint32_t m_try) const {
    if (indices.empty()) throw std::invalid_argument("TreeBuilder::grow: no rows");
    DecisionTree tree;
    tree.dim = impl_->train.dimension;
    tree.min_leaf = static_cast<int>(impl_->min_leaf);
    impl_->build(indices, tree, rng, m_try);
    return tree;
}

}  // namespace detail

DecisionTree tree_fit(const TrainingSet& train, int min_leaf) {
    if (train.size() == 0) throw std::invalid_argument("tree_fit: empty training set");
    if (min_leaf < 1) throw std::invalid_argument("tree_fit: min_leaf must be >= 1");
    std::vector<std::size_t> all(train.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    detail::TreeBuilder builder(train, min_leaf);
    return builder.grow(all, nullptr, train.dimension);
}

int tree_predict(const DecisionTree& tree, const SparseVector& v) {
    if (v.dim != tree.dim) throw std::invalid_argument("tree_predict: dimension mismatch");
    const TreeNode* node = &tree.nodes[0];
    while (!node->is_leaf) {
        double value = 0.0;
        auto pos = std::lower_bound(
            v.entries.begin(), v.entries.end(), node->feature,
            [](const SparseEntry& e, std::uint32_t idx) { return e.index < idx; });
        if (pos != v.entries.end() && pos->index == node->feature) value = pos->weight;
        node = &tree.nodes[static_cast<std::size_t>(value <= node->threshold ? node->left
                                                                             : node->right)];
    }
    return node->label;
}

}  // namespace textcat
