#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

// One one-vs-rest binary task, projected to its selected features.
struct TrainingSet {
    std::vector<SparseVector> vectors;
    std::vector<int> labels;  // +1 / -1, parallel to vectors
    std::uint32_t dimension = 0;

    std::size_t size() const { return vectors.size(); }
};

enum class Family { naive_bayes, knn, svm_smo, decision_tree, random_forest };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws on unknown name

}  // namespace textcat

#include "textcat/decision_tree.hpp"
#include "textcat/naive_bayes.hpp"
#include "textcat/nearest_neighbor.hpp"
#include "textcat/random_forest.hpp"
#include "textcat/svm_smo.hpp"

namespace textcat {

struct Hyperparams {
    double nb_alpha = 1.0;      // Laplace smoothing
    int knn_k = 1;              // paper runs k = 1
    bool knn_euclidean = false; // parity flag; default is cosine on tf-idf
    double smo_c = 1.0;
    double smo_tol = 1e-3;
    int tree_min_leaf = 2;
    int forest_trees = 100;
    int forest_mtry = 0;        // 0 -> floor(log2(dim)) + 1
    bool forest_bootstrap = true;
};

using TrainedModel =
    std::variant<NaiveBayesModel, KnnModel, SmoModel, DecisionTree, RandomForestModel>;

Family model_family(const TrainedModel& model);

// Fits the requested family with the given hyperparameters; seed feeds the
// randomized families (forest bootstrap/feature sampling, SMO scan starts).
TrainedModel fit(Family family, const TrainingSet& train, const Hyperparams& hp,
                 std::uint64_t seed);

// Dispatches to the family-specific prediction. Throws on dimension mismatch.
int predict(const TrainedModel& model, const SparseVector& v);

// One-paragraph structured summary (family, hyperparameters, model shape)
// for the per-task debug manifest.
std::string describe_model(const TrainedModel& model);

}  // namespace textcat
