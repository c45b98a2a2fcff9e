#pragma once

#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

struct TrainingSet;

// k-NN keeps the training vectors verbatim. Similarity is cosine on tf-idf
// vectors by default; the euclidean flag switches to negated squared
// distance for parity experiments.
struct KnnModel {
    std::vector<SparseVector> vectors;
    std::vector<int> labels;
    std::vector<double> norms;  // cached |x_i|
    std::uint32_t dim = 0;
    int k = 1;
    bool euclidean = false;
};

KnnModel knn_fit(const TrainingSet& train, int k, bool euclidean = false);

// Majority label among the k most similar training vectors. Similarity ties
// break toward the lower training index, vote ties toward -1.
int knn_predict(const KnnModel& model, const SparseVector& v);

}  // namespace textcat
