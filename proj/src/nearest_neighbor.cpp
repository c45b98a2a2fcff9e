#include "textcat/nearest_neighbor.hpp"

#include <algorithm>
#include <stdexcept>

#include "textcat/classifier.hpp"

namespace textcat {

KnnModel knn_fit(const TrainingSet& train, int k, bool euclidean) {
    if (train.size() == 0) throw std::invalid_argument("knn_fit: empty training set");
    if (k < 1 || static_cast<std::size_t>(k) > train.size())
        throw std::invalid_argument("knn_fit: k out of range");
    KnnModel model;
    model.vectors = train.vectors;
    model.labels = train.labels;
    model.dim = train.dimension;
    model.k = k;
    model.euclidean = euclidean;
    model.norms.reserve(model.vectors.size());
    for (const auto& x : model.vectors) model.norms.push_back(norm(x));
    return model;
}

int knn_predict(const KnnModel& model, const SparseVector& v) {
    if (v.dim != model.dim) throw std::invalid_argument("knn_predict: dimension mismatch");

    std::vector<std::pair<double, std::size_t>> sims;  // (similarity, train index)
    sims.reserve(model.vectors.size());
    const double vn = norm(v);
    for (std::size_t i = 0; i < model.vectors.size(); ++i) {
        double s;
        if (model.euclidean) {
            s = -squared_distance(v, model.vectors[i]);
        } else {
            double denom = vn * model.norms[i];
            s = denom == 0.0 ? 0.0 : dot(v, model.vectors[i]) / denom;
        }
        sims.emplace_back(s, i);
    }

    auto better = [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    };
    std::size_t k = static_cast<std::size_t>(model.k);
    std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(k), sims.end(),
                      better);

    int vote = 0;
    for (std::size_t i = 0; i < k; ++i) vote += model.labels[sims[i].second];
    return vote > 0 ? +1 : -1;
}

}  // namespace textcat
