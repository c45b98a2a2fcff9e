#include "textcat/naive_bayes.hpp"

#include <cmath>
#include <stdexcept>

#include "textcat/classifier.hpp"

namespace textcat {

NaiveBayesModel nb_fit(const TrainingSet& train, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("nb_fit: alpha must be positive");
    if (train.size() == 0) throw std::invalid_argument("nb_fit: empty training set");

    std::size_t n_pos = 0;
    for (int y : train.labels)
        if (y > 0) ++n_pos;
    std::size_t n_neg = train.size() - n_pos;
    if (n_pos == 0 || n_neg == 0) throw std::runtime_error("nb_fit: degenerate task");

    NaiveBayesModel model;
    model.dim = train.dimension;
    model.alpha = alpha;

    std::vector<double> count_pos(train.dimension, 0.0), count_neg(train.dimension, 0.0);
    double total_pos = 0.0, total_neg = 0.0;
    for (std::size_t i = 0; i < train.size(); ++i) {
        auto& counts = train.labels[i] > 0 ? count_pos : count_neg;
        auto& total = train.labels[i] > 0 ? total_pos : total_neg;
        for (const auto& e : train.vectors[i].entries) {
            counts[e.index] += e.weight;
            total += e.weight;
        }
    }

    const double k = static_cast<double>(train.dimension);
    model.log_prob_pos.resize(train.dimension);
    model.log_prob_neg.resize(train.dimension);
    for (std::uint32_t t = 0; t < train.dimension; ++t) {
        model.log_prob_pos[t] = std::log((count_pos[t] + alpha) / (total_pos + alpha * k));
        model.log_prob_neg[t] = std::log((count_neg[t] + alpha) / (total_neg + alpha * k));
    }
    const double n = static_cast<double>(train.size());
    model.log_prior_pos = std::log(static_cast<double>(n_pos) / n);
    model.log_prior_neg = std::log(static_cast<double>(n_neg) / n);
    return model;
}

int nb_predict(const NaiveBayesModel& model, const SparseVector& v) {
    if (v.dim != model.dim) throw std::invalid_argument("nb_predict: dimension mismatch");
    double score_pos = model.log_prior_pos;
    double score_neg = model.log_prior_neg;
    for (const auto& e : v.entries) {
        score_pos += e.weight * model.log_prob_pos[e.index];
        score_neg += e.weight * model.log_prob_neg[e.index];
    }
    return score_pos > score_neg ? +1 : -1;
}

}  // namespace textcat
