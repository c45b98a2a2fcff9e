#pragma once

#include <cstdint>
#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

struct TrainingSet;

// Multinomial Naive Bayes over raw term counts with Laplace smoothing:
//   P(t|class) = (count(t, class) + alpha) / (total(class) + alpha * dim)
// Everything is stored in log space.
struct NaiveBayesModel {
    std::uint32_t dim = 0;
    double alpha = 1.0;
    double log_prior_pos = 0.0;
    double log_prior_neg = 0.0;
    std::vector<double> log_prob_pos;
    std::vector<double> log_prob_neg;
};

// Throws "degenerate task" when the training set has a single class.
NaiveBayesModel nb_fit(const TrainingSet& train, double alpha);

// argmax of log prior + sum tf(t) * log P(t|class); ties go to -1.
// v must carry raw counts in the model's feature space.
int nb_predict(const NaiveBayesModel& model, const SparseVector& v);

}  // namespace textcat
