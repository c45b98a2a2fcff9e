#pragma once

#include <cstdint>
#include <vector>

#include "textcat/sparse_vector.hpp"

namespace textcat {

struct TrainingSet;

// Linear soft-margin SVM trained with sequential minimal optimization
// (Platt's two-heuristic working-set selection with an error cache).
// Decision function: f(x) = w.x + b, prediction sign(f) with 0 -> +1.
struct SmoModel {
    std::vector<double> weights;  // dense, dimension-sized
    double bias = 0.0;
    std::vector<double> alpha;    // per training example
    std::vector<int> labels;      // kept for the alpha-expansion identity
    std::vector<SparseVector> support;  // x_i with alpha_i > 0
    std::vector<std::size_t> support_index;
    double c = 1.0;
    double tol = 1e-3;
    std::size_t passes = 0;
    std::size_t take_steps = 0;

    std::size_t support_count() const { return support.size(); }
};

// Throws "degenerate task" for single-class input and a diagnostic
// runtime_error when the pass budget is exhausted before KKT holds.
SmoModel smo_fit(const TrainingSet& train, double c, double tol,
                 std::uint64_t seed = 0x5eed, std::size_t max_passes = 100000);

double smo_decision(const SmoModel& model, const SparseVector& v);

// sign(w.x + b); exactly 0 maps to +1.
int smo_predict(const SmoModel& model, const SparseVector& v);

// Dual objective W(alpha) = sum a_i - 1/2 sum a_i a_j y_i y_j K(x_i, x_j).
double smo_dual_objective(const TrainingSet& train, const std::vector<double>& alpha);

// Largest KKT violation of the fitted model over its training set:
//   alpha = 0  requires y f(x) >= 1,  alpha = C requires y f(x) <= 1,
//   interior alpha requires y f(x) = 1.
double smo_kkt_violation(const SmoModel& model, const TrainingSet& train);

}  // namespace textcat
