#include "textcat/svm_smo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "textcat/classifier.hpp"
#include "textcat/rng.hpp"

namespace textcat {

namespace {

double dot_dense_sparse(const std::vector<double>& w, const SparseVector& x) {
    double s = 0.0;
    for (const auto& e : x.entries) s += w[e.index] * e.weight;
    return s;
}

class SmoSolver {
public:
    SmoSolver(const TrainingSet& train, double c, double tol, std::uint64_t seed,
              std::size_t max_passes)
        : x_(train.vectors),
          y_(train.labels),
          n_(train.size()),
          c_(c),
          tol_(tol),
          step_eps_(std::min(1e-3, tol / 10.0)),
          max_passes_(max_passes),
          rng_(seed),
          alpha_(train.size(), 0.0),
          w_(train.dimension, 0.0),
          err_(train.size(), 0.0),
          err_valid_(train.size(), false) {}

    void solve() {
        std::size_t num_changed = 0;
        bool examine_all = true;
        while (num_changed > 0 || examine_all) {
            if (++passes_ > max_passes_) {
                std::ostringstream os;
                os << "smo_fit: no convergence after " << passes_ << " passes"
                   << " (n=" << n_ << ", C=" << c_ << ", tol=" << tol_
                   << ", steps=" << take_steps_ << ", max KKT violation=" << max_violation()
                   << ")";
                throw std::runtime_error(os.str());
            }
            num_changed = 0;
            if (examine_all) {
                for (std::size_t i = 0; i < n_; ++i) num_changed += examine(i);
            } else {
                for (std::size_t i = 0; i < n_; ++i)
                    if (is_interior(alpha_[i])) num_changed += examine(i);
            }
            if (examine_all)
                examine_all = false;
            else if (num_changed == 0)
                examine_all = true;
        }
    }

    SmoModel finish(const TrainingSet& train) {
        SmoModel model;
        model.weights = std::move(w_);
        model.bias = b_;
        model.alpha = alpha_;
        model.labels = y_;
        model.c = c_;
        model.tol = tol_;
        model.passes = passes_;
        model.take_steps = take_steps_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha_[i] > 0.0) {
                model.support.push_back(train.vectors[i]);
                model.support_index.push_back(i);
            }
        }
        return model;
    }

private:
    bool is_interior(double a) const { return a > bound_eps() && a < c_ - bound_eps(); }
    double bound_eps() const { return 1e-8 * std::max(1.0, c_); }

    double decision(std::size_t i) const { return dot_dense_sparse(w_, x_[i]) + b_; }

    double error(std::size_t i) {
        if (err_valid_[i] && is_interior(alpha_[i])) return err_[i];
        double e = decision(i) - y_[i];
        if (is_interior(alpha_[i])) {
            err_[i] = e;
            err_valid_[i] = true;
        }
        return e;
    }

    double max_violation() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            double margin = y_[i] * (dot_dense_sparse(w_, x_[i]) + b_);
            if (alpha_[i] <= bound_eps())
                worst = std::max(worst, 1.0 - margin);
            else if (alpha_[i] >= c_ - bound_eps())
                worst = std::max(worst, margin - 1.0);
            else
                worst = std::max(worst, std::abs(margin - 1.0));
        }
        return worst;
    }

    std::size_t examine(std::size_t i2) {
        double y2 = y_[i2];
        double alph2 = alpha_[i2];
        double e2 = error(i2);
        double r2 = e2 * y2;
        bool violated = (r2 < -tol_ && alph2 < c_) || (r2 > tol_ && alph2 > 0.0);
        if (!violated) return 0;

        // Heuristic 1: pick the cached error farthest from E2.
        std::size_t best = n_;
        double best_gap = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == i2 || !err_valid_[i] || !is_interior(alpha_[i])) continue;
            double gap = std::abs(err_[i] - e2);
            if (gap > best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best < n_ && take_step(best, i2, e2)) return 1;

        // Heuristic 2: all interior points, random start.
        std::size_t offset = rng_.bounded(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t i1 = (k + offset) % n_;
            if (i1 == i2 || !is_interior(alpha_[i1])) continue;
            if (take_step(i1, i2, e2)) return 1;
        }

        // Heuristic 3: everything else, random start.
        offset = rng_.bounded(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t i1 = (k + offset) % n_;
            if (i1 == i2 || is_interior(alpha_[i1])) continue;
            if (take_step(i1, i2, e2)) return 1;
        }
        return 0;
    }

    bool take_step(std::size_t i1, std::size_t i2, double e2) {
        if (i1 == i2) return false;
        double alph1 = alpha_[i1], alph2 = alpha_[i2];
        double y1 = y_[i1], y2 = y_[i2];
        double e1 = error(i1);
        double s = y1 * y2;

        double lo, hi;
        if (y1 != y2) {
            lo = std::max(0.0, alph2 - alph1);
            hi = std::min(c_, c_ + alph2 - alph1);
        } else {
            lo = std::max(0.0, alph1 + alph2 - c_);
            hi = std::min(c_, alph1 + alph2);
        }
        if (lo >= hi) return false;

        double k11 = dot(x_[i1], x_[i1]);
        double k12 = dot(x_[i1], x_[i2]);
        double k22 = dot(x_[i2], x_[i2]);
        double eta = k11 + k22 - 2.0 * k12;

        double a2;
        if (eta > 0.0) {
            a2 = alph2 + y2 * (e1 - e2) / eta;
            a2 = std::clamp(a2, lo, hi);
        } else {
            // Flat direction (duplicate points with a linear kernel):
            // evaluate the objective at both clip ends.
            double f1 = y1 * (e1 - b_) - alph1 * k11 - s * alph2 * k12;
            double f2 = y2 * (e2 - b_) - s * alph1 * k12 - alph2 * k22;
            double l1 = alph1 + s * (alph2 - lo);
            double h1 = alph1 + s * (alph2 - hi);
            double lo_obj = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 + 0.5 * lo * lo * k22 +
                            s * lo * l1 * k12;
            double hi_obj = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 + 0.5 * hi * hi * k22 +
                            s * hi * h1 * k12;
            if (lo_obj < hi_obj - step_eps_)
                a2 = lo;
            else if (lo_obj > hi_obj + step_eps_)
                a2 = hi;
            else
                return false;
        }
        if (a2 < lo + 1e-8 * c_) a2 = lo;
        else if (a2 > hi - 1e-8 * c_) a2 = hi;
        if (std::abs(a2 - alph2) < step_eps_ * (a2 + alph2 + step_eps_)) return false;

        double a1 = alph1 + s * (alph2 - a2);
        a1 = std::clamp(a1, 0.0, c_);

        double d1 = y1 * (a1 - alph1);
        double d2 = y2 * (a2 - alph2);
        double b1 = b_ - e1 - d1 * k11 - d2 * k12;
        double b2 = b_ - e2 - d1 * k12 - d2 * k22;
        double b_old = b_;
        if (a1 > bound_eps() && a1 < c_ - bound_eps())
            b_ = b1;
        else if (a2 > bound_eps() && a2 < c_ - bound_eps())
            b_ = b2;
        else
            b_ = 0.5 * (b1 + b2);

        alpha_[i1] = a1;
        alpha_[i2] = a2;

        for (const auto& e : x_[i1].entries) w_[e.index] += d1 * e.weight;
        for (const auto& e : x_[i2].entries) w_[e.index] += d2 * e.weight;

        double db = b_ - b_old;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!err_valid_[i]) continue;
            if (!is_interior(alpha_[i])) {
                err_valid_[i] = false;
                continue;
            }
            err_[i] += d1 * dot(x_[i1], x_[i]) + d2 * dot(x_[i2], x_[i]) + db;
        }
        // The changed pair gets exact errors straight from w.
        for (std::size_t i : {i1, i2}) {
            if (is_interior(alpha_[i])) {
                err_[i] = decision(i) - y_[i];
                err_valid_[i] = true;
            } else {
                err_valid_[i] = false;
            }
        }
        ++take_steps_;
        return true;
    }

    const std::vector<SparseVector>& x_;
    std::vector<int> y_;
    std::size_t n_;
    double c_, tol_, step_eps_;
    std::size_t max_passes_;
    Rng rng_;
    std::vector<double> alpha_;
    std::vector<double> w_;
    double b_ = 0.0;
    std::vector<double> err_;
    std::vector<char> err_valid_;
    std::size_t passes_ = 0;
    std::size_t take_steps_ = 0;
};

}  // namespace

SmoModel smo_fit(const TrainingSet& train, double c, double tol, std::uint64_t seed,
                 std::size_t max_passes) {
    if (c <= 0.0) throw std::invalid_argument("smo_fit: C must be positive");
    if (tol <= 0.0) throw std::invalid_argument("smo_fit: tol must be positive");
    if (train.size() == 0) throw std::invalid_argument("smo_fit: empty training set");
    bool has_pos = false, has_neg = false;
    for (int y : train.labels) (y > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) throw std::runtime_error("smo_fit: degenerate task");

    SmoSolver solver(train, c, tol, seed, max_passes);
    solver.solve();
    return solver.finish(train);
}

double smo_decision(const SmoModel& model, const SparseVector& v) {
    if (v.dim != model.weights.size())
        throw std::invalid_argument("smo_decision: dimension mismatch");
    return dot_dense_sparse(model.weights, v) + model.bias;
}

int smo_predict(const SmoModel& model, const SparseVector& v) {
    return smo_decision(model, v) >= 0.0 ? +1 : -1;
}

double smo_dual_objective(const TrainingSet& train, const std::vector<double>& alpha) {
    double linear = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < train.size(); ++i) {
        if (alpha[i] == 0.0) continue;
        linear += alpha[i];
        for (std::size_t j = 0; j < train.size(); ++j) {
            if (alpha[j] == 0.0) continue;
            quad += alpha[i] * alpha[j] * train.labels[i] * train.labels[j] *
                    dot(train.vectors[i], train.vectors[j]);
        }
    }
    return linear - 0.5 * quad;
}

double smo_kkt_violation(const SmoModel& model, const TrainingSet& train) {
    double worst = 0.0;
    double eps = 1e-8 * std::max(1.0, model.c);
    for (std::size_t i = 0; i < train.size(); ++i) {
        double margin = train.labels[i] * smo_decision(model, train.vectors[i]);
        if (model.alpha[i] <= eps)
            worst = std::max(worst, 1.0 - margin);
        else if (model.alpha[i] >= model.c - eps)
            worst = std::max(worst, margin - 1.0);
        else
            worst = std::max(worst, std::abs(margin - 1.0));
    }
    return worst;
}

}  // namespace textcat
