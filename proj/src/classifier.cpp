#include "textcat/classifier.hpp"

#include <sstream>
#include <stdexcept>

namespace textcat {

const char* family_name(Family f) {
    switch (f) {
        case Family::naive_bayes: return "NB";
        case Family::knn: return "KNN";
        case Family::svm_smo: return "SMO";
        case Family::decision_tree: return "Tree";
        case Family::random_forest: return "Forest";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "NB") return Family::naive_bayes;
    if (name == "KNN") return Family::knn;
    if (name == "SMO") return Family::svm_smo;
    if (name == "Tree") return Family::decision_tree;
    if (name == "Forest") return Family::random_forest;
    throw std::invalid_argument("unknown classifier family '" + name +
                                "' (expected NB, KNN, SMO, Tree or Forest)");
}

Family model_family(const TrainedModel& model) {
    struct Visitor {
        Family operator()(const NaiveBayesModel&) const { return Family::naive_bayes; }
        Family operator()(const KnnModel&) const { return Family::knn; }
        Family operator()(const SmoModel&) const { return Family::svm_smo; }
        Family operator()(const DecisionTree&) const { return Family::decision_tree; }
        Family operator()(const RandomForestModel&) const { return Family::random_forest; }
    };
    return std::visit(Visitor{}, model);
}

TrainedModel fit(Family family, const TrainingSet& train, const Hyperparams& hp,
                 std::uint64_t seed) {
    switch (family) {
        case Family::naive_bayes:
            return nb_fit(train, hp.nb_alpha);
        case Family::knn:
            return knn_fit(train, hp.knn_k, hp.knn_euclidean);
        case Family::svm_smo:
            return smo_fit(train, hp.smo_c, hp.smo_tol, seed);
        case Family::decision_tree:
            return tree_fit(train, hp.tree_min_leaf);
        case Family::random_forest:
            return forest_fit(train, hp.forest_trees,
                              static_cast<std::uint32_t>(hp.forest_mtry), seed,
                              hp.forest_bootstrap);
    }
    throw std::logic_error("fit: unknown family");
}

int predict(const TrainedModel& model, const SparseVector& v) {
    struct Visitor {
        const SparseVector& v;
        int operator()(const NaiveBayesModel& m) const { return nb_predict(m, v); }
        int operator()(const KnnModel& m) const { return knn_predict(m, v); }
        int operator()(const SmoModel& m) const { return smo_predict(m, v); }
        int operator()(const DecisionTree& m) const { return tree_predict(m, v); }
        int operator()(const RandomForestModel& m) const { return forest_predict(m, v); }
    };
    return std::visit(Visitor{v}, model);
}

std::string describe_model(const TrainedModel& model) {
    std::ostringstream os;
    struct Visitor {
        std::ostringstream& os;
        void operator()(const NaiveBayesModel& m) const {
            os << "family=NB alpha=" << m.alpha << " dim=" << m.dim;
        }
        void operator()(const KnnModel& m) const {
            os << "family=KNN k=" << m.k
               << " metric=" << (m.euclidean ? "euclidean" : "cosine")
               << " stored=" << m.vectors.size();
        }
        void operator()(const SmoModel& m) const {
            os << "family=SMO C=" << m.c << " tol=" << m.tol
               << " support_vectors=" << m.support_count() << " passes=" << m.passes;
        }
        void operator()(const DecisionTree& m) const {
            os << "family=Tree min_leaf=" << m.min_leaf << " nodes=" << m.node_count()
               << " depth=" << m.depth();
        }
        void operator()(const RandomForestModel& m) const {
            os << "family=Forest trees=" << m.trees.size() << " m_try=" << m.m_try
               << " bootstrap=" << (m.bootstrap ? "on" : "off") << " seed=" << m.seed;
        }
    };
    std::visit(Visitor{os}, model);
    return os.str();
}

}  // namespace textcat
