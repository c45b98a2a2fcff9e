#include "textcat/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "textcat/feature_selection.hpp"
#include "textcat/rng.hpp"
#include "textcat/text_pipeline.hpp"
#include "textcat/vector_space.hpp"

namespace textcat {

namespace {

using nlohmann::json;

std::string format_metric(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::uint64_t hash_terms(const std::vector<ScoredTerm>& terms) {
    std::uint64_t h = kFnvOffset;
    for (const auto& t : terms) {
        h = fnv1a(h, t.term.data(), t.term.size());
        h = fnv1a(h, "\n", 1);
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct PreparedCorpus {
    std::vector<SparseVector> counts;  // full-vocabulary tf vectors
};

PreparedCorpus vectorize(const Corpus& corpus, const StopwordList& stops,
                         const Vocabulary& vocab) {
    PreparedCorpus prepared;
    prepared.counts.reserve(corpus.documents.size());
    for (const Document& doc : corpus.documents)
        prepared.counts.push_back(count_vector(run_pipeline(doc.text, stops), vocab));
    return prepared;
}

// Compact count and tf-idf representations of one document for one task.
struct ProjectedDoc {
    SparseVector counts;
    SparseVector tfidf;
};

ProjectedDoc project_doc(const SparseVector& full_counts, const FeatureSet& features,
                         const IdfTable& idf_table) {
    ProjectedDoc out;
    out.counts = features.project(full_counts);
    out.tfidf.dim = out.counts.dim;
    for (const auto& e : out.counts.entries) {
        double w = e.weight * idf_table.values[features.selected()[e.index].index];
        if (w != 0.0) out.tfidf.entries.push_back({e.index, w});
    }
    return out;
}

std::uint64_t unit_seed(std::uint64_t seed, Family family, std::size_t k,
                        const std::string& category) {
    std::uint64_t h = kFnvOffset;
    const char* fam = family_name(family);
    h = fnv1a(h, fam, std::string_view(fam).size());
    h = fnv1a(h, "|", 1);
    h = fnv1a(h, &k, sizeof k);
    h = fnv1a(h, category.data(), category.size());
    return derive_seed(seed, h);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (train_path.empty() || test_path.empty())
        throw std::invalid_argument("config: train and test paths are required");
    if (classifiers.empty()) throw std::invalid_argument("config: no classifiers selected");
    if (feature_counts.empty()) throw std::invalid_argument("config: no feature counts");
    for (std::size_t i = 0; i + 1 < feature_counts.size(); ++i)
        if (feature_counts[i] >= feature_counts[i + 1])
            throw std::invalid_argument("config: feature counts must be strictly ascending");
    if (feature_counts.front() == 0)
        throw std::invalid_argument("config: feature counts must be positive");
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "train") cfg.train_path = value.get<std::string>();
        else if (key == "test") cfg.test_path = value.get<std::string>();
        else if (key == "classifiers") {
            cfg.classifiers.clear();
            for (const auto& name : value) cfg.classifiers.push_back(family_from_name(name));
        } else if (key == "features") {
            cfg.feature_counts = value.get<std::vector<std::size_t>>();
        } else if (key == "stopwords") cfg.stopword_path = value.get<std::string>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
        else if (key == "threads") cfg.threads = value.get<unsigned>();
        else if (key == "nb_alpha") cfg.hp.nb_alpha = value.get<double>();
        else if (key == "knn_k") cfg.hp.knn_k = value.get<int>();
        else if (key == "knn_euclidean") cfg.hp.knn_euclidean = value.get<bool>();
        else if (key == "smo_c") cfg.hp.smo_c = value.get<double>();
        else if (key == "smo_tol") cfg.hp.smo_tol = value.get<double>();
        else if (key == "tree_min_leaf") cfg.hp.tree_min_leaf = value.get<int>();
        else if (key == "forest_trees") cfg.hp.forest_trees = value.get<int>();
        else if (key == "forest_mtry") cfg.hp.forest_mtry = value.get<int>();
        else if (key == "forest_bootstrap") cfg.hp.forest_bootstrap = value.get<bool>();
        else throw std::runtime_error(path + ": unknown config key '" + key + "'");
    }
    return cfg;
}

SweepResult run_sweep(const ExperimentConfig& config) {
    config.validate();

    Corpus train = load_canonical(config.train_path, Corpus::Split::train);
    Corpus test = load_canonical(config.test_path, Corpus::Split::test);

    StopwordList file_stops;
    const StopwordList* stops = &StopwordList::smart_english();
    if (config.stopword_path) {
        file_stops = StopwordList::load(*config.stopword_path);
        stops = &file_stops;
    }

    std::vector<std::vector<std::string>> train_tokens;
    train_tokens.reserve(train.documents.size());
    for (const Document& doc : train.documents)
        train_tokens.push_back(run_pipeline(doc.text, *stops));

    Vocabulary vocab = build_vocabulary(train_tokens);
    IdfTable idf_table = build_idf(vocab);

    PreparedCorpus train_prep;
    train_prep.counts.reserve(train_tokens.size());
    for (const auto& tokens : train_tokens)
        train_prep.counts.push_back(count_vector(tokens, vocab));
    PreparedCorpus test_prep = vectorize(test, *stops, vocab);

    // Rankings depend only on the category; top-k for every k is a prefix.
    std::vector<std::vector<int>> train_labels, test_labels;
    std::vector<FeatureRanking> rankings;
    for (const std::string& category : train.categories) {
        train_labels.push_back(make_binary_task(train, category));
        test_labels.push_back(binary_labels(test.documents, category));
        rankings.push_back(
            rank_features(category, vocab, train_prep.counts, train_labels.back()));
    }

    SweepResult result;
    result.categories = train.categories;
    result.vocabulary_size = vocab.size();
    for (std::size_t c = 0; c < train.categories.size(); ++c)
        for (std::size_t k : config.feature_counts) {
            FeatureSet fs = select_top_k(rankings[c], k);
            result.selected_features.push_back(
                {train.categories[c], k, hex64(hash_terms(fs.selected()))});
        }

    struct Unit {
        std::size_t cell;      // index into cells
        std::size_t category;  // index into train.categories
    };
    std::vector<Unit> units;
    for (Family family : config.classifiers) {
        for (std::size_t k : config.feature_counts) {
            CellResult cell;
            cell.family = family;
            cell.feature_count = k;
            cell.tasks.resize(train.categories.size());
            result.cells.push_back(std::move(cell));
            for (std::size_t c = 0; c < train.categories.size(); ++c)
                units.push_back({result.cells.size() - 1, c});
        }
    }

    auto run_unit = [&](const Unit& unit) {
        CellResult& cell = result.cells[unit.cell];
        const std::string& category = result.categories[unit.category];
        const std::vector<int>& gold_train = train_labels[unit.category];
        const std::vector<int>& gold_test = test_labels[unit.category];

        FeatureSet features = select_top_k(rankings[unit.category], cell.feature_count);

        TrainingSet counts_set, tfidf_set;
        counts_set.dimension = tfidf_set.dimension = static_cast<std::uint32_t>(features.size());
        counts_set.labels = tfidf_set.labels = gold_train;
        counts_set.vectors.reserve(train_prep.counts.size());
        tfidf_set.vectors.reserve(train_prep.counts.size());
        for (const auto& full : train_prep.counts) {
            ProjectedDoc doc = project_doc(full, features, idf_table);
            counts_set.vectors.push_back(std::move(doc.counts));
            tfidf_set.vectors.push_back(std::move(doc.tfidf));
        }

        BinaryTaskResult& task = cell.tasks[unit.category];
        task.category = category;

        std::size_t n_pos = 0;
        for (int y : gold_train)
            if (y > 0) ++n_pos;
        bool degenerate = n_pos == 0 || n_pos == gold_train.size();

        std::vector<int> predictions;
        predictions.reserve(test_prep.counts.size());
        if (degenerate) {
            // No fit is possible; predict the single training class.
            task.degenerate = true;
            int only_class = n_pos == 0 ? -1 : +1;
            predictions.assign(test_prep.counts.size(), only_class);
        } else {
            bool wants_counts = cell.family == Family::naive_bayes;
            const TrainingSet& train_set = wants_counts ? counts_set : tfidf_set;
            TrainedModel model = fit(cell.family, train_set, config.hp,
                                     unit_seed(config.seed, cell.family, cell.feature_count,
                                               category));
            for (const auto& full : test_prep.counts) {
                ProjectedDoc doc = project_doc(full, features, idf_table);
                predictions.push_back(predict(model, wants_counts ? doc.counts : doc.tfidf));
            }
        }
        task.counts = confusion(predictions, gold_test);
        task.metrics = precision_recall_f(task.counts);
    };

    unsigned n_threads = config.threads;
    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(units.size()) + 1);

    std::vector<double> cell_seconds(result.cells.size(), 0.0);
    std::mutex time_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            auto start = std::chrono::steady_clock::now();
            run_unit(units[i]);
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            std::lock_guard lock(time_mutex);
            cell_seconds[units[i].cell] += elapsed.count();
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        CellResult& cell = result.cells[i];
        std::vector<ConfusionCounts> counts;
        counts.reserve(cell.tasks.size());
        for (const auto& task : cell.tasks) counts.push_back(task.counts);
        cell.micro = micro_f(counts);
        cell.macro_f1 = macro_f(cell.tasks);
        cell.wall_seconds = cell_seconds[i];
    }

    std::sort(result.cells.begin(), result.cells.end(),
              [](const CellResult& a, const CellResult& b) {
                  std::string_view fa = family_name(a.family), fb = family_name(b.family);
                  if (fa != fb) return fa < fb;
                  return a.feature_count < b.feature_count;
              });
    return result;
}

void emit_results(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write results file: " + path);
    out << "classifier,feature_count,micro_precision,micro_recall,micro_f1,macro_f1\n";
    for (const auto& cell : result.cells) {
        out << family_name(cell.family) << ',' << cell.feature_count << ','
            << format_metric(cell.micro.precision) << ',' << format_metric(cell.micro.recall)
            << ',' << format_metric(cell.micro.f1) << ',' << format_metric(cell.macro_f1)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_per_task(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write per-task file: " + path);
    out << "classifier,feature_count,category,tp,fp,fn,tn,precision,recall,f1,degenerate\n";
    for (const auto& cell : result.cells) {
        for (const auto& task : cell.tasks) {
            out << family_name(cell.family) << ',' << cell.feature_count << ','
                << task.category << ',' << task.counts.tp << ',' << task.counts.fp << ','
                << task.counts.fn << ',' << task.counts.tn << ','
                << format_metric(task.metrics.precision) << ','
                << format_metric(task.metrics.recall) << ','
                << format_metric(task.metrics.f1) << ',' << (task.degenerate ? 1 : 0) << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_manifest(const ExperimentConfig& config, const SweepResult& result,
                   const std::string& path) {
    json j;
    json cfg;
    cfg["train"] = config.train_path;
    cfg["test"] = config.test_path;
    json classifiers = json::array();
    for (Family f : config.classifiers) classifiers.push_back(family_name(f));
    cfg["classifiers"] = classifiers;
    cfg["features"] = config.feature_counts;
    cfg["stopwords"] = config.stopword_path ? json(*config.stopword_path) : json("builtin:smart");
    cfg["seed"] = config.seed;
    cfg["nb_alpha"] = config.hp.nb_alpha;
    cfg["knn_k"] = config.hp.knn_k;
    cfg["knn_metric"] = config.hp.knn_euclidean ? "euclidean" : "cosine";
    cfg["smo_c"] = config.hp.smo_c;
    cfg["smo_tol"] = config.hp.smo_tol;
    cfg["tree_min_leaf"] = config.hp.tree_min_leaf;
    cfg["forest_trees"] = config.hp.forest_trees;
    cfg["forest_mtry"] = config.hp.forest_mtry == 0 ? json("floor(log2(k))+1")
                                                    : json(config.hp.forest_mtry);
    cfg["forest_bootstrap"] = config.hp.forest_bootstrap;
    j["config"] = cfg;

    j["conventions"] = {
        {"pipeline", "lowercase, strip non-letters, tokenize, stopwords, porter stem"},
        {"stopword_order", "stopwords removed before stemming"},
        {"idf", "ln(N_train/df), training split only"},
        {"tf", "raw in-document count"},
        {"selection", "chi-square on document-level presence, per binary task"},
        {"tie_breaks", "ranking ties lexicographic; prediction ties to -1; SMO sign(0) to +1"},
        {"nb_input", "raw counts of selected features"},
        {"other_input", "tf-idf of selected features"},
        {"forest_min_leaf", 1},
        {"micro_f", "counts pooled across categories"},
    };

    j["vocabulary_size"] = result.vocabulary_size;
    j["categories"] = result.categories;

    // Selected features are classifier-independent; hashed per (category, k).
    json selected = json::object();
    for (const auto& info : result.selected_features) {
        json& per_category = selected[info.category];
        if (per_category.is_null()) per_category = json::object();
        per_category[std::to_string(info.feature_count)] = info.hash_hex;
    }
    j["selected_features"] = selected;

    json cells = json::array();
    for (const auto& cell : result.cells) {
        json c;
        c["classifier"] = family_name(cell.family);
        c["feature_count"] = cell.feature_count;
        c["micro_precision"] = format_metric(cell.micro.precision);
        c["micro_recall"] = format_metric(cell.micro.recall);
        c["micro_f1"] = format_metric(cell.micro.f1);
        c["macro_f1"] = format_metric(cell.macro_f1);
        json degenerate = json::array();
        for (const auto& task : cell.tasks)
            if (task.degenerate) degenerate.push_back(task.category);
        c["degenerate_tasks"] = degenerate;
        cells.push_back(c);
    }
    j["cells"] = cells;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_timings(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write timings file: " + path);
    out << "classifier,feature_count,wall_seconds\n";
    for (const auto& cell : result.cells)
        out << family_name(cell.family) << ',' << cell.feature_count << ','
            << format_metric(cell.wall_seconds) << '\n';
}

SweepResult run_and_emit(const ExperimentConfig& config) {
    SweepResult result = run_sweep(config);
    std::filesystem::create_directories(config.out_dir);
    std::filesystem::path dir(config.out_dir);
    emit_results(result, (dir / "results.csv").string());
    emit_per_task(result, (dir / "per_task.csv").string());
    emit_manifest(config, result, (dir / "manifest.json").string());
    emit_timings(result, (dir / "timings.csv").string());
    return result;
}

std::vector<WinnerRow> compare_best(
    const std::vector<std::tuple<std::string, std::size_t, double>>& cells) {
    std::vector<WinnerRow> winners;
    std::vector<std::size_t> ks;
    for (const auto& [name, k, f1] : cells) ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    for (std::size_t k : ks) {
        WinnerRow row;
        row.feature_count = k;
        bool found = false;
        for (const auto& [name, ck, f1] : cells) {
            if (ck != k) continue;
            if (!found || f1 > row.micro_f1 || (f1 == row.micro_f1 && name < row.classifier)) {
                row.classifier = name;
                row.micro_f1 = f1;
                found = true;
            }
        }
        winners.push_back(row);
    }
    return winners;
}

std::vector<WinnerRow> compare_best(const SweepResult& result) {
    std::vector<std::tuple<std::string, std::size_t, double>> cells;
    cells.reserve(result.cells.size());
    for (const auto& cell : result.cells)
        cells.emplace_back(family_name(cell.family), cell.feature_count, cell.micro.f1);
    return compare_best(cells);
}

std::string format_winner_table(const std::vector<WinnerRow>& winners) {
    std::string out = "feature_count\twinner\tmicro_f1\n";
    for (const auto& row : winners) {
        out += std::to_string(row.feature_count);
        out += '\t';
        out += row.classifier;
        out += '\t';
        out += format_metric(row.micro_f1);
        out += '\n';
    }
    return out;
}

}  // namespace textcat
