#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "textcat/classifier.hpp"
#include "textcat/evaluation.hpp"

namespace textcat {

struct ExperimentConfig {
    std::string train_path;
    std::string test_path;
    std::vector<Family> classifiers = {Family::naive_bayes, Family::knn, Family::svm_smo,
                                       Family::decision_tree, Family::random_forest};
    std::vector<std::size_t> feature_counts = {100, 200, 300, 400, 500, 600, 700, 800};
    std::optional<std::string> stopword_path;  // unset -> bundled SMART list
    std::uint64_t seed = 1;
    Hyperparams hp;
    std::string out_dir = "out";
    unsigned threads = 0;  // 0 -> hardware concurrency

    // Throws unless classifiers/feature_counts are non-empty and the counts
    // strictly ascending.
    void validate() const;
};

// Reads a JSON config file; unknown keys are an error. CLI flags are merged
// on top by the caller.
ExperimentConfig load_config(const std::string& path);

struct CellResult {
    Family family = Family::naive_bayes;
    std::size_t feature_count = 0;
    std::vector<BinaryTaskResult> tasks;  // category order
    PrecisionRecallF micro;
    double macro_f1 = 0.0;
    double wall_seconds = 0.0;
};

struct SelectedFeaturesInfo {
    std::string category;
    std::size_t feature_count = 0;
    std::string hash_hex;  // FNV-1a over the selected terms, in rank order
};

struct SweepResult {
    std::vector<std::string> categories;
    std::vector<CellResult> cells;  // sorted by (family name, feature count)
    std::vector<SelectedFeaturesInfo> selected_features;
    std::size_t vocabulary_size = 0;
};

// Runs the full grid: for every (classifier, k, category), rank features on
// the training split, select top-k, weight, fit, predict the test split and
// score. Returns canonically sorted results; writes nothing.
SweepResult run_sweep(const ExperimentConfig& config);

// results CSV: one row per (classifier, feature_count) cell.
void emit_results(const SweepResult& result, const std::string& path);

// companion CSV with per-category rows, including the degenerate marker.
void emit_per_task(const SweepResult& result, const std::string& path);

// JSON manifest: config echo, corpus/vocabulary stats, selected-feature
// hashes and per-cell metrics. Byte-identical across reruns; wall-clock
// timings go to a separate file for that reason.
void emit_manifest(const ExperimentConfig& config, const SweepResult& result,
                   const std::string& path);

void emit_timings(const SweepResult& result, const std::string& path);

// Runs the sweep and writes results.csv, per_task.csv, manifest.json and
// timings.csv under config.out_dir.
SweepResult run_and_emit(const ExperimentConfig& config);

struct WinnerRow {
    std::size_t feature_count = 0;
    std::string classifier;
    double micro_f1 = 0.0;
};

// Best classifier per feature count (tie -> lexicographic family name).
// Works from any (classifier, k, micro_f1) triples so `report` can reuse it
// on a parsed CSV.
std::vector<WinnerRow> compare_best(
    const std::vector<std::tuple<std::string, std::size_t, double>>& cells);

std::vector<WinnerRow> compare_best(const SweepResult& result);

std::string format_winner_table(const std::vector<WinnerRow>& winners);

}  // namespace textcat
