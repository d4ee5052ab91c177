#pragma once
// File-level implementations of the CLI subcommands. Each command reads or
// writes the shared output workspace so downstream steps never re-parse the
// raw inputs. All outputs are deterministic for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "ct/error.hpp"

namespace ct {

struct RunConfig {
    std::string threads_dir;
    std::string annotations_path;
    std::string parses_dir;
    std::string lexicon_path;
    std::string out_dir = "out";
    std::string strand = "all"; // sexist|racist|homophobic|all
    std::size_t vocab_k = 2000;
    int word_ngram_min = 1, word_ngram_max = 5;
    int dep_ngram_min = 1, dep_ngram_max = 3;
    double C = 1.0;
    double svm_tol = 1e-3;
    int svm_max_iter = 1000;
    int folds = 10;
    std::uint64_t seed = 42;
    double threshold = 0.75;
    int annotators = 0;             // 0 = count distinct annotator ids
    std::string channels = "words"; // comma-separated sets for cv
    std::string model_path;
    std::string input_path; // posts to classify
};

// Merge settings from a JSON config file; flags set on the command line
// override afterwards.
RunConfig load_config_file(const std::string& path);
void apply_config_json(RunConfig& cfg, const std::string& json_text);

struct CommandResult {
    int exit_code = 0;
    std::string summary;     // printed to stdout
    long warning_count = 0;  // entries written to the error sidecar
};

CommandResult cmd_ingest(const RunConfig& cfg);
CommandResult cmd_collate(const RunConfig& cfg);
CommandResult cmd_regress(const RunConfig& cfg);
CommandResult cmd_cv(const RunConfig& cfg);
CommandResult cmd_train(const RunConfig& cfg);
CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);

} // namespace ct
