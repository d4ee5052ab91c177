// counterthread: analyze responses to cyber hate threads. Subcommands cover
// ingestion, annotation collation, the thread-length regression and the
// counter-speech classifier.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ct/commands.hpp"

namespace {

void add_common_options(CLI::App* cmd, ct::RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--out", cfg.out_dir, "output workspace directory");
    cmd->add_option("--strand", cfg.strand, "sexist|racist|homophobic|all");
    cmd->add_option("--seed", cfg.seed, "random seed for fold shuffling");
    cmd->add_option("--k", cfg.vocab_k, "features retained per n-gram channel");
    cmd->add_option("--folds", cfg.folds, "cross-validation folds");
    cmd->add_option("--threshold", cfg.threshold, "annotator agreement threshold");
    cmd->add_option("--channels", cfg.channels, "words|deps|both (comma list for cv)");
    cmd->add_option("--C", cfg.C, "SVM soft-margin parameter");
    cmd->add_option("--threads", cfg.threads_dir, "directory of per-thread CSV files");
    cmd->add_option("--annotations", cfg.annotations_path, "annotation CSV file");
    cmd->add_option("--parses", cfg.parses_dir, "directory of CoNLL-U parse files");
    cmd->add_option("--lexicon", cfg.lexicon_path, "hateful-term lexicon file");
    cmd->add_option("--annotators", cfg.annotators, "annotator team size (default: derived)");
    cmd->add_option("--model", cfg.model_path, "model file path");
    cmd->add_option("--input", cfg.input_path, "thread CSV file or directory to classify");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counter-speech thread analysis"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        ct::CommandResult (*run)(const ct::RunConfig&);
    };
    const Sub subs[] = {
        {"ingest", "normalize per-thread CSV files into the thread store", ct::cmd_ingest},
        {"collate", "collate annotations and apply the agreement filter", ct::cmd_collate},
        {"regress", "fit the thread-length model and render the table", ct::cmd_regress},
        {"train", "train a response classifier and persist the model", ct::cmd_train},
        {"cv", "cross-validated evaluation of the response classifier", ct::cmd_cv},
        {"classify", "label new posts with a trained model", ct::cmd_classify},
        {"report", "combined corpus and regression summary", ct::cmd_report},
    };

    ct::RunConfig cfg;
    std::string config_path;
    ct::CommandResult (*selected)(const ct::RunConfig&) = nullptr;

    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common_options(cmd, cfg, config_path);
        cmd->callback([&selected, &sub]() { selected = sub.run; });
    }

    // two-pass parse so config-file values load first and flags override them
    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            ct::RunConfig from_file = ct::load_config_file(config_path);
            cfg = from_file;
            app.clear();
            selected = nullptr;
            app.parse(argc, argv);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        ct::CommandResult result = selected(cfg);
        std::cout << result.summary;
        if (result.warning_count > 0)
            std::cerr << result.warning_count << " warning(s) written to the error sidecar\n";
        return result.exit_code;
    } catch (const ct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
