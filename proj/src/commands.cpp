#include "ct/commands.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ct/annotation.hpp"
#include "ct/csv.hpp"
#include "ct/pipeline.hpp"
#include "ct/regression.hpp"
#include "ct/stores.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ct {

namespace {

struct Sidecar {
    std::vector<std::string> lines;

    void add(const std::string& scope, const std::string& code, const std::string& detail) {
        json j;
        j["scope"] = scope;
        j["error"] = code;
        j["detail"] = detail;
        lines.push_back(j.dump());
    }
    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(Err::IoFailure, "cannot write " + path);
        for (const auto& l : lines) out << l << '\n';
    }
};

void ensure_out_dir(const RunConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) fail(Err::IoFailure, "cannot create output directory " + cfg.out_dir);
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::IoFailure, "cannot write " + path);
    out << text;
}

std::vector<Strand> selected_strands(const RunConfig& cfg) {
    if (cfg.strand == "all")
        return {Strand::Sexist, Strand::Racist, Strand::Homophobic};
    auto s = strand_from_name(cfg.strand);
    if (!s) fail(Err::BadConfig, "unknown strand '" + cfg.strand + "'");
    return {*s};
}

Thread thread_from_csv(const std::string& path, const std::string& thread_id, Strand strand) {
    auto rows = read_csv_file(path);
    if (rows.empty()) fail(Err::MalformedCsv, "empty file");
    const CsvRow header{"post_id", "author", "reply_to", "text"};
    if (rows.front() != header)
        fail(Err::MalformedCsv, "header must be post_id,author,reply_to,text");

    std::vector<RawPostRecord> records;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 4)
            fail(Err::MalformedCsv, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " fields");
        RawPostRecord r;
        r.post_id = rows[i][0];
        r.author = rows[i][1];
        if (!rows[i][2].empty()) r.reply_to = rows[i][2];
        r.text = rows[i][3];
        records.push_back(std::move(r));
    }
    return assemble_thread(records, thread_id, strand);
}

// Units for classification: retained labeled replies of the given threads.
std::vector<LabeledPost> labeled_replies(const std::vector<Thread>& threads,
                                         const std::vector<StoredLabel>& labels,
                                         const std::set<Strand>& strands) {
    std::map<std::string, const StoredLabel*> by_post;
    for (const auto& l : labels)
        if (l.retained) by_post[l.post_id] = &l;

    std::vector<LabeledPost> units;
    for (const auto& t : threads) {
        if (!strands.count(t.strand)) continue;
        for (std::size_t i = 1; i < t.posts.size(); ++i) {
            auto it = by_post.find(t.posts[i].post_id);
            if (it == by_post.end()) continue;
            LabeledPost u;
            u.post_id = t.posts[i].post_id;
            u.text = t.posts[i].text;
            u.label = it->second->conflated;
            units.push_back(std::move(u));
        }
    }
    return units;
}

ChannelConfig channel_config(const std::string& name, bool with_lexicon) {
    ChannelConfig c;
    if (name == "words") {
        c.words = true;
        c.deps = false;
    } else if (name == "deps") {
        c.words = false;
        c.deps = true;
    } else if (name == "both") {
        c.words = true;
        c.deps = true;
    } else {
        fail(Err::BadConfig, "unknown channel set '" + name + "'");
    }
    c.lexicon = with_lexicon;
    return c;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

FeatureParams feature_params(const RunConfig& cfg, const ChannelConfig& channels) {
    FeatureParams p;
    p.channels = channels;
    p.vocab_k = cfg.vocab_k;
    p.word_ngram_min = cfg.word_ngram_min;
    p.word_ngram_max = cfg.word_ngram_max;
    p.dep_ngram_min = cfg.dep_ngram_min;
    p.dep_ngram_max = cfg.dep_ngram_max;
    return p;
}

std::map<std::string, std::vector<DepUnit>> maybe_load_parses(const RunConfig& cfg, bool needed) {
    if (!needed) return {};
    if (cfg.parses_dir.empty())
        fail(Err::MissingParses, "dependency channel requested but no --parses directory given");
    return load_parse_dir(cfg.parses_dir);
}

Lexicon maybe_load_lexicon(const RunConfig& cfg, Sidecar& sidecar) {
    if (cfg.lexicon_path.empty()) return {};
    Lexicon lex = load_lexicon_file(cfg.lexicon_path);
    if (lex.empty()) sidecar.add(cfg.lexicon_path, err_name(Err::EmptyLexicon),
                                 "lexicon file contains no terms");
    return lex;
}

} // namespace

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::IoFailure, "cannot open config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    RunConfig cfg;
    apply_config_json(cfg, ss.str());
    return cfg;
}

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(Err::BadConfig, std::string("config is not valid JSON: ") + e.what());
    }
    auto get_str = [&](const char* key, std::string& field) {
        if (j.contains(key)) field = j.at(key).get<std::string>();
    };
    get_str("threads_dir", cfg.threads_dir);
    get_str("annotations_path", cfg.annotations_path);
    get_str("parses_dir", cfg.parses_dir);
    get_str("lexicon_path", cfg.lexicon_path);
    get_str("out_dir", cfg.out_dir);
    get_str("strand", cfg.strand);
    get_str("channels", cfg.channels);
    get_str("model_path", cfg.model_path);
    get_str("input_path", cfg.input_path);
    if (j.contains("vocab_k")) cfg.vocab_k = j.at("vocab_k").get<std::size_t>();
    if (j.contains("word_ngram_min")) cfg.word_ngram_min = j.at("word_ngram_min").get<int>();
    if (j.contains("word_ngram_max")) cfg.word_ngram_max = j.at("word_ngram_max").get<int>();
    if (j.contains("dep_ngram_min")) cfg.dep_ngram_min = j.at("dep_ngram_min").get<int>();
    if (j.contains("dep_ngram_max")) cfg.dep_ngram_max = j.at("dep_ngram_max").get<int>();
    if (j.contains("C")) cfg.C = j.at("C").get<double>();
    if (j.contains("svm_tol")) cfg.svm_tol = j.at("svm_tol").get<double>();
    if (j.contains("svm_max_iter")) cfg.svm_max_iter = j.at("svm_max_iter").get<int>();
    if (j.contains("folds")) cfg.folds = j.at("folds").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threshold")) cfg.threshold = j.at("threshold").get<double>();
    if (j.contains("annotators")) cfg.annotators = j.at("annotators").get<int>();

    if (cfg.vocab_k < 1 || cfg.C <= 0 || cfg.folds < 1 || cfg.threshold <= 0 ||
        cfg.threshold > 1)
        fail(Err::BadConfig, "numeric configuration values must be positive");
}

CommandResult cmd_ingest(const RunConfig& cfg) {
    if (cfg.threads_dir.empty()) fail(Err::BadConfig, "ingest requires --threads");
    if (!fs::is_directory(cfg.threads_dir))
        fail(Err::IoFailure, cfg.threads_dir + " is not a directory");
    ensure_out_dir(cfg);

    // strand subdirectories when present; otherwise a flat directory with an
    // explicit --strand
    std::vector<std::pair<fs::path, Strand>> files;
    bool any_subdir = false;
    for (const char* name : {"sexist", "racist", "homophobic"}) {
        fs::path sub = fs::path(cfg.threads_dir) / name;
        if (fs::is_directory(sub)) {
            any_subdir = true;
            for (const auto& entry : fs::directory_iterator(sub))
                if (entry.is_regular_file() && entry.path().extension() == ".csv")
                    files.emplace_back(entry.path(), *strand_from_name(name));
        }
    }
    if (!any_subdir) {
        auto strand = strand_from_name(cfg.strand);
        if (!strand)
            fail(Err::BadConfig,
                 "flat thread directory requires --strand sexist|racist|homophobic");
        for (const auto& entry : fs::directory_iterator(cfg.threads_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".csv")
                files.emplace_back(entry.path(), *strand);
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Sidecar sidecar;
    std::vector<Thread> threads;
    for (const auto& [path, strand] : files) {
        try {
            threads.push_back(thread_from_csv(path.string(), path.stem().string(), strand));
        } catch (const Error& e) {
            sidecar.add(path.string(), err_name(e.code()), e.what());
        }
    }
    std::sort(threads.begin(), threads.end(), [](const Thread& a, const Thread& b) {
        if (a.strand != b.strand) return static_cast<int>(a.strand) < static_cast<int>(b.strand);
        return a.thread_id < b.thread_id;
    });

    save_thread_store(threads, out_path(cfg, "threads.jsonl"));
    sidecar.write(out_path(cfg, "ingest_errors.jsonl"));

    CommandResult r;
    r.warning_count = static_cast<long>(sidecar.lines.size());
    std::ostringstream ss;
    ss << "ingested " << threads.size() << " threads from " << files.size() << " files ("
       << sidecar.lines.size() << " rejected)\n";
    if (files.empty()) ss << "warning: no .csv thread files found in " << cfg.threads_dir << "\n";
    r.summary = ss.str();
    return r;
}

namespace {

struct CodesParse {
    CodeSet codes;
};

CodesParse parse_codes(const std::string& field) {
    if (field.empty()) fail(Err::MalformedCodes, "empty codes field");
    CodesParse out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) fail(Err::MalformedCodes, "empty code in '" + field + "'");
        if (cur == "U" || cur == "u") {
            out.codes.insert(kCodeUndecided);
        } else {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(cur, &pos);
            } catch (...) {
                fail(Err::MalformedCodes, "bad code '" + cur + "'");
            }
            if (pos != cur.size() || !valid_code(v) || v == kCodeUndecided)
                fail(Err::MalformedCodes, "bad code '" + cur + "'");
            out.codes.insert(v);
        }
        cur.clear();
    };
    for (char c : field) {
        if (c == ';') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    if (out.codes.count(kCodeUndecided) && out.codes.size() > 1)
        fail(Err::MalformedCodes, "undecided mixed with other codes");
    return out;
}

} // namespace

CommandResult cmd_collate(const RunConfig& cfg) {
    if (cfg.annotations_path.empty()) fail(Err::BadConfig, "collate requires --annotations");
    ensure_out_dir(cfg);

    const auto threads = load_thread_store(out_path(cfg, "threads.jsonl"));
    std::map<std::string, Strand> strand_of_post;
    for (const auto& t : threads)
        for (const auto& p : t.posts) strand_of_post[p.post_id] = t.strand;

    auto rows = read_csv_file(cfg.annotations_path);
    if (rows.empty()) fail(Err::MalformedCsv, "empty annotation file");
    const CsvRow header{"post_id", "annotator_id", "codes"};
    if (rows.front() != header)
        fail(Err::MalformedCsv, "annotation header must be post_id,annotator_id,codes");

    Sidecar sidecar;
    std::vector<AnnotationRecord> records;
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> annotators;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != 3) {
            sidecar.add("row " + std::to_string(i + 1), err_name(Err::MalformedCsv),
                        "expected 3 fields");
            continue;
        }
        if (!strand_of_post.count(row[0])) {
            sidecar.add(row[0], err_name(Err::UnknownPostId), "post not present in thread store");
            continue;
        }
        AnnotationRecord rec;
        rec.post_id = row[0];
        rec.annotator_id = row[1];
        try {
            rec.codes = parse_codes(row[2]).codes;
        } catch (const Error& e) {
            sidecar.add(row[0], err_name(e.code()), e.what());
            continue;
        }
        if (!seen.insert({rec.post_id, rec.annotator_id}).second) {
            sidecar.add(row[0], err_name(Err::DuplicateAnnotation),
                        "duplicate record for annotator " + rec.annotator_id);
            continue;
        }
        annotators.insert(rec.annotator_id);
        records.push_back(std::move(rec));
    }

    const int n_annotators =
        cfg.annotators > 0 ? cfg.annotators : static_cast<int>(annotators.size());
    if (n_annotators < 1) fail(Err::BadConfig, "no annotators found");

    auto tallies = collate(records, n_annotators);

    std::vector<StoredLabel> labels;
    for (const auto& [post_id, tally] : tallies) {
        ConsensusResult res = consensus(post_id, tally, n_annotators, cfg.threshold);
        StoredLabel l;
        l.post_id = post_id;
        l.retained = res.retained;
        l.agreement = res.agreement;
        if (res.retained) {
            l.codes = res.consensus_labels;
            l.conflated = static_cast<int>(conflate(res.consensus_labels));
        }
        labels.push_back(std::move(l));
    }
    std::sort(labels.begin(), labels.end(),
              [](const StoredLabel& a, const StoredLabel& b) { return a.post_id < b.post_id; });
    save_label_store(labels, out_path(cfg, "labels.jsonl"));
    sidecar.write(out_path(cfg, "collate_errors.jsonl"));

    // distribution of retained annotations per strand
    std::map<Strand, std::array<long, kNumClasses>> dist;
    long retained = 0, dropped = 0;
    for (const auto& l : labels) {
        if (!l.retained) {
            ++dropped;
            continue;
        }
        ++retained;
        ++dist[strand_of_post.at(l.post_id)][static_cast<std::size_t>(l.conflated)];
    }

    std::ostringstream table;
    table << "strand\tcyber_hate\tsupport_hate\tdisagree_insult\tgeneral\n";
    for (const auto& [strand, counts] : dist) {
        table << strand_name(strand);
        for (long c : counts) table << '\t' << c;
        table << '\n';
    }
    write_text(out_path(cfg, "distribution.tsv"), table.str());

    CommandResult r;
    r.warning_count = static_cast<long>(sidecar.lines.size());
    std::ostringstream ss;
    ss << "collated " << records.size() << " annotation records from " << n_annotators
       << " annotators; " << retained << " posts retained, " << dropped
       << " dropped (threshold " << cfg.threshold << ")\n\n"
       << table.str();
    r.summary = ss.str();
    return r;
}

namespace {

std::vector<ThreadStats> stats_for_strand(const std::vector<Thread>& threads,
                                          const LabelMap& labels, Strand strand) {
    std::vector<ThreadStats> stats;
    for (const auto& t : threads) {
        if (t.strand != strand) continue;
        Thread filtered = filter_to_labels(t, labels);
        stats.push_back(compute_thread_stats(filtered, labels));
    }
    return stats;
}

} // namespace

CommandResult cmd_regress(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    const auto threads = load_thread_store(out_path(cfg, "threads.jsonl"));
    const auto stored = load_label_store(out_path(cfg, "labels.jsonl"));
    const LabelMap labels = to_label_map(stored);

    std::vector<std::pair<std::string, OlsFit>> fits;
    for (Strand s : selected_strands(cfg)) {
        auto stats = stats_for_strand(threads, labels, s);
        if (stats.empty() && cfg.strand == "all") continue; // strand absent from corpus
        DesignMatrix d = build_design(stats);
        fits.emplace_back(strand_name(s), fit_ols(d));
    }
    if (fits.empty()) fail(Err::EmptyInput, "no threads available for regression");

    std::string table = render_table(fits);
    write_text(out_path(cfg, "regression.txt"), table);
    write_text(out_path(cfg, "regression.tsv"), render_table_tsv(fits));

    CommandResult r;
    r.summary = table;
    return r;
}

namespace {

struct CvRun {
    std::string strand;
    std::string channels;
    EvalReport report;
    std::size_t n_units = 0;
    std::size_t n_skipped = 0;
};

std::string cv_text_report(const std::vector<CvRun>& runs, const RunConfig& cfg) {
    std::ostringstream out;
    out << "10-fold cross-validation report (folds=" << cfg.folds << ", seed=" << cfg.seed
        << ", C=" << cfg.C << ", k=" << cfg.vocab_k << ")\n";
    for (const auto& run : runs) {
        out << "\n== strand " << run.strand << ", channels " << run.channels << " ("
            << run.n_units << " posts";
        if (run.n_skipped > 0) out << ", " << run.n_skipped << " skipped without parses";
        out << ") ==\n";
        out << format_report(run.report);
        out << format_confusion(run.report.confusion);
    }
    return out.str();
}

std::string cv_tsv_report(const std::vector<CvRun>& runs) {
    std::ostringstream out;
    out << "strand\tchannels\tclass\tprecision\trecall\tf1\tsupport\n";
    char buf[200];
    static const char* names[kNumClasses] = {"cyber_hate", "support_hate", "disagree_insult",
                                             "general"};
    for (const auto& run : runs) {
        for (int c = 0; c < kNumClasses; ++c) {
            std::snprintf(buf, sizeof buf, "%s\t%s\t%s\t%.6f\t%.6f\t%.6f\t%ld\n",
                          run.strand.c_str(), run.channels.c_str(), names[c],
                          run.report.precision[c], run.report.recall[c], run.report.f1[c],
                          run.report.support[c]);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "%s\t%s\tweighted\t%.6f\t%.6f\t%.6f\t%ld\n",
                      run.strand.c_str(), run.channels.c_str(), run.report.weighted_precision,
                      run.report.weighted_recall, run.report.weighted_f1, run.report.total);
        out << buf;
    }
    return out.str();
}

} // namespace

CommandResult cmd_cv(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    const auto threads = load_thread_store(out_path(cfg, "threads.jsonl"));
    const auto stored = load_label_store(out_path(cfg, "labels.jsonl"));

    Sidecar sidecar;
    const Lexicon lexicon = maybe_load_lexicon(cfg, sidecar);
    const bool with_lexicon = !cfg.lexicon_path.empty();

    std::vector<std::string> channel_sets = split_csv_list(cfg.channels);
    if (channel_sets.empty()) fail(Err::BadConfig, "no channel sets selected");
    bool needs_parses = false;
    for (const auto& name : channel_sets)
        if (name == "deps" || name == "both") needs_parses = true;
    const auto parses = maybe_load_parses(cfg, needs_parses);

    std::vector<CvRun> runs;
    for (Strand strand : selected_strands(cfg)) {
        auto units = labeled_replies(threads, stored, {strand});
        if (units.empty()) continue;
        for (const auto& name : channel_sets) {
            FeatureParams params = feature_params(cfg, channel_config(name, with_lexicon));
            FeaturizedCorpus corpus = featurize_corpus(units, parses, lexicon, params);
            for (const auto& skipped : corpus.skipped)
                sidecar.add(skipped, err_name(Err::MissingParses),
                            "no parse coverage; post skipped");
            CvParams cv;
            cv.folds = cfg.folds;
            cv.seed = cfg.seed;
            cv.C = cfg.C;
            cv.tol = cfg.svm_tol;
            cv.max_iter = cfg.svm_max_iter;
            CvRun run;
            run.strand = strand_name(strand);
            run.channels = name;
            run.report = run_cv(corpus, cv);
            run.n_units = corpus.labels.size();
            run.n_skipped = corpus.skipped.size();
            runs.push_back(std::move(run));
        }
    }
    if (runs.empty()) fail(Err::EmptyInput, "no labeled posts available for cross-validation");

    std::string text = cv_text_report(runs, cfg);
    write_text(out_path(cfg, "cv_report.txt"), text);
    write_text(out_path(cfg, "cv_report.tsv"), cv_tsv_report(runs));
    sidecar.write(out_path(cfg, "cv_errors.jsonl"));

    CommandResult r;
    r.warning_count = static_cast<long>(sidecar.lines.size());
    r.summary = text;
    return r;
}

CommandResult cmd_train(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    if (cfg.strand == "all")
        fail(Err::BadConfig, "train requires a single --strand (models are per strand)");
    const auto threads = load_thread_store(out_path(cfg, "threads.jsonl"));
    const auto stored = load_label_store(out_path(cfg, "labels.jsonl"));

    Sidecar sidecar;
    const Lexicon lexicon = maybe_load_lexicon(cfg, sidecar);
    const bool with_lexicon = !cfg.lexicon_path.empty();

    std::vector<std::string> channel_sets = split_csv_list(cfg.channels);
    if (channel_sets.size() != 1)
        fail(Err::BadConfig, "train requires exactly one channel set");
    ChannelConfig channels = channel_config(channel_sets.front(), with_lexicon);
    const auto parses = maybe_load_parses(cfg, channels.deps);

    Strand strand = *strand_from_name(cfg.strand);
    auto units = labeled_replies(threads, stored, {strand});
    if (units.empty()) fail(Err::EmptyInput, "no labeled posts for strand " + cfg.strand);

    FeatureParams params = feature_params(cfg, channels);
    FeaturizedCorpus corpus = featurize_corpus(units, parses, lexicon, params);
    for (const auto& skipped : corpus.skipped)
        sidecar.add(skipped, err_name(Err::MissingParses), "no parse coverage; post skipped");

    ModelFile mf;
    mf.strand = cfg.strand;
    mf.channels = channels;
    mf.ngram_word_min = cfg.word_ngram_min;
    mf.ngram_word_max = cfg.word_ngram_max;
    mf.ngram_dep_min = cfg.dep_ngram_min;
    mf.ngram_dep_max = cfg.dep_ngram_max;
    mf.vocab_k = cfg.vocab_k;
    mf.seed = cfg.seed;
    mf.word_vocab = corpus.word_vocab;
    mf.dep_vocab = corpus.dep_vocab;
    for (const auto& phrase : lexicon.phrases) {
        std::string term;
        for (std::size_t i = 0; i < phrase.size(); ++i) {
            if (i) term += ' ';
            term += phrase[i];
        }
        mf.lexicon_terms.push_back(term);
    }
    mf.model = train_full(corpus, cfg.C, cfg.svm_tol, cfg.svm_max_iter);

    std::string path = cfg.model_path.empty()
                           ? out_path(cfg, "model_" + cfg.strand + ".json")
                           : cfg.model_path;
    save_model(mf, path);
    sidecar.write(out_path(cfg, "train_errors.jsonl"));

    CommandResult r;
    r.warning_count = static_cast<long>(sidecar.lines.size());
    std::ostringstream ss;
    ss << "trained model on " << corpus.labels.size() << " posts (dim " << corpus.x.n_cols
       << ") -> " << path << "\n";
    r.summary = ss.str();
    return r;
}

CommandResult cmd_classify(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    if (cfg.model_path.empty()) fail(Err::BadConfig, "classify requires --model");
    if (cfg.input_path.empty()) fail(Err::BadConfig, "classify requires --input");

    ModelFile mf = load_model(cfg.model_path);
    const auto parses = maybe_load_parses(cfg, mf.channels.deps);

    // input: one thread CSV or a directory of them; every post is classified
    std::vector<fs::path> files;
    if (fs::is_directory(cfg.input_path)) {
        for (const auto& entry : fs::directory_iterator(cfg.input_path))
            if (entry.is_regular_file() && entry.path().extension() == ".csv")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else {
        files.emplace_back(cfg.input_path);
    }

    Sidecar sidecar;
    std::vector<LabeledPost> posts;
    for (const auto& path : files) {
        try {
            Thread t = thread_from_csv(path.string(), path.stem().string(), Strand::Sexist);
            for (const auto& p : t.posts) posts.push_back({p.post_id, p.text, 0});
        } catch (const Error& e) {
            sidecar.add(path.string(), err_name(e.code()), e.what());
        }
    }

    VectorizedPosts vp = vectorize_with_model(mf, posts, parses);
    for (const auto& skipped : vp.skipped)
        sidecar.add(skipped, err_name(Err::MissingParses), "no parse coverage; post skipped");

    std::vector<int> predictions = predict_all(mf.model, vp.x);

    std::ostringstream out;
    out << "post_id,predicted_class\n";
    for (std::size_t i = 0; i < predictions.size(); ++i)
        out << format_csv_row({vp.post_ids[i], std::to_string(predictions[i])});
    write_text(out_path(cfg, "predictions.csv"), out.str());
    sidecar.write(out_path(cfg, "classify_errors.jsonl"));

    CommandResult r;
    r.warning_count = static_cast<long>(sidecar.lines.size());
    std::ostringstream ss;
    ss << "classified " << predictions.size() << " posts (" << vp.skipped.size()
       << " skipped) -> " << out_path(cfg, "predictions.csv") << "\n";
    r.summary = ss.str();
    return r;
}

CommandResult cmd_report(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    const auto threads = load_thread_store(out_path(cfg, "threads.jsonl"));
    const auto stored = load_label_store(out_path(cfg, "labels.jsonl"));
    const LabelMap labels = to_label_map(stored);

    std::map<std::string, Strand> strand_of_post;
    for (const auto& t : threads)
        for (const auto& p : t.posts) strand_of_post[p.post_id] = t.strand;

    std::ostringstream out;
    out << "corpus summary\n==============\n";
    std::map<Strand, long> thread_counts;
    for (const auto& t : threads) ++thread_counts[t.strand];
    for (const auto& [strand, count] : thread_counts)
        out << strand_name(strand) << ": " << count << " threads\n";

    std::map<Strand, std::array<long, kNumClasses>> dist;
    long retained = 0, dropped = 0;
    for (const auto& l : stored) {
        if (!l.retained) {
            ++dropped;
            continue;
        }
        auto it = strand_of_post.find(l.post_id);
        if (it == strand_of_post.end()) continue;
        ++retained;
        ++dist[it->second][static_cast<std::size_t>(l.conflated)];
    }
    out << "\nretained annotations: " << retained << " (dropped " << dropped << ")\n";
    out << "strand\tcyber_hate\tsupport_hate\tdisagree_insult\tgeneral\n";
    for (const auto& [strand, counts] : dist) {
        out << strand_name(strand);
        for (long c : counts) out << '\t' << c;
        out << '\n';
    }

    out << "\nthread length model\n===================\n";
    std::vector<std::pair<std::string, OlsFit>> fits;
    for (Strand s : selected_strands(cfg)) {
        auto stats = stats_for_strand(threads, labels, s);
        if (stats.empty()) continue;
        try {
            DesignMatrix d = build_design(stats);
            fits.emplace_back(strand_name(s), fit_ols(d));
        } catch (const Error& e) {
            out << strand_name(s) << ": not fitted (" << e.what() << ")\n";
        }
    }
    if (!fits.empty()) out << render_table(fits);

    write_text(out_path(cfg, "report.txt"), out.str());

    CommandResult r;
    r.summary = out.str();
    return r;
}

} // namespace ct
