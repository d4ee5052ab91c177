#include "ct/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ct {

using nlohmann::json;

std::string model_to_string(const ModelFile& m) {
    json j;
    j["format_version"] = m.format_version;
    j["strand"] = m.strand;
    j["channels"]["words"] = m.channels.words;
    j["channels"]["deps"] = m.channels.deps;
    j["channels"]["lexicon"] = m.channels.lexicon;
    j["ngram_word"] = {m.ngram_word_min, m.ngram_word_max};
    j["ngram_dep"] = {m.ngram_dep_min, m.ngram_dep_max};
    j["vocab_k"] = m.vocab_k;
    j["seed"] = m.seed;
    j["C"] = m.model.C;
    j["gamma"] = m.model.gamma_meta; // recorded; unused with the linear kernel
    j["word_vocab"] = m.word_vocab.entries();
    j["dep_vocab"] = m.dep_vocab.entries();
    j["lexicon_terms"] = m.lexicon_terms;
    j["scaling"]["min"] = m.model.scaling.mins;
    j["scaling"]["max"] = m.model.scaling.maxs;
    json models = json::array();
    for (const auto& lm : m.model.models) {
        json jm;
        jm["present"] = lm.present;
        jm["bias"] = lm.bias;
        jm["iterations"] = lm.iterations;
        jm["dual_objective"] = lm.dual_objective;
        jm["weights"] = lm.weights;
        models.push_back(std::move(jm));
    }
    j["models"] = std::move(models);
    return j.dump(2) + "\n";
}

ModelFile model_from_string(const std::string& text) {
    json j = json::parse(text);
    int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion)
        fail(Err::VersionMismatch, "model format_version " + std::to_string(version) +
                                       ", expected " + std::to_string(kModelFormatVersion));
    ModelFile m;
    m.format_version = version;
    m.strand = j.at("strand").get<std::string>();
    m.channels.words = j.at("channels").at("words").get<bool>();
    m.channels.deps = j.at("channels").at("deps").get<bool>();
    m.channels.lexicon = j.at("channels").at("lexicon").get<bool>();
    m.ngram_word_min = j.at("ngram_word")[0].get<int>();
    m.ngram_word_max = j.at("ngram_word")[1].get<int>();
    m.ngram_dep_min = j.at("ngram_dep")[0].get<int>();
    m.ngram_dep_max = j.at("ngram_dep")[1].get<int>();
    m.vocab_k = j.at("vocab_k").get<std::size_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.model.C = j.at("C").get<double>();
    m.model.gamma_meta = j.at("gamma").get<double>();
    m.word_vocab = Vocabulary::from_entries(j.at("word_vocab").get<std::vector<std::string>>());
    m.dep_vocab = Vocabulary::from_entries(j.at("dep_vocab").get<std::vector<std::string>>());
    m.lexicon_terms = j.at("lexicon_terms").get<std::vector<std::string>>();
    m.model.scaling.mins = j.at("scaling").at("min").get<std::vector<double>>();
    m.model.scaling.maxs = j.at("scaling").at("max").get<std::vector<double>>();
    const auto& models = j.at("models");
    if (models.size() != kNumClasses)
        fail(Err::VersionMismatch, "model file must contain exactly 4 binary models");
    for (int c = 0; c < kNumClasses; ++c) {
        LinearModel& lm = m.model.models[c];
        lm.present = models[c].at("present").get<bool>();
        lm.bias = models[c].at("bias").get<double>();
        lm.iterations = models[c].at("iterations").get<int>();
        lm.dual_objective = models[c].at("dual_objective").get<double>();
        lm.weights = models[c].at("weights").get<std::vector<double>>();
        lm.C = m.model.C;
    }
    return m;
}

void save_model(const ModelFile& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::IoFailure, "cannot write " + path);
    out << model_to_string(m);
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoFailure, "cannot open model file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return model_from_string(ss.str());
}

} // namespace ct
