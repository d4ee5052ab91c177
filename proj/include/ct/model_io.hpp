#pragma once
// Versioned on-disk model format: vocabularies, scaling, the four binary
// models and the training configuration snapshot. Save -> load -> save is
// byte-identical.

#include <cstdint>
#include <string>

#include "ct/svm.hpp"
#include "ct/textfeat.hpp"

namespace ct {

constexpr int kModelFormatVersion = 1;

struct ModelFile {
    int format_version = kModelFormatVersion;
    std::string strand;
    ChannelConfig channels;
    int ngram_word_min = 1, ngram_word_max = 5;
    int ngram_dep_min = 1, ngram_dep_max = 3;
    std::size_t vocab_k = 2000;
    std::uint64_t seed = 42;
    Vocabulary word_vocab;
    Vocabulary dep_vocab;
    std::vector<std::string> lexicon_terms; // raw terms, one per phrase
    MulticlassModel model;
};

std::string model_to_string(const ModelFile& m);
ModelFile model_from_string(const std::string& text);

void save_model(const ModelFile& m, const std::string& path);
ModelFile load_model(const std::string& path);

} // namespace ct
