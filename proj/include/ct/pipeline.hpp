#pragma once
// Pipeline glue: turn labeled posts into feature matrices, run stratified
// cross-validation, train final models and classify new posts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ct/conllu.hpp"
#include "ct/eval.hpp"
#include "ct/model_io.hpp"
#include "ct/svm.hpp"
#include "ct/textfeat.hpp"

namespace ct {

struct FeatureParams {
    ChannelConfig channels;
    std::size_t vocab_k = 2000;
    int word_ngram_min = 1, word_ngram_max = 5;
    int dep_ngram_min = 1, dep_ngram_max = 3;
};

// One classification unit: a retained, labeled reply.
struct LabeledPost {
    std::string post_id;
    std::string text;
    int label = 0; // conflated class
};

struct FeaturizedCorpus {
    SparseMatrix x;
    std::vector<int> labels;
    std::vector<std::string> post_ids;
    Vocabulary word_vocab;
    Vocabulary dep_vocab;
    std::vector<std::string> skipped; // posts without parse coverage
};

// Build vocabularies over the corpus and vectorize every post. Posts missing
// parses are skipped (with a record) when the dep channel is active.
FeaturizedCorpus featurize_corpus(const std::vector<LabeledPost>& units,
                                  const std::map<std::string, std::vector<DepUnit>>& parses,
                                  const Lexicon& lexicon, const FeatureParams& params);

// Vectorize posts against the fixed vocabularies of a trained model.
struct VectorizedPosts {
    SparseMatrix x;
    std::vector<std::string> post_ids;
    std::vector<std::string> skipped;
};
VectorizedPosts vectorize_with_model(const ModelFile& model,
                                     const std::vector<LabeledPost>& posts,
                                     const std::map<std::string, std::vector<DepUnit>>& parses);

struct CvParams {
    int folds = 10;
    std::uint64_t seed = 42;
    double C = 1.0;
    double tol = 1e-3;
    int max_iter = 1000;
};

// Stratified k-fold cross-validation: scaling and the four binary models are
// fit per training fold; test-fold predictions accumulate into one confusion
// matrix.
EvalReport run_cv(const FeaturizedCorpus& corpus, const CvParams& params);

MulticlassModel train_full(const FeaturizedCorpus& corpus, double C = 1.0, double tol = 1e-3,
                           int max_iter = 1000);

std::vector<int> predict_all(const MulticlassModel& model, const SparseMatrix& x);

} // namespace ct
