#include "ct/pipeline.hpp"

#include <algorithm>

namespace ct {

namespace {

struct UnitCounts {
    std::string post_id;
    int label = 0;
    PostCounts counts;
};

// shared by corpus featurization and model-based vectorization
std::vector<UnitCounts> count_units(const std::vector<LabeledPost>& units,
                                    const std::map<std::string, std::vector<DepUnit>>& parses,
                                    const Lexicon& lexicon, const FeatureParams& params,
                                    std::vector<std::string>& skipped) {
    std::vector<UnitCounts> out;
    out.reserve(units.size());
    for (const auto& u : units) {
        UnitCounts uc;
        uc.post_id = u.post_id;
        uc.label = u.label;

        TokenSequence raw = tokenize(u.text);
        uc.counts.token_count = static_cast<long>(raw.size());

        if (params.channels.words) {
            TokenSequence stems = stem_tokens(raw);
            uc.counts.word = word_ngrams(stems, params.word_ngram_min, params.word_ngram_max);
        }
        if (params.channels.deps) {
            auto it = parses.find(u.post_id);
            if (it == parses.end()) {
                skipped.push_back(u.post_id);
                continue;
            }
            uc.counts.dep = dep_ngrams(it->second, params.dep_ngram_min, params.dep_ngram_max);
        }
        if (params.channels.lexicon) uc.counts.lexicon_matches = lexicon.count_matches(raw);

        out.push_back(std::move(uc));
    }
    return out;
}

} // namespace

FeaturizedCorpus featurize_corpus(const std::vector<LabeledPost>& units,
                                  const std::map<std::string, std::vector<DepUnit>>& parses,
                                  const Lexicon& lexicon, const FeatureParams& params) {
    FeaturizedCorpus corpus;
    std::vector<UnitCounts> counted =
        count_units(units, parses, lexicon, params, corpus.skipped);

    NgramCounts word_total, dep_total;
    for (const auto& uc : counted) {
        for (const auto& [gram, c] : uc.counts.word) word_total[gram] += c;
        for (const auto& [gram, c] : uc.counts.dep) dep_total[gram] += c;
    }
    if (params.channels.words) corpus.word_vocab = Vocabulary::build(word_total, params.vocab_k);
    if (params.channels.deps) corpus.dep_vocab = Vocabulary::build(dep_total, params.vocab_k);

    corpus.x.n_cols = feature_dim(corpus.word_vocab, corpus.dep_vocab, params.channels);
    for (const auto& uc : counted) {
        FeatureVector fv =
            vectorize(uc.counts, corpus.word_vocab, corpus.dep_vocab, params.channels);
        corpus.x.rows.push_back(std::move(fv.items));
        corpus.labels.push_back(uc.label);
        corpus.post_ids.push_back(uc.post_id);
    }
    return corpus;
}

VectorizedPosts vectorize_with_model(const ModelFile& model,
                                     const std::vector<LabeledPost>& posts,
                                     const std::map<std::string, std::vector<DepUnit>>& parses) {
    FeatureParams params;
    params.channels = model.channels;
    params.vocab_k = model.vocab_k;
    params.word_ngram_min = model.ngram_word_min;
    params.word_ngram_max = model.ngram_word_max;
    params.dep_ngram_min = model.ngram_dep_min;
    params.dep_ngram_max = model.ngram_dep_max;

    Lexicon lex;
    for (const auto& term : model.lexicon_terms) {
        TokenSequence phrase = tokenize(term);
        if (!phrase.empty()) lex.phrases.push_back(std::move(phrase));
    }

    VectorizedPosts out;
    std::vector<UnitCounts> counted = count_units(posts, parses, lex, params, out.skipped);
    out.x.n_cols = feature_dim(model.word_vocab, model.dep_vocab, model.channels);
    for (const auto& uc : counted) {
        FeatureVector fv = vectorize(uc.counts, model.word_vocab, model.dep_vocab, model.channels);
        out.x.rows.push_back(std::move(fv.items));
        out.post_ids.push_back(uc.post_id);
    }
    return out;
}

EvalReport run_cv(const FeaturizedCorpus& corpus, const CvParams& params) {
    const auto folds = kfold_stratified(corpus.labels, params.folds, params.seed);

    std::vector<int> gold, predicted;
    gold.reserve(corpus.labels.size());
    predicted.reserve(corpus.labels.size());

    std::vector<char> in_test(corpus.labels.size(), 0);
    for (const auto& test_fold : folds) {
        std::fill(in_test.begin(), in_test.end(), 0);
        for (int i : test_fold) in_test[i] = 1;

        SparseMatrix x_train;
        x_train.n_cols = corpus.x.n_cols;
        std::vector<int> y_train;
        for (std::size_t i = 0; i < corpus.labels.size(); ++i) {
            if (!in_test[i]) {
                x_train.rows.push_back(corpus.x.rows[i]);
                y_train.push_back(corpus.labels[i]);
            }
        }

        MulticlassModel model =
            train_ovr(x_train, y_train, params.C, params.tol, params.max_iter);
        for (int i : test_fold) {
            gold.push_back(corpus.labels[i]);
            predicted.push_back(predict(model, corpus.x.rows[i]));
        }
    }
    return evaluate(gold, predicted);
}

MulticlassModel train_full(const FeaturizedCorpus& corpus, double C, double tol, int max_iter) {
    return train_ovr(corpus.x, corpus.labels, C, tol, max_iter);
}

std::vector<int> predict_all(const MulticlassModel& model, const SparseMatrix& x) {
    std::vector<int> out;
    out.reserve(x.rows.size());
    for (const auto& row : x.rows) out.push_back(predict(model, row));
    return out;
}

} // namespace ct
