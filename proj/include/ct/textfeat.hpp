#pragma once
// Text featurization: tweet tokenization, stemmed word n-grams, typed
// dependency n-grams, hateful-term lexicon counts, vocabulary selection and
// sparse L1-normalized feature vectors.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ct/conllu.hpp"
#include "ct/error.hpp"

namespace ct {

using TokenSequence = std::vector<std::string>;
using NgramCounts = std::map<std::string, long>;

// Lowercase and split on whitespace/punctuation. Internal apostrophes are
// kept, leading '@'/'#' are kept so mentions and hashtags survive as single
// tokens, and URLs collapse to the token "<url>".
TokenSequence tokenize(const std::string& text);

// Snowball stem of a token; mention/hashtag/placeholder tokens (leading
// '@', '#' or '<') pass through unchanged.
std::string stem_token(const std::string& token);

TokenSequence stem_tokens(const TokenSequence& tokens);

// Contiguous n-grams joined by single spaces, n in [n_min, n_max].
NgramCounts word_ngrams(const TokenSequence& tokens, int n_min = 1, int n_max = 5);

// N-grams over rendered dependency units, in sentence order.
NgramCounts dep_ngrams(const std::vector<DepUnit>& units, int n_min = 1, int n_max = 3);

// Fixed n-gram inventory, ordered by descending corpus frequency with
// lexicographic ties, truncated to k entries.
class Vocabulary {
public:
    Vocabulary() = default;

    static Vocabulary build(const NgramCounts& corpus_counts, std::size_t k);

    std::size_t size() const { return entries_.size(); }
    const std::vector<std::string>& entries() const { return entries_; }
    // -1 when the n-gram is out of vocabulary
    int index_of(const std::string& ngram) const;

    static Vocabulary from_entries(std::vector<std::string> entries);

private:
    std::vector<std::string> entries_;
    std::map<std::string, int> index_;
};

struct Lexicon {
    std::vector<TokenSequence> phrases; // tokenized, lowercase, deduplicated
    std::string source;

    bool empty() const { return phrases.empty(); }
    // total phrase occurrences over the raw token sequence (overlaps allowed)
    long count_matches(const TokenSequence& tokens) const;
};

// Newline-delimited term list; '#' lines are comments. Terms are lowercased,
// trimmed and deduplicated. An empty result is allowed (warning-level).
Lexicon load_lexicon(std::istream& in, const std::string& source_tag);
Lexicon load_lexicon_file(const std::string& path);

// Sparse feature vector over the concatenated channel blocks.
struct FeatureVector {
    std::vector<std::pair<int, double>> items; // (column, weight), column-sorted
    int dim = 0;

    double dot(const std::vector<double>& w) const;
};

// Which blocks a vector carries: word n-grams, dependency n-grams, lexicon.
struct ChannelConfig {
    bool words = true;
    bool deps = false;
    bool lexicon = false;
};

// Counts for a single post, one entry per channel.
struct PostCounts {
    NgramCounts word;
    NgramCounts dep;
    long lexicon_matches = 0;
    long token_count = 0;
};

// Restrict each channel's counts to its vocabulary and L1-normalize the
// channel (an all-zero channel stays zero). The lexicon block is a single
// column holding matches / token_count.
FeatureVector vectorize(const PostCounts& counts, const Vocabulary& word_vocab,
                        const Vocabulary& dep_vocab, const ChannelConfig& channels);

// Feature dimension implied by the channel config and vocabularies.
int feature_dim(const Vocabulary& word_vocab, const Vocabulary& dep_vocab,
                const ChannelConfig& channels);

} // namespace ct
