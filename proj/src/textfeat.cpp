#include "ct/textfeat.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ct/stemmer.hpp"

namespace ct {
namespace {

bool is_word_char(unsigned char c) {
    // bytes >= 0x80 belong to multi-byte UTF-8 sequences and stay in-token
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

char lower_ascii(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

bool url_starts_at(const std::string& text, std::size_t i) {
    static const char* prefixes[] = {"http://", "https://", "www."};
    for (const char* p : prefixes) {
        std::size_t len = std::char_traits<char>::length(p);
        if (i + len > text.size()) continue;
        bool match = true;
        for (std::size_t j = 0; j < len; ++j)
            if (lower_ascii(static_cast<unsigned char>(text[i + j])) != p[j]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

} // namespace

TokenSequence tokenize(const std::string& text) {
    TokenSequence tokens;
    std::string cur;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto flush = [&]() {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };

    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (cur.empty() && url_starts_at(text, i)) {
            while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back("<url>");
            continue;
        }
        if (is_word_char(c)) {
            cur.push_back(lower_ascii(c));
            ++i;
            continue;
        }
        if ((c == '@' || c == '#') && cur.empty() && i + 1 < n &&
            is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            cur.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        if (c == '\'' && !cur.empty() && is_word_char(static_cast<unsigned char>(cur.back())) &&
            i + 1 < n && is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            cur.push_back('\'');
            ++i;
            continue;
        }
        flush();
        ++i;
    }
    flush();
    return tokens;
}

std::string stem_token(const std::string& token) {
    if (!token.empty() && (token[0] == '@' || token[0] == '#' || token[0] == '<')) return token;
    return porter2_stem(token);
}

TokenSequence stem_tokens(const TokenSequence& tokens) {
    TokenSequence out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(stem_token(t));
    return out;
}

NgramCounts word_ngrams(const TokenSequence& tokens, int n_min, int n_max) {
    if (n_min > n_max) fail(Err::BadConfig, "n_min exceeds n_max");
    NgramCounts counts;
    const int n = static_cast<int>(tokens.size());
    for (int len = n_min; len <= n_max; ++len) {
        for (int start = 0; start + len <= n; ++start) {
            std::string gram = tokens[start];
            for (int j = 1; j < len; ++j) {
                gram += ' ';
                gram += tokens[start + j];
            }
            ++counts[gram];
        }
    }
    return counts;
}

NgramCounts dep_ngrams(const std::vector<DepUnit>& units, int n_min, int n_max) {
    TokenSequence rendered;
    rendered.reserve(units.size());
    for (const auto& u : units) rendered.push_back(u.rendered());
    return word_ngrams(rendered, n_min, n_max);
}

Vocabulary Vocabulary::build(const NgramCounts& corpus_counts, std::size_t k) {
    if (k < 1) fail(Err::BadConfig, "vocabulary size must be >= 1");

    std::vector<std::pair<std::string, long>> items(corpus_counts.begin(), corpus_counts.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > k) items.resize(k);

    std::vector<std::string> entries;
    entries.reserve(items.size());
    for (auto& [gram, count] : items) {
        (void)count;
        entries.push_back(std::move(gram));
    }
    return from_entries(std::move(entries));
}

Vocabulary Vocabulary::from_entries(std::vector<std::string> entries) {
    Vocabulary v;
    v.entries_ = std::move(entries);
    for (std::size_t i = 0; i < v.entries_.size(); ++i)
        v.index_[v.entries_[i]] = static_cast<int>(i);
    return v;
}

int Vocabulary::index_of(const std::string& ngram) const {
    auto it = index_.find(ngram);
    return it == index_.end() ? -1 : it->second;
}

long Lexicon::count_matches(const TokenSequence& tokens) const {
    long total = 0;
    for (const auto& phrase : phrases) {
        if (phrase.empty() || phrase.size() > tokens.size()) continue;
        for (std::size_t start = 0; start + phrase.size() <= tokens.size(); ++start) {
            bool match = true;
            for (std::size_t j = 0; j < phrase.size(); ++j)
                if (tokens[start + j] != phrase[j]) {
                    match = false;
                    break;
                }
            if (match) ++total;
        }
    }
    return total;
}

Lexicon load_lexicon(std::istream& in, const std::string& source_tag) {
    Lexicon lex;
    lex.source = source_tag;
    std::set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t");
        std::string term = line.substr(a, b - a + 1);
        if (term.empty() || term[0] == '#') continue;
        for (char& c : term) c = lower_ascii(static_cast<unsigned char>(c));
        if (!seen.insert(term).second) continue;
        TokenSequence phrase = tokenize(term);
        if (!phrase.empty()) lex.phrases.push_back(std::move(phrase));
    }
    return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::IoFailure, "cannot open lexicon file " + path);
    return load_lexicon(in, path);
}

double FeatureVector::dot(const std::vector<double>& w) const {
    double s = 0.0;
    for (const auto& [col, val] : items)
        if (col < static_cast<int>(w.size())) s += w[col] * val;
    return s;
}

int feature_dim(const Vocabulary& word_vocab, const Vocabulary& dep_vocab,
                const ChannelConfig& channels) {
    int dim = 0;
    if (channels.words) dim += static_cast<int>(word_vocab.size());
    if (channels.deps) dim += static_cast<int>(dep_vocab.size());
    if (channels.lexicon) dim += 1;
    return dim;
}

namespace {

void add_channel(std::vector<std::pair<int, double>>& items, const NgramCounts& counts,
                 const Vocabulary& vocab, int offset) {
    std::vector<std::pair<int, long>> hits;
    long total = 0;
    for (const auto& [gram, count] : counts) {
        int idx = vocab.index_of(gram);
        if (idx < 0) continue;
        hits.emplace_back(offset + idx, count);
        total += count;
    }
    if (total == 0) return;
    std::sort(hits.begin(), hits.end());
    for (const auto& [col, count] : hits)
        items.emplace_back(col, static_cast<double>(count) / static_cast<double>(total));
}

} // namespace

FeatureVector vectorize(const PostCounts& counts, const Vocabulary& word_vocab,
                        const Vocabulary& dep_vocab, const ChannelConfig& channels) {
    FeatureVector fv;
    int offset = 0;
    if (channels.words) {
        add_channel(fv.items, counts.word, word_vocab, offset);
        offset += static_cast<int>(word_vocab.size());
    }
    if (channels.deps) {
        add_channel(fv.items, counts.dep, dep_vocab, offset);
        offset += static_cast<int>(dep_vocab.size());
    }
    if (channels.lexicon) {
        if (counts.lexicon_matches > 0 && counts.token_count > 0)
            fv.items.emplace_back(offset, static_cast<double>(counts.lexicon_matches) /
                                              static_cast<double>(counts.token_count));
        offset += 1;
    }
    fv.dim = offset;
    return fv;
}

} // namespace ct
