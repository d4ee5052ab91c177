#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ct/annotation.hpp"
#include "ct/textfeat.hpp"

namespace ctt {

namespace {

const std::vector<std::string> kShared = {
    "the", "a",    "to",  "you", "and",  "is",   "it",  "of",   "in",  "for",
    "on",  "this", "that", "are", "be",  "with", "at",  "as",   "have", "was",
    "but", "not",  "so",  "all", "can",  "will", "just", "what", "how",  "who"};

const std::vector<std::vector<std::string>> kClassPools = {
    // cyber hate
    {"vile", "scum", "pests", "filth", "garbage", "trash", "loathsome", "disgusting",
     "inferior", "worthless", "parasites", "vermin", "invaders", "degenerates", "savages",
     "freaks", "idiots", "morons", "losers", "rejects", "animals", "plague", "infestation",
     "repulsive", "detestable"},
    // support for hate
    {"agreed", "exactly", "truth", "finally", "brave", "honest", "preach", "based",
     "correct", "courage", "respect", "salute", "legend", "hero", "facts", "valid",
     "sensible", "reasonable", "applaud", "admire", "endorse", "supporting", "defend",
     "spoken", "champion"},
    // disagreement / insults (counter-speech)
    {"disgrace", "shameful", "wrong", "hateful", "bigot", "offensive", "apologize",
     "delete", "reported", "unacceptable", "appalling", "disgusted", "horrible", "cruel",
     "ignorant", "ashamed", "blocked", "vicious", "despicable", "challenge", "condemn",
     "reject", "oppose", "denounce", "shame"},
    // general response
    {"weather", "lunch", "game", "movie", "song", "coffee", "morning", "train", "traffic",
     "birthday", "holiday", "photo", "recipe", "garden", "football", "meeting", "weekend",
     "newspaper", "podcast", "episode", "concert", "ticket", "journey", "breakfast",
     "evening"}};

const std::vector<std::string> kRelations = {"nsubj", "obj",  "amod", "advmod",
                                             "obl",   "nmod", "conj"};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

SynthCorpus make_classification_corpus(int n_posts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(8, 16);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // class priors roughly matching an imbalanced annotation distribution
    const double priors[4] = {0.35, 0.20, 0.15, 0.30};

    SynthCorpus corpus;
    std::ostringstream conllu;
    for (int i = 0; i < n_posts; ++i) {
        double u = unif(rng);
        int label = 3;
        double acc = 0.0;
        for (int c = 0; c < 4; ++c) {
            acc += priors[c];
            if (u < acc) {
                label = c;
                break;
            }
        }

        const auto& pool = kClassPools[label];
        int len = len_dist(rng);
        std::ostringstream text;
        for (int t = 0; t < len; ++t) {
            if (t) text << ' ';
            double roll = unif(rng);
            if (roll < 0.60) {
                text << pool[rng() % pool.size()];
            } else if (roll < 0.92) {
                text << kShared[rng() % kShared.size()];
            } else if (roll < 0.95) {
                text << "@user" << rng() % 40;
            } else if (roll < 0.98) {
                text << "#tag" << rng() % 25;
            } else {
                text << "http://example.org/p" << rng() % 100;
            }
        }

        ct::LabeledPost post;
        post.post_id = "p" + std::to_string(100000 + i);
        post.text = text.str();
        post.label = label;

        // synthetic parse: a head-chain over the post's tokens
        ct::TokenSequence tokens = ct::tokenize(post.text);
        conllu << "# post_id = " << post.post_id << '\n';
        for (std::size_t t = 0; t < tokens.size(); ++t) {
            long head = t == 0 ? 0 : static_cast<long>(t);
            std::string rel =
                t == 0 ? "root" : kRelations[fnv1a(tokens[t]) % kRelations.size()];
            conllu << (t + 1) << '\t' << tokens[t] << "\t_\t_\t_\t_\t" << head << '\t' << rel
                   << "\t_\t_\n";
        }
        conllu << '\n';
        corpus.units.push_back(std::move(post));
    }

    corpus.conllu_text = conllu.str();
    std::istringstream in(corpus.conllu_text);
    corpus.parses = ct::index_by_post(ct::parse_conllu(in));
    return corpus;
}

std::vector<ct::ThreadStats> make_planted_stats(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ct::ThreadStats> stats;
    stats.reserve(n);
    for (int i = 0; i < n; ++i) {
        ct::ThreadStats s;
        s.thread_id = "t" + std::to_string(i);
        s.strand = ct::Strand::Sexist;
        s.disagree = static_cast<long>(rng() % 11);
        s.insults = static_cast<long>(rng() % 4);
        s.hatecount = static_cast<long>(rng() % 5);
        s.support = static_cast<long>(rng() % 4);
        s.uniqcontributors = 1 + static_cast<long>(rng() % 14);
        s.origpostertweets = static_cast<long>(rng() % 5);
        s.uniqhatefulcontributors = std::min(s.hatecount, s.uniqcontributors);
        s.uniqCScontributors = std::min<long>(static_cast<long>(rng() % 6), s.uniqcontributors);
        s.length = 2 * s.disagree - s.uniqCScontributors + s.uniqcontributors + 5;
        stats.push_back(std::move(s));
    }
    return stats;
}

RandomThread make_random_thread(std::uint64_t seed, int max_replies) {
    std::mt19937_64 rng(seed);
    RandomThread out;
    out.thread.thread_id = "rt" + std::to_string(seed);
    out.thread.strand = static_cast<ct::Strand>(rng() % 3);

    int n_authors = 2 + static_cast<int>(rng() % 6);
    auto author = [&](int k) { return "author" + std::to_string(k); };

    ct::Post source;
    source.post_id = "s0";
    source.author = author(0);
    source.text = "source post";
    source.position = 0;
    out.thread.posts.push_back(source);

    int n_replies = static_cast<int>(rng() % (max_replies + 1));
    for (int i = 1; i <= n_replies; ++i) {
        ct::Post p;
        p.post_id = "r" + std::to_string(i);
        p.author = author(static_cast<int>(rng() % n_authors));
        p.text = "reply " + std::to_string(i);
        p.reply_to = out.thread.posts[rng() % out.thread.posts.size()].post_id;
        p.position = static_cast<int>(out.thread.posts.size());
        out.thread.posts.push_back(p);

        ct::ReplyLabel label;
        int n_codes = 1 + static_cast<int>(rng() % 2);
        for (int c = 0; c < n_codes; ++c) label.codes.insert(static_cast<int>(rng() % 7));
        label.conflated = ct::conflate(label.codes);
        out.labels[p.post_id] = std::move(label);
    }
    return out;
}

ct::DesignMatrix make_random_design(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    ct::DesignMatrix d;
    d.names = ct::kPredictorNames;
    d.names.push_back("cons");
    d.nrows = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < d.names.size(); ++j) d.x.push_back(normal(rng));
        d.x.push_back(1.0);
        d.y.push_back(normal(rng) * 2.0 + 1.0);
    }
    return d;
}

BinaryProblem make_binary_problem(int n, int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    BinaryProblem p;
    p.x.n_cols = dim;
    p.y.resize(n);
    for (int i = 0; i < n; ++i) {
        // guarantee both labels
        p.y[i] = i < 2 ? (i == 0 ? 1 : -1) : (rng() % 2 == 0 ? 1 : -1);
        ct::SparseRow row;
        double shift = p.y[i] * 0.5; // mild separation so problems are non-trivial
        for (int j = 0; j < dim; ++j) {
            double v = normal(rng) + shift;
            if (std::abs(v) > 0.2) row.emplace_back(j, v);
        }
        p.x.rows.push_back(std::move(row));
    }
    return p;
}

} // namespace ctt
