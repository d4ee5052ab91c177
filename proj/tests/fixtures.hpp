#pragma once
// Seeded synthetic fixtures: a planted 4-class post corpus with matching
// CoNLL-U parses, planted-relation thread statistics, and random threads for
// property tests.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ct/conllu.hpp"
#include "ct/pipeline.hpp"
#include "ct/thread.hpp"

namespace ctt {

struct SynthCorpus {
    std::vector<ct::LabeledPost> units;
    std::string conllu_text;
    std::map<std::string, std::vector<ct::DepUnit>> parses;
};

// Posts with class-specific token distributions; labels 0..3. The parses are
// synthetic head-chains over the same tokens, keyed by post_id.
SynthCorpus make_classification_corpus(int n_posts, std::uint64_t seed);

// ThreadStats with length = 2*disagree - uniqCScontributors
// + uniqcontributors + 5 exactly; tests add noise to the design's y.
std::vector<ct::ThreadStats> make_planted_stats(int n, std::uint64_t seed);

// Random labeled thread for property tests: returns the thread plus a label
// for every reply.
struct RandomThread {
    ct::Thread thread;
    ct::LabelMap labels;
};
RandomThread make_random_thread(std::uint64_t seed, int max_replies = 20);

// Random full-rank regression design (8 predictors + intercept).
ct::DesignMatrix make_random_design(std::size_t n, std::uint64_t seed);

// Random small binary SVM problem with both labels present.
struct BinaryProblem {
    ct::SparseMatrix x;
    std::vector<int> y;
};
BinaryProblem make_binary_problem(int n, int dim, std::uint64_t seed);

} // namespace ctt
