#pragma once
// Domain model for conversation threads: posts, strands, annotation codes,
// conflated classes, and per-thread interaction statistics.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ct/error.hpp"

namespace ct {

// Strand of bias a thread was sampled for.
enum class Strand { Sexist, Racist, Homophobic };

const char* strand_name(Strand s);
std::optional<Strand> strand_from_name(const std::string& name);

// Raw annotation codes. Code text follows the annotation scheme: a reply can
// itself be hateful, support the source, disagree with it, insult, carry
// evidence either way, or be a general response. -1 is the undecided sentinel.
constexpr int kCodeHate = 0;
constexpr int kCodeSupport = 1;
constexpr int kCodeDisagree = 2;
constexpr int kCodeInsult = 3;
constexpr int kCodeSupportEvidence = 4;
constexpr int kCodeDisagreeEvidence = 5;
constexpr int kCodeGeneral = 6;
constexpr int kCodeUndecided = -1;

inline bool valid_code(int c) { return c == kCodeUndecided || (c >= 0 && c <= 6); }

using CodeSet = std::set<int>;

// The four analysis classes the raw codes conflate into.
enum class ConflatedClass : int {
    CyberHate = 0,
    SupportHate = 1,
    DisagreeOrInsult = 2,
    General = 3,
};

constexpr int kNumClasses = 4;

// Class a single raw code maps to. Undecided has no class.
ConflatedClass class_of_code(int code);

struct Post {
    std::string post_id;
    std::string author;
    std::string text;
    std::optional<std::string> reply_to; // absent for the source post
    int position = 0;                    // 0-based index in thread order
    bool dangling = false;               // reply_to did not resolve to an earlier post
};

struct Thread {
    std::string thread_id;
    Strand strand = Strand::Sexist;
    std::vector<Post> posts; // posts[0] is the source
};

struct RawPostRecord {
    std::string post_id;
    std::string author;
    std::optional<std::string> reply_to;
    std::string text;
};

// Consensus label attached to one reply: the agreed raw codes plus the
// conflated class they collapse to.
struct ReplyLabel {
    CodeSet codes;                // consensus raw codes, no undecided
    ConflatedClass conflated = ConflatedClass::General;
};

using LabelMap = std::map<std::string, ReplyLabel>;

// The 8 regressors plus thread length for one thread.
struct ThreadStats {
    std::string thread_id;
    Strand strand = Strand::Sexist;
    long length = 0;            // all retained posts, including the source
    long hatecount = 0;         // hateful replies
    long support = 0;           // supporting replies
    long disagree = 0;          // disagreeing replies
    long insults = 0;           // insulting replies
    long uniqcontributors = 0;  // distinct authors, source included
    long origpostertweets = 0;  // replies authored by the source author
    long uniqhatefulcontributors = 0;
    long uniqCScontributors = 0;
};

// Bucket a reply's consensus codes into exactly one of the four response
// counts. A multi-label reply is counted once, highest-priority bucket wins;
// priority mirrors the conflation order (hate > counter-speech > support),
// with disagreement ahead of insult inside the counter-speech class.
enum class StatCategory { Hate, Disagree, Insult, Support, General };
StatCategory stat_category(const CodeSet& codes);

// Build a Thread from raw per-file records. Records keep file order, except
// the source post is moved to the front. A reply_to that does not reference
// an earlier post is flagged dangling and retained.
Thread assemble_thread(const std::vector<RawPostRecord>& records,
                       const std::string& thread_id, Strand strand);

// Drop replies that have no retained label. The source post is always kept.
Thread filter_to_labels(const Thread& thread, const LabelMap& labels);

// Derive interaction statistics. Every reply in the thread must have a label
// entry; posts removed by the consensus filter are expected to have been
// dropped beforehand (see filter_to_labels).
ThreadStats compute_thread_stats(const Thread& thread, const LabelMap& labels);

} // namespace ct
