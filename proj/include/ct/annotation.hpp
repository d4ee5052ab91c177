#pragma once
// Collation of independent annotators' labels, the per-label agreement
// filter, and conflation of raw codes into the four analysis classes.

#include <map>
#include <string>
#include <vector>

#include "ct/thread.hpp"

namespace ct {

struct AnnotationRecord {
    std::string post_id;
    std::string annotator_id;
    CodeSet codes; // non-empty; undecided may not co-occur with other codes
};

// tally[code] = number of annotators who assigned the code to the post
using CodeTally = std::map<int, int>;

struct ConsensusResult {
    std::string post_id;
    CodeSet consensus_labels;          // codes meeting the agreement threshold
    bool retained = false;             // non-empty consensus without undecided
    std::map<int, double> agreement;   // per-label fraction of annotators
};

// Count, per post, how many annotators assigned each code. Each
// (post, annotator) pair may appear at most once.
std::map<std::string, CodeTally> collate(const std::vector<AnnotationRecord>& records,
                                         int n_annotators);

// Apply the agreement threshold (inclusive) to one post's tally.
ConsensusResult consensus(const std::string& post_id, const CodeTally& tally,
                          int n_annotators, double threshold = 0.75);

// Collapse a consensus code set into a single analysis class. Conflicts
// resolve by priority CyberHate > DisagreeOrInsult > SupportHate > General.
ConflatedClass conflate(const CodeSet& codes);

} // namespace ct
