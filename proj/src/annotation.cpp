#include "ct/annotation.hpp"

#include <set>

namespace ct {

std::map<std::string, CodeTally> collate(const std::vector<AnnotationRecord>& records,
                                         int n_annotators) {
    if (n_annotators < 1) fail(Err::BadConfig, "n_annotators must be >= 1");

    std::map<std::string, CodeTally> tallies;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& rec : records) {
        if (rec.codes.empty())
            fail(Err::MalformedCodes, "empty code set for post " + rec.post_id);
        if (rec.codes.count(kCodeUndecided) && rec.codes.size() > 1)
            fail(Err::MalformedCodes,
                 "undecided mixed with other codes for post " + rec.post_id);
        if (!seen.insert({rec.post_id, rec.annotator_id}).second)
            fail(Err::DuplicateAnnotation,
                 "post " + rec.post_id + " annotated twice by " + rec.annotator_id);
        for (int code : rec.codes) {
            if (!valid_code(code))
                fail(Err::UnknownCode, "code " + std::to_string(code) + " on post " + rec.post_id);
            ++tallies[rec.post_id][code];
        }
    }
    return tallies;
}

ConsensusResult consensus(const std::string& post_id, const CodeTally& tally,
                          int n_annotators, double threshold) {
    ConsensusResult r;
    r.post_id = post_id;
    for (const auto& [code, count] : tally) {
        double frac = static_cast<double>(count) / n_annotators;
        r.agreement[code] = frac;
        // inclusive at the boundary: count/n == threshold is kept
        if (static_cast<double>(count) >= threshold * n_annotators - 1e-9)
            r.consensus_labels.insert(code);
    }
    r.retained = !r.consensus_labels.empty() && !r.consensus_labels.count(kCodeUndecided);
    return r;
}

ConflatedClass conflate(const CodeSet& codes) {
    if (codes.empty()) fail(Err::EmptyCodeSet, "cannot conflate an empty code set");

    std::set<ConflatedClass> classes;
    for (int code : codes) classes.insert(class_of_code(code));

    if (classes.count(ConflatedClass::CyberHate)) return ConflatedClass::CyberHate;
    if (classes.count(ConflatedClass::DisagreeOrInsult)) return ConflatedClass::DisagreeOrInsult;
    if (classes.count(ConflatedClass::SupportHate)) return ConflatedClass::SupportHate;
    return ConflatedClass::General;
}

} // namespace ct
