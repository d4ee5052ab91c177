#include "ct/thread.hpp"

#include <algorithm>
#include <unordered_set>

namespace ct {

const char* strand_name(Strand s) {
    switch (s) {
    case Strand::Sexist: return "sexist";
    case Strand::Racist: return "racist";
    case Strand::Homophobic: return "homophobic";
    }
    return "?";
}

std::optional<Strand> strand_from_name(const std::string& name) {
    if (name == "sexist") return Strand::Sexist;
    if (name == "racist") return Strand::Racist;
    if (name == "homophobic") return Strand::Homophobic;
    return std::nullopt;
}

ConflatedClass class_of_code(int code) {
    switch (code) {
    case kCodeHate: return ConflatedClass::CyberHate;
    case kCodeSupport:
    case kCodeSupportEvidence: return ConflatedClass::SupportHate;
    case kCodeDisagree:
    case kCodeInsult:
    case kCodeDisagreeEvidence: return ConflatedClass::DisagreeOrInsult;
    case kCodeGeneral: return ConflatedClass::General;
    default: fail(Err::UnknownCode, "code " + std::to_string(code) + " has no conflated class");
    }
}

StatCategory stat_category(const CodeSet& codes) {
    if (codes.count(kCodeHate)) return StatCategory::Hate;
    if (codes.count(kCodeDisagree) || codes.count(kCodeDisagreeEvidence)) return StatCategory::Disagree;
    if (codes.count(kCodeInsult)) return StatCategory::Insult;
    if (codes.count(kCodeSupport) || codes.count(kCodeSupportEvidence)) return StatCategory::Support;
    return StatCategory::General;
}

Thread assemble_thread(const std::vector<RawPostRecord>& records,
                       const std::string& thread_id, Strand strand) {
    if (records.empty()) fail(Err::EmptyThread, "thread " + thread_id + " has no records");

    std::unordered_set<std::string> ids;
    int sources = 0;
    for (const auto& r : records) {
        if (!ids.insert(r.post_id).second)
            fail(Err::DuplicatePostId, "post " + r.post_id + " in thread " + thread_id);
        if (!r.reply_to) ++sources;
    }
    if (sources == 0) fail(Err::NoSource, "thread " + thread_id + " has no source post");
    if (sources > 1)
        fail(Err::MultipleSources,
             "thread " + thread_id + " has " + std::to_string(sources) + " source posts");

    Thread t;
    t.thread_id = thread_id;
    t.strand = strand;
    t.posts.reserve(records.size());

    auto push = [&t](const RawPostRecord& r) {
        Post p;
        p.post_id = r.post_id;
        p.author = r.author;
        p.text = r.text;
        p.reply_to = r.reply_to;
        p.position = static_cast<int>(t.posts.size());
        t.posts.push_back(std::move(p));
    };

    for (const auto& r : records)
        if (!r.reply_to) push(r);
    for (const auto& r : records)
        if (r.reply_to) push(r);

    std::unordered_set<std::string> seen;
    for (auto& p : t.posts) {
        if (p.reply_to && !seen.count(*p.reply_to)) p.dangling = true;
        seen.insert(p.post_id);
    }
    return t;
}

Thread filter_to_labels(const Thread& thread, const LabelMap& labels) {
    Thread out;
    out.thread_id = thread.thread_id;
    out.strand = thread.strand;
    for (const auto& p : thread.posts) {
        if (!p.reply_to || labels.count(p.post_id)) {
            Post kept = p;
            kept.position = static_cast<int>(out.posts.size());
            out.posts.push_back(std::move(kept));
        }
    }
    return out;
}

ThreadStats compute_thread_stats(const Thread& thread, const LabelMap& labels) {
    if (thread.posts.empty()) fail(Err::EmptyThread, "thread " + thread.thread_id);

    ThreadStats s;
    s.thread_id = thread.thread_id;
    s.strand = thread.strand;
    s.length = static_cast<long>(thread.posts.size());

    const std::string& source_author = thread.posts.front().author;
    std::set<std::string> authors;
    std::set<std::string> hateful_authors;
    std::set<std::string> cs_authors;

    for (size_t i = 0; i < thread.posts.size(); ++i) {
        const Post& p = thread.posts[i];
        authors.insert(p.author);
        if (i == 0) continue; // the source post carries no response label

        auto it = labels.find(p.post_id);
        if (it == labels.end())
            fail(Err::MissingLabel, "reply " + p.post_id + " in thread " + thread.thread_id);

        if (p.author == source_author) ++s.origpostertweets;

        switch (stat_category(it->second.codes)) {
        case StatCategory::Hate:
            ++s.hatecount;
            hateful_authors.insert(p.author);
            break;
        case StatCategory::Disagree:
            ++s.disagree;
            cs_authors.insert(p.author);
            break;
        case StatCategory::Insult:
            ++s.insults;
            cs_authors.insert(p.author);
            break;
        case StatCategory::Support:
            ++s.support;
            break;
        case StatCategory::General:
            break;
        }
    }

    s.uniqcontributors = static_cast<long>(authors.size());
    s.uniqhatefulcontributors = static_cast<long>(hateful_authors.size());
    s.uniqCScontributors = static_cast<long>(cs_authors.size());
    return s;
}

} // namespace ct
