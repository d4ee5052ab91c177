#include "ct/stores.hpp"

#include <fstream>

#include <json.hpp>

namespace ct {

using nlohmann::json;

std::string thread_to_json(const Thread& t) {
    json posts = json::array();
    for (const auto& p : t.posts) {
        json jp;
        jp["post_id"] = p.post_id;
        jp["author"] = p.author;
        jp["text"] = p.text;
        if (p.reply_to) jp["reply_to"] = *p.reply_to;
        else jp["reply_to"] = nullptr;
        jp["dangling"] = p.dangling;
        posts.push_back(std::move(jp));
    }
    json j;
    j["thread_id"] = t.thread_id;
    j["strand"] = strand_name(t.strand);
    j["posts"] = std::move(posts);
    return j.dump();
}

Thread thread_from_json(const std::string& line) {
    json j = json::parse(line);
    Thread t;
    t.thread_id = j.at("thread_id").get<std::string>();
    auto strand = strand_from_name(j.at("strand").get<std::string>());
    if (!strand) fail(Err::MalformedCsv, "unknown strand in thread store");
    t.strand = *strand;
    int pos = 0;
    for (const auto& jp : j.at("posts")) {
        Post p;
        p.post_id = jp.at("post_id").get<std::string>();
        p.author = jp.at("author").get<std::string>();
        p.text = jp.at("text").get<std::string>();
        if (!jp.at("reply_to").is_null()) p.reply_to = jp.at("reply_to").get<std::string>();
        p.dangling = jp.at("dangling").get<bool>();
        p.position = pos++;
        t.posts.push_back(std::move(p));
    }
    return t;
}

void save_thread_store(const std::vector<Thread>& threads, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::IoFailure, "cannot write " + path);
    for (const auto& t : threads) out << thread_to_json(t) << '\n';
}

std::vector<Thread> load_thread_store(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoFailure, "cannot open thread store " + path);
    std::vector<Thread> threads;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        threads.push_back(thread_from_json(line));
    }
    return threads;
}

std::string label_to_json(const StoredLabel& l) {
    json j;
    j["post_id"] = l.post_id;
    j["retained"] = l.retained;
    j["codes"] = l.codes;
    if (l.conflated >= 0) j["class"] = l.conflated;
    else j["class"] = nullptr;
    json agreement = json::object();
    for (const auto& [code, frac] : l.agreement) agreement[std::to_string(code)] = frac;
    j["agreement"] = std::move(agreement);
    return j.dump();
}

StoredLabel label_from_json(const std::string& line) {
    json j = json::parse(line);
    StoredLabel l;
    l.post_id = j.at("post_id").get<std::string>();
    l.retained = j.at("retained").get<bool>();
    for (const auto& c : j.at("codes")) l.codes.insert(c.get<int>());
    if (!j.at("class").is_null()) l.conflated = j.at("class").get<int>();
    for (const auto& [key, val] : j.at("agreement").items())
        l.agreement[std::stoi(key)] = val.get<double>();
    return l;
}

void save_label_store(const std::vector<StoredLabel>& labels, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::IoFailure, "cannot write " + path);
    for (const auto& l : labels) out << label_to_json(l) << '\n';
}

std::vector<StoredLabel> load_label_store(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoFailure, "cannot open label store " + path);
    std::vector<StoredLabel> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        labels.push_back(label_from_json(line));
    }
    return labels;
}

LabelMap to_label_map(const std::vector<StoredLabel>& labels) {
    LabelMap map;
    for (const auto& l : labels) {
        if (!l.retained) continue;
        ReplyLabel rl;
        rl.codes = l.codes;
        rl.conflated = static_cast<ConflatedClass>(l.conflated);
        map[l.post_id] = std::move(rl);
    }
    return map;
}

} // namespace ct
