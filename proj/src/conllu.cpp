#include "ct/conllu.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ct {
namespace {

std::string lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cols.push_back(line.substr(start));
            break;
        }
        cols.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return cols;
}

struct TokenRow {
    long id = 0;
    std::string form;
    long head = 0;
    std::string deprel;
};

void finish_sentence(std::vector<TokenRow>& rows, std::string& post_id,
                     std::vector<ParsedSentence>& out) {
    if (rows.empty()) {
        post_id.clear();
        return;
    }
    ParsedSentence sent;
    sent.post_id = post_id;
    std::map<long, std::string> form_by_id;
    for (const auto& r : rows) form_by_id[r.id] = r.form;
    for (const auto& r : rows) {
        if (r.head != 0 && !form_by_id.count(r.head))
            fail(Err::HeadOutOfRange, "HEAD " + std::to_string(r.head) + " for token " + r.form);
        DepUnit u;
        u.relation = r.deprel;
        u.governor = r.head == 0 ? "ROOT" : form_by_id[r.head];
        u.dependent = r.form;
        sent.units.push_back(std::move(u));
    }
    out.push_back(std::move(sent));
    rows.clear();
    post_id.clear();
}

} // namespace

std::vector<ParsedSentence> parse_conllu(std::istream& in) {
    std::vector<ParsedSentence> out;
    std::vector<TokenRow> rows;
    std::string post_id;
    std::string line;
    long lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            finish_sentence(rows, post_id, out);
            continue;
        }
        if (line[0] == '#') {
            static const std::string kKey = "# post_id =";
            if (line.compare(0, kKey.size(), kKey) == 0) {
                std::string v = line.substr(kKey.size());
                std::size_t a = v.find_first_not_of(" \t");
                if (a != std::string::npos) post_id = v.substr(a);
            }
            continue;
        }

        std::vector<std::string> cols = split_tabs(line);
        if (cols.size() != 10)
            fail(Err::MalformedLine, "line " + std::to_string(lineno) + " has " +
                                         std::to_string(cols.size()) + " columns, expected 10");

        const std::string& id = cols[0];
        // skip multiword-token ranges ("3-4") and empty nodes ("3.1")
        if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;

        TokenRow row;
        try {
            row.id = std::stol(id);
        } catch (...) {
            fail(Err::MalformedLine, "line " + std::to_string(lineno) + ": bad token id '" + id + "'");
        }
        row.form = lower(cols[1]);
        try {
            row.head = std::stol(cols[6]);
        } catch (...) {
            fail(Err::MalformedLine,
                 "line " + std::to_string(lineno) + ": bad HEAD '" + cols[6] + "'");
        }
        if (row.head < 0)
            fail(Err::HeadOutOfRange, "line " + std::to_string(lineno) + ": negative HEAD");
        row.deprel = lower(cols[7]);
        rows.push_back(std::move(row));
    }
    finish_sentence(rows, post_id, out);
    return out;
}

std::map<std::string, std::vector<DepUnit>> index_by_post(
    const std::vector<ParsedSentence>& sentences) {
    std::map<std::string, std::vector<DepUnit>> by_post;
    for (const auto& s : sentences) {
        if (s.post_id.empty()) continue;
        auto& units = by_post[s.post_id];
        units.insert(units.end(), s.units.begin(), s.units.end());
    }
    return by_post;
}

std::map<std::string, std::vector<DepUnit>> load_parse_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".conllu")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::map<std::string, std::vector<DepUnit>> by_post;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) fail(Err::IoFailure, "cannot open " + path.string());
        auto sentences = parse_conllu(in);
        for (const auto& s : sentences) {
            if (s.post_id.empty()) continue;
            auto& units = by_post[s.post_id];
            units.insert(units.end(), s.units.begin(), s.units.end());
        }
    }
    return by_post;
}

} // namespace ct
