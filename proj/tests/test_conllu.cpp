#include <doctest.h>

#include <array>
#include <fstream>
#include <sstream>

#include "ct/conllu.hpp"

using namespace ct;

namespace {

// independent reader used as the fixture oracle: line-splitting with string
// streams, two passes per sentence block
std::vector<std::vector<std::string>> oracle_read(std::istream& in) {
    std::vector<std::vector<std::string>> sentences;
    std::vector<std::string> block;
    std::string line;
    auto lower = [](std::string s) {
        for (char& c : s)
            if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
        return s;
    };
    auto flush = [&]() {
        if (block.empty()) return;
        std::vector<std::pair<long, std::string>> forms;
        std::vector<std::array<std::string, 3>> raw; // id, head, deprel + form hidden
        std::vector<std::string> rendered;
        struct Row {
            long id;
            std::string form, deprel;
            long head;
        };
        std::vector<Row> rows;
        for (const auto& l : block) {
            std::istringstream ss(l);
            std::vector<std::string> cols;
            std::string c;
            while (std::getline(ss, c, '\t')) cols.push_back(c);
            if (cols[0].find('-') != std::string::npos ||
                cols[0].find('.') != std::string::npos)
                continue;
            rows.push_back({std::stol(cols[0]), lower(cols[1]), lower(cols[7]),
                            std::stol(cols[6])});
        }
        for (const auto& r : rows) {
            std::string governor = "ROOT";
            if (r.head != 0)
                for (const auto& o : rows)
                    if (o.id == r.head) governor = o.form;
            rendered.push_back(r.deprel + "(" + governor + ", " + r.form + ")");
        }
        sentences.push_back(rendered);
        block.clear();
        (void)forms;
        (void)raw;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;
        block.push_back(line);
    }
    flush();
    return sentences;
}

} // namespace

TEST_CASE("parse_conllu: single-token sentence") {
    std::istringstream in("1\tword\t_\t_\t_\t_\t0\troot\t_\t_\n\n");
    auto sentences = parse_conllu(in);
    REQUIRE(sentences.size() == 1);
    REQUIRE(sentences[0].units.size() == 1);
    CHECK(sentences[0].units[0].rendered() == "root(ROOT, word)");
}

TEST_CASE("parse_conllu: ginger babies example, lowercased, in token order") {
    std::istringstream in(
        "# post_id = p1\n"
        "1\tGinger\t_\t_\t_\t_\t2\tamod\t_\t_\n"
        "2\tBabies\t_\t_\t_\t_\t0\troot\t_\t_\n\n");
    auto sentences = parse_conllu(in);
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].post_id == "p1");
    REQUIRE(sentences[0].units.size() == 2);
    CHECK(sentences[0].units[0].rendered() == "amod(babies, ginger)");
    CHECK(sentences[0].units[1].rendered() == "root(ROOT, babies)");
}

TEST_CASE("parse_conllu: malformed column count") {
    std::istringstream in("1\tword\t0\troot\n\n");
    try {
        parse_conllu(in);
        FAIL("expected MalformedLine");
    } catch (const ct::Error& e) {
        CHECK(e.code() == ct::Err::MalformedLine);
    }
}

TEST_CASE("parse_conllu: head out of range") {
    std::istringstream in("1\tword\t_\t_\t_\t_\t5\tnsubj\t_\t_\n\n");
    try {
        parse_conllu(in);
        FAIL("expected HeadOutOfRange");
    } catch (const ct::Error& e) {
        CHECK(e.code() == ct::Err::HeadOutOfRange);
    }
}

TEST_CASE("parse_conllu: multiword ranges and empty nodes are skipped") {
    std::istringstream in(
        "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tdo\t_\t_\t_\t_\t0\troot\t_\t_\n"
        "1.1\telided\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "2\tnot\t_\t_\t_\t_\t1\tadvmod\t_\t_\n\n");
    auto sentences = parse_conllu(in);
    REQUIRE(sentences.size() == 1);
    REQUIRE(sentences[0].units.size() == 2);
    CHECK(sentences[0].units[0].rendered() == "root(ROOT, do)");
    CHECK(sentences[0].units[1].rendered() == "advmod(do, not)");
}

TEST_CASE("parse_conllu: 50-sentence fixture equals the independent oracle reader") {
    std::string path = std::string(CT_FIXTURE_DIR) + "/parses_fixture.conllu";
    std::ifstream in1(path);
    REQUIRE(in1.good());
    auto sentences = parse_conllu(in1);
    REQUIRE(sentences.size() == 50);

    std::ifstream in2(path);
    auto expected = oracle_read(in2);
    REQUIRE(expected.size() == 50);
    for (std::size_t s = 0; s < 50; ++s) {
        REQUIRE(sentences[s].units.size() == expected[s].size());
        for (std::size_t u = 0; u < expected[s].size(); ++u)
            CHECK(sentences[s].units[u].rendered() == expected[s][u]);
        CHECK(sentences[s].post_id.substr(0, 2) == "fx");
    }
}

TEST_CASE("index_by_post concatenates consecutive sentences with one id") {
    std::istringstream in(
        "# post_id = p9\n"
        "1\tfirst\t_\t_\t_\t_\t0\troot\t_\t_\n"
        "\n"
        "# post_id = p9\n"
        "1\tsecond\t_\t_\t_\t_\t0\troot\t_\t_\n\n");
    auto by_post = index_by_post(parse_conllu(in));
    REQUIRE(by_post.count("p9"));
    REQUIRE(by_post["p9"].size() == 2);
    CHECK(by_post["p9"][0].dependent == "first");
    CHECK(by_post["p9"][1].dependent == "second");
}
