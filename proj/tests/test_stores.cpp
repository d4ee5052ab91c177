#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ct/csv.hpp"
#include "ct/model_io.hpp"
#include "ct/pipeline.hpp"
#include "ct/stores.hpp"
#include "fixtures.hpp"

using namespace ct;
namespace fs = std::filesystem;

namespace {

std::string temp_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("ct_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("csv: quoting round trip") {
    std::vector<CsvRow> rows = {
        {"post_id", "author", "reply_to", "text"},
        {"p1", "alice", "", "plain text"},
        {"p2", "bob", "p1", "comma, inside"},
        {"p3", "carol", "p1", "quote \" inside"},
        {"p4", "dave", "p2", "line\nbreak"},
        {"p5", "eve", "", ""},
    };
    std::string serialized;
    for (const auto& row : rows) serialized += format_csv_row(row);

    std::istringstream in(serialized);
    auto parsed = read_csv(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(parsed[i] == rows[i]);
}

TEST_CASE("csv: crlf and unterminated quotes") {
    std::istringstream in("a,b\r\nc,d\r\n");
    auto rows = read_csv(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == CsvRow{"a", "b"});
    CHECK(rows[1] == CsvRow{"c", "d"});

    std::istringstream bad("a,\"unterminated\n");
    try {
        read_csv(bad);
        FAIL("expected MalformedCsv");
    } catch (const Error& e) {
        CHECK(e.code() == Err::MalformedCsv);
    }
}

TEST_CASE("thread store: save and load round trip") {
    auto [thread, labels] = ctt::make_random_thread(404, 10);
    (void)labels;
    thread.posts[0].text = "tricky \"text\" with, commas\nand lines";

    std::string dir = temp_dir("threadstore");
    std::string path = dir + "/threads.jsonl";
    save_thread_store({thread}, path);
    auto loaded = load_thread_store(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0].thread_id == thread.thread_id);
    CHECK(loaded[0].strand == thread.strand);
    REQUIRE(loaded[0].posts.size() == thread.posts.size());
    for (std::size_t i = 0; i < thread.posts.size(); ++i) {
        CHECK(loaded[0].posts[i].post_id == thread.posts[i].post_id);
        CHECK(loaded[0].posts[i].author == thread.posts[i].author);
        CHECK(loaded[0].posts[i].text == thread.posts[i].text);
        CHECK(loaded[0].posts[i].reply_to == thread.posts[i].reply_to);
        CHECK(loaded[0].posts[i].dangling == thread.posts[i].dangling);
    }

    // byte-stable on re-save
    std::string once = slurp(path);
    save_thread_store(loaded, path);
    CHECK(slurp(path) == once);
}

TEST_CASE("label store: round trip with agreement fractions") {
    StoredLabel a;
    a.post_id = "p1";
    a.retained = true;
    a.codes = {2, 6};
    a.conflated = 2;
    a.agreement = {{2, 0.75}, {6, 1.0}};
    StoredLabel b;
    b.post_id = "p2";
    b.retained = false;
    b.agreement = {{-1, 1.0}};

    std::string dir = temp_dir("labelstore");
    std::string path = dir + "/labels.jsonl";
    save_label_store({a, b}, path);
    auto loaded = load_label_store(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].codes == CodeSet{2, 6});
    CHECK(loaded[0].conflated == 2);
    CHECK(loaded[0].agreement.at(2) == doctest::Approx(0.75));
    CHECK(loaded[1].retained == false);
    CHECK(loaded[1].conflated == -1);
    CHECK(loaded[1].agreement.at(-1) == doctest::Approx(1.0));

    LabelMap map = to_label_map(loaded);
    CHECK(map.size() == 1);
    CHECK(map.count("p1"));
}

TEST_CASE("model file: save -> load -> save is byte-identical") {
    auto corpus = ctt::make_classification_corpus(120, 314);
    FeatureParams params;
    params.channels.words = true;
    params.channels.deps = true;
    params.vocab_k = 150;
    FeaturizedCorpus feats = featurize_corpus(corpus.units, corpus.parses, {}, params);

    ModelFile mf;
    mf.strand = "sexist";
    mf.channels = params.channels;
    mf.vocab_k = params.vocab_k;
    mf.word_vocab = feats.word_vocab;
    mf.dep_vocab = feats.dep_vocab;
    mf.model = train_full(feats, 1.0, 1e-4, 2000);

    std::string dir = temp_dir("modelio");
    std::string path = dir + "/model.json";
    save_model(mf, path);
    std::string first = slurp(path);

    ModelFile loaded = load_model(path);
    save_model(loaded, path);
    CHECK(slurp(path) == first);

    // loaded model predicts identically
    for (std::size_t i = 0; i < feats.x.rows.size(); ++i)
        CHECK(predict(loaded.model, feats.x.rows[i]) == predict(mf.model, feats.x.rows[i]));
}

TEST_CASE("model file: version mismatch is rejected") {
    ModelFile mf;
    mf.strand = "racist";
    mf.word_vocab = Vocabulary::from_entries({"a"});
    mf.model.scaling.mins = {0.0};
    mf.model.scaling.maxs = {1.0};
    for (auto& lm : mf.model.models) lm.weights = {0.0};
    std::string text = model_to_string(mf);

    auto pos = text.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "\"format_version\": 9");
    try {
        model_from_string(text);
        FAIL("expected VersionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Err::VersionMismatch);
    }
}
