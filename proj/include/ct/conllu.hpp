#pragma once
// Reader for CoNLL-U dependency parses produced by an external parser.
// Sentences are keyed back to posts via "# post_id = ..." comment lines.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ct/error.hpp"

namespace ct {

// One typed dependency, rendered "relation(governor, dependent)" for
// n-gramming. The root token's governor is rendered "ROOT".
struct DepUnit {
    std::string relation;
    std::string governor;
    std::string dependent;

    std::string rendered() const { return relation + "(" + governor + ", " + dependent + ")"; }

    bool operator==(const DepUnit&) const = default;
};

struct ParsedSentence {
    std::string post_id; // empty when the sentence carries no post_id comment
    std::vector<DepUnit> units;
};

// Parse a CoNLL-U stream: 10 tab-separated columns per token line, blank
// lines between sentences, '#' comment lines. Multiword-token ranges and
// empty nodes are skipped. One DepUnit per token, in token order.
std::vector<ParsedSentence> parse_conllu(std::istream& in);

// Units per post across all files in a directory (files visited in sorted
// order, ".conllu" extension). Consecutive sentences with the same post_id
// concatenate.
std::map<std::string, std::vector<DepUnit>> load_parse_dir(const std::string& dir);

std::map<std::string, std::vector<DepUnit>> index_by_post(
    const std::vector<ParsedSentence>& sentences);

} // namespace ct
