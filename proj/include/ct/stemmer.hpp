#pragma once
// English (Porter2 / Snowball) stemmer.

#include <string>

namespace ct {

// Stem one lowercase English word. Words of two letters or fewer, and words
// containing characters outside [a-z'], are returned unchanged.
std::string porter2_stem(const std::string& word);

} // namespace ct
