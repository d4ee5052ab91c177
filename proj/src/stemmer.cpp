#include "ct/stemmer.hpp"

#include <array>
#include <cstddef>
#include <string_view>

namespace ct {
namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }
bool is_vowel_y(char c) { return is_vowel(c) || c == 'y'; }

// 'Y' marks a y acting as a consonant.
bool vowel_at(const std::string& w, size_t i) { return is_vowel(w[i]) || w[i] == 'y'; }

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() && std::string_view(w).substr(w.size() - suf.size()) == suf;
}

bool contains_vowel(const std::string& w, size_t begin, size_t end) {
    for (size_t i = begin; i < end && i < w.size(); ++i)
        if (vowel_at(w, i)) return true;
    return false;
}

// Replace suffix if present and its start index lies at or after `region`.
bool replace_in(std::string& w, std::string_view suf, std::string_view repl, size_t region) {
    if (w.size() < suf.size()) return false;
    size_t idx = w.size() - suf.size();
    if (idx < region) return false;
    if (std::string_view(w).substr(idx) != suf) return false;
    w.replace(idx, suf.size(), repl);
    return true;
}

size_t first_nonvowel_after_vowel(const std::string& w, size_t start) {
    for (size_t i = start; i > 0 && i < w.size(); ++i)
        if (!vowel_at(w, i) && vowel_at(w, i - 1)) return i + 1;
    return w.size();
}

size_t start_r1(const std::string& w) {
    if (w.rfind("gener", 0) == 0) return 5;
    if (w.rfind("commun", 0) == 0) return 6;
    if (w.rfind("arsen", 0) == 0) return 5;
    return first_nonvowel_after_vowel(w, 1);
}

// A short syllable: vowel + non-vowel (not w/x/Y) preceded by a non-vowel,
// or a vowel at the start of the word followed by a non-vowel.
bool ends_in_short_syllable(const std::string& w) {
    size_t n = w.size();
    if (n == 2)
        return is_vowel_y(w[0]) && !is_vowel_y(w[1]);
    if (n >= 3) {
        char a = w[n - 3], b = w[n - 2], c = w[n - 1];
        return !is_vowel_y(a) && is_vowel_y(b) && b != 'Y' && !is_vowel_y(c) && c != 'w' &&
               c != 'x' && c != 'Y';
    }
    return false;
}

bool ends_in_double(const std::string& w) {
    if (w.size() < 2) return false;
    char a = w[w.size() - 1];
    if (a != w[w.size() - 2]) return false;
    return a == 'b' || a == 'd' || a == 'f' || a == 'g' || a == 'm' || a == 'n' || a == 'p' ||
           a == 'r' || a == 't';
}

bool valid_li_ending(char c) {
    return c == 'c' || c == 'd' || c == 'e' || c == 'g' || c == 'h' || c == 'k' || c == 'm' ||
           c == 'n' || c == 'r' || c == 't';
}

bool exception_form(std::string& w) {
    static const std::array<std::pair<std::string_view, std::string_view>, 11> mapped = {{
        {"skis", "ski"}, {"skies", "sky"}, {"dying", "die"}, {"lying", "lie"}, {"tying", "tie"},
        {"idly", "idl"}, {"gently", "gentl"}, {"ugly", "ugli"}, {"early", "earli"},
        {"only", "onli"}, {"singly", "singl"},
    }};
    for (const auto& [from, to] : mapped) {
        if (w == from) {
            w = to;
            return true;
        }
    }
    return w == "sky" || w == "news" || w == "howe" || w == "atlas" || w == "cosmos" ||
           w == "bias" || w == "andes";
}

bool exception_after_1a(const std::string& w) {
    return w == "inning" || w == "outing" || w == "canning" || w == "herring" ||
           w == "earring" || w == "proceed" || w == "exceed" || w == "succeed";
}

void mark_consonant_y(std::string& w) {
    if (w[0] == 'y') w[0] = 'Y';
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == 'y' && is_vowel(w[i - 1])) w[i] = 'Y';
}

void step0(std::string& w) {
    if (replace_in(w, "'s'", "", 0)) return;
    if (replace_in(w, "'s", "", 0)) return;
    replace_in(w, "'", "", 0);
}

void step1a(std::string& w) {
    if (replace_in(w, "sses", "ss", 0)) return;
    if (ends_with(w, "ied") || ends_with(w, "ies")) {
        if (w.size() > 4)
            w.erase(w.size() - 2); // cries -> cri
        else
            w.pop_back(); // ties -> tie
        return;
    }
    if (ends_with(w, "us") || ends_with(w, "ss")) return;
    if (ends_with(w, "s")) {
        // delete if a vowel precedes, not counting the letter just before s
        if (w.size() >= 3 && contains_vowel(w, 0, w.size() - 2)) w.pop_back();
    }
}

void step1b(std::string& w, size_t r1) {
    if (ends_with(w, "eedly")) {
        replace_in(w, "eedly", "ee", r1);
        return;
    }
    if (ends_with(w, "eed")) {
        replace_in(w, "eed", "ee", r1);
        return;
    }
    bool deleted = false;
    for (std::string_view suf : {"ingly", "edly", "ing", "ed"}) {
        if (ends_with(w, suf)) {
            if (contains_vowel(w, 0, w.size() - suf.size())) {
                w.erase(w.size() - suf.size());
                deleted = true;
            }
            break; // longest suffix decides, applied or not
        }
    }
    if (!deleted) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_in_double(w)) {
        w.pop_back();
    } else if (r1 >= w.size() && ends_in_short_syllable(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    size_t n = w.size();
    if (n > 2 && (w[n - 1] == 'y' || w[n - 1] == 'Y') && !is_vowel_y(w[n - 2])) w[n - 1] = 'i';
}

void step2(std::string& w, size_t r1) {
    // longest suffix first
    static const std::array<std::pair<std::string_view, std::string_view>, 24> subs = {{
        {"ization", "ize"}, {"ational", "ate"}, {"fulness", "ful"}, {"ousness", "ous"},
        {"iveness", "ive"}, {"tional", "tion"}, {"biliti", "ble"}, {"lessli", "less"},
        {"entli", "ent"}, {"ation", "ate"}, {"alism", "al"}, {"aliti", "al"},
        {"ousli", "ous"}, {"iviti", "ive"}, {"fulli", "ful"}, {"enci", "ence"},
        {"anci", "ance"}, {"abli", "able"}, {"izer", "ize"}, {"ator", "ate"},
        {"alli", "al"}, {"bli", "ble"}, {"ogi", ""}, {"li", ""},
    }};
    for (const auto& [suf, repl] : subs) {
        if (!ends_with(w, suf)) continue;
        if (suf == "ogi") {
            // -logi -> -log
            if (w.size() >= 4 && w[w.size() - 4] == 'l') replace_in(w, "ogi", "og", r1);
            return;
        }
        if (suf == "li") {
            if (w.size() >= 3 && w.size() - 2 >= r1 && valid_li_ending(w[w.size() - 3]))
                w.erase(w.size() - 2);
            return;
        }
        replace_in(w, suf, repl, r1);
        return;
    }
}

void step3(std::string& w, size_t r1, size_t r2) {
    static const std::array<std::pair<std::string_view, std::string_view>, 8> subs = {{
        {"ational", "ate"}, {"tional", "tion"}, {"alize", "al"}, {"icate", "ic"},
        {"iciti", "ic"}, {"ical", "ic"}, {"ness", ""}, {"ful", ""},
    }};
    for (const auto& [suf, repl] : subs) {
        if (ends_with(w, suf)) {
            replace_in(w, suf, repl, r1);
            return;
        }
    }
    replace_in(w, "ative", "", r2);
}

void step4(std::string& w, size_t r2) {
    static const std::array<std::string_view, 18> subs = {
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism",
        "ate", "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
    };
    for (std::string_view suf : subs) {
        if (!ends_with(w, suf)) continue;
        if (suf == "ion") {
            if (w.size() >= 5 && w.size() - 3 >= r2 &&
                (w[w.size() - 4] == 's' || w[w.size() - 4] == 't'))
                w.erase(w.size() - 3);
            return;
        }
        replace_in(w, suf, "", r2);
        return;
    }
}

void step5(std::string& w, size_t r1, size_t r2) {
    size_t n = w.size();
    if (n == 0) return;
    if (w[n - 1] == 'e') {
        if (n - 1 >= r2) {
            w.pop_back();
        } else if (n - 1 >= r1) {
            std::string head = w.substr(0, n - 1);
            if (!ends_in_short_syllable(head)) w.pop_back();
        }
        return;
    }
    if (w[n - 1] == 'l' && n >= 2 && n - 1 >= r2 && w[n - 2] == 'l') w.pop_back();
}

} // namespace

std::string porter2_stem(const std::string& word) {
    if (word.size() <= 2) return word;
    for (char c : word)
        if (!((c >= 'a' && c <= 'z') || c == '\'')) return word;

    std::string w = word;
    if (w[0] == '\'') w.erase(0, 1);
    if (w.size() <= 2) return w;

    if (exception_form(w)) return w;

    mark_consonant_y(w);
    const size_t r1 = start_r1(w);
    const size_t r2 = r1 >= w.size() ? r1 : first_nonvowel_after_vowel(w, r1 + 1);

    step0(w);
    step1a(w);
    if (exception_after_1a(w)) {
        for (char& c : w)
            if (c == 'Y') c = 'y';
        return w;
    }
    step1b(w, r1);
    step1c(w);
    step2(w, r1);
    step3(w, r1, r2);
    step4(w, r2);
    step5(w, r1, r2);

    for (char& c : w)
        if (c == 'Y') c = 'y';
    return w;
}

} // namespace ct
