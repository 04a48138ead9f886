#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scmine/data/non_nouns.hpp"
#include "scmine/data/stopwords.hpp"
#include "scmine/errors.hpp"

namespace scmine {

inline std::unordered_set<std::string> default_stopwords() {
    std::unordered_set<std::string> s;
    for (auto w : data::kStopwords) s.emplace(w);
    return s;
}

inline std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open stopword file: " + path);
    std::unordered_set<std::string> s;
    std::string w;
    while (in >> w) s.insert(w);
    return s;
}

struct PreprocessOptions {
    std::set<std::string> drop_terms{"java"}; // compared case-insensitively
    bool keep_nouns_only = false;
    std::unordered_set<std::string> stopwords = default_stopwords();
    bool strip_nonalpha = true;
};

namespace detail {

inline std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

// Non-noun test: lexicon membership, plus an "-ing" suffix heuristic with
// a small whitelist of nouns that end in "ing".
inline bool looks_like_non_noun(const std::string& token) {
    static const std::unordered_set<std::string_view> lexicon(
        data::kNonNounLexicon.begin(), data::kNonNounLexicon.end());
    static const std::unordered_set<std::string_view> ing_nouns(
        data::kIngNounWhitelist.begin(), data::kIngNounWhitelist.end());
    if (ing_nouns.count(token)) return false; // whitelist beats the lexicon
    if (lexicon.count(token)) return true;
    if (token.size() > 4 && token.ends_with("ing")) return true;
    return false;
}

} // namespace detail

/// Lowercases, strips non-alphabetic characters, and removes stopwords and
/// drop-list terms. With keep_nouns_only, tokens failing the noun test are
/// removed as well. An empty result is allowed.
inline std::vector<std::string> preprocess_text(const std::string& text,
                                                const PreprocessOptions& opts = {}) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (unsigned char c : text) {
        if (std::isalpha(c)) {
            cleaned += static_cast<char>(std::tolower(c));
        } else if (opts.strip_nonalpha) {
            cleaned += ' ';
        } else if (std::isspace(c)) {
            cleaned += ' ';
        } else if (!std::isdigit(c)) {
            cleaned += static_cast<char>(c);
        } else {
            cleaned += ' '; // numbers always go
        }
    }

    std::set<std::string> drops;
    for (const auto& t : opts.drop_terms) drops.insert(detail::to_lower(t));

    std::vector<std::string> tokens;
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        if (opts.stopwords.count(tok)) continue;
        if (drops.count(tok)) continue;
        if (opts.keep_nouns_only && detail::looks_like_non_noun(tok)) continue;
        tokens.push_back(tok);
    }
    return tokens;
}

} // namespace scmine
