#include <catch2/catch_amalgamated.hpp>

#include "scmine/preprocess.hpp"

using namespace scmine;

TEST_CASE("preprocess lowercases and drops specials, numbers and java") {
    const auto tokens = preprocess_text("Java How To: Dialog Boxes");
    CHECK(tokens == std::vector<std::string>{"dialog", "boxes"});
}

TEST_CASE("preprocess of empty text is empty") {
    CHECK(preprocess_text("").empty());
    CHECK(preprocess_text("12 34 :-)").empty());
}

TEST_CASE("nouns-only filtering drops lexicon verbs") {
    PreprocessOptions opts;
    opts.keep_nouns_only = true;
    const auto tokens = preprocess_text("create 2 tables in MySQL", opts);
    CHECK(tokens == std::vector<std::string>{"tables", "mysql"});
}

TEST_CASE("nouns-only keeps whitelisted -ing nouns") {
    PreprocessOptions opts;
    opts.keep_nouns_only = true;
    const auto tokens =
        preprocess_text("parsing a string while debugging settings", opts);
    CHECK(tokens == std::vector<std::string>{"string", "settings"});
}

TEST_CASE("drop_terms comparison is case-insensitive") {
    PreprocessOptions opts;
    opts.drop_terms = {"JAVA", "MySQL"};
    const auto tokens = preprocess_text("Java mysql tutorial", opts);
    CHECK(tokens == std::vector<std::string>{"tutorial"});
}

TEST_CASE("stopword list ships exactly 175 words") {
    CHECK(data::kStopwords.size() == 175);
    const auto stop = default_stopwords();
    CHECK(stop.size() == 175);
    CHECK(stop.count("how") == 1);
    CHECK(stop.count("to") == 1);
}

TEST_CASE("custom stopword list overrides the default") {
    PreprocessOptions opts;
    opts.stopwords = {"tutorial"};
    const auto tokens = preprocess_text("how to tutorial", opts);
    CHECK(tokens == std::vector<std::string>{"how", "to"});
}
