// scmine - screencast mining toolkit CLI.
//
// Subcommands: detect, eval-detect, topics, link, eval-link.
// Every output file embeds the resolved run configuration so results can
// be reproduced from the file alone. Exit codes: 0 ok, 1 I/O error,
// 2 validation/usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "scmine/scmine.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

int worker_count() {
    if (const char* env = std::getenv("SCMINE_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scmine::io_error("cannot write " + path.string());
    out << content;
}

std::string format_score(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

scmine::PreprocessOptions make_preprocess_options(
    const std::string& stopword_file, const std::vector<std::string>& drop_terms,
    bool nouns_only) {
    scmine::PreprocessOptions opts;
    if (!stopword_file.empty())
        opts.stopwords = scmine::load_stopwords(stopword_file);
    for (const auto& t : drop_terms) opts.drop_terms.insert(t);
    opts.keep_nouns_only = nouns_only;
    return opts;
}

// ---------------------------------------------------------------- detect

struct DetectArgs {
    std::string manifest;
    std::string algorithm = "cosine";
    double interval = 10.0;
    int bits = 4;
    std::string out;
};

void run_detect(const DetectArgs& args) {
    const auto algorithm = scmine::algorithm_from_string(args.algorithm);
    const auto records = scmine::load_video_manifest(args.manifest);

    std::vector<scmine::VideoScore> scores(records.size());
    const int workers =
        std::min<int>(worker_count(), std::max<std::size_t>(records.size(), 1));
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr first_error;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < records.size(); i += workers) {
                try {
                    const auto seq =
                        scmine::load_frames(records[i].frame_dir, args.interval,
                                            args.bits, records[i].id);
                    scores[i] = scmine::video_similarity(seq, algorithm);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    const auto ranked = scmine::rank_videos(scores);
    std::map<std::string, const scmine::VideoScore*> by_id;
    for (const auto& s : scores) by_id[s.video_id] = &s;

    json config{{"command", "detect"},
                {"manifest", args.manifest},
                {"algorithm", args.algorithm},
                {"interval", args.interval},
                {"bits", args.bits},
                {"out", args.out}};
    std::ostringstream csv;
    csv << "# config " << config.dump() << "\n";
    csv << "video_id,algorithm,score,rank\n";
    for (std::size_t r = 0; r < ranked.size(); ++r) {
        const auto* s = by_id.at(ranked[r]);
        csv << s->video_id << ',' << scmine::to_string(s->algorithm) << ','
            << format_score(s->score) << ',' << (r + 1) << "\n";
    }
    write_text_file(args.out, csv.str());
    std::cout << "detect: ranked " << ranked.size() << " videos ("
              << args.algorithm << ") -> " << args.out << "\n";
}

// ----------------------------------------------------------- eval-detect

struct EvalDetectArgs {
    std::string manifest;
    std::string ranks;
    std::vector<int> ks{20};
    std::string out;
    std::string format = "json";
};

std::vector<std::string> read_ranking_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw scmine::io_error("cannot open ranking file: " + path.string());
    std::vector<std::string> ids;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { // column header
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw scmine::parse_error("malformed ranking row: " + line);
        ids.push_back(line.substr(0, comma));
    }
    return ids;
}

void run_eval_detect(const EvalDetectArgs& args) {
    const auto records = scmine::load_video_manifest(args.manifest);
    std::set<std::string> relevant;
    for (const auto& r : records)
        if (r.kind == scmine::VideoKind::dev_screencast) relevant.insert(r.id);
    const auto ranked = read_ranking_csv(args.ranks);

    json config{{"command", "eval-detect"}, {"manifest", args.manifest},
                {"ranks", args.ranks},      {"ks", args.ks},
                {"out", args.out},          {"format", args.format}};
    json rows = json::array();
    std::ostringstream csv;
    csv << "# config " << config.dump() << "\n";
    csv << "k,retrieved_relevant,precision,recall,f1,k_clamped\n";
    for (int k : args.ks) {
        const auto ev = scmine::evaluate_ranking(ranked, relevant, k);
        rows.push_back({{"k", ev.k},
                        {"retrieved_relevant", ev.retrieved_relevant},
                        {"precision", ev.precision},
                        {"recall", ev.recall},
                        {"f1", ev.f1},
                        {"k_clamped", ev.k_clamped}});
        csv << ev.k << ',' << ev.retrieved_relevant << ','
            << format_score(ev.precision) << ',' << format_score(ev.recall)
            << ',' << format_score(ev.f1) << ',' << (ev.k_clamped ? 1 : 0)
            << "\n";
    }
    json doc{{"config", config},
             {"total_relevant", relevant.size()},
             {"rows", rows}};
    const std::string payload =
        args.format == "csv" ? csv.str() : doc.dump(2) + "\n";
    if (args.out.empty())
        std::cout << payload;
    else
        write_text_file(args.out, payload);
    std::cout << "eval-detect: " << args.ks.size() << " cutoff(s), "
              << relevant.size() << " relevant videos\n";
}

// ---------------------------------------------------------------- topics

struct TopicsArgs {
    std::string corpus;
    int k = 0; // 0 = tune
    int k_max = 10;
    double alpha = 0.0;
    double beta = 0.01;
    int iterations = 1000;
    unsigned seed = 42;
    double lambda = 0.6;
    int top_n = 10;
    bool nouns_only = false;
    std::string stopword_file;
    std::vector<std::string> drop_terms;
    std::string out;
};

std::vector<std::vector<std::string>> load_token_corpus(
    const fs::path& path, const scmine::PreprocessOptions& opts) {
    std::ifstream in(path);
    if (!in) throw scmine::io_error("cannot open corpus: " + path.string());
    std::vector<std::vector<std::string>> corpus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            corpus.push_back(
                scmine::preprocess_text(j.at("text").get<std::string>(), opts));
        } catch (const nlohmann::json::exception& e) {
            throw scmine::parse_error("corpus line " + std::to_string(lineno) +
                                      ": " + e.what());
        }
    }
    return corpus;
}

json topic_report(const scmine::TopicModel& model,
                  const scmine::IntertopicMap* map, double lambda, int top_n) {
    json topics = json::array();
    for (int k = 0; k < model.K; ++k) {
        json terms = json::array();
        for (const auto& t : scmine::relevance_terms(model, k, lambda, top_n))
            terms.push_back({{"term", t.term}, {"relevance", t.relevance}});
        json topic{{"topic", k},
                   {"prevalence", model.prevalence[k]},
                   {"terms", terms}};
        if (map) {
            topic["x"] = map->coords[k].first;
            topic["y"] = map->coords[k].second;
            topic["radius"] = map->radii[k];
        }
        topics.push_back(topic);
    }
    json report{{"K", model.K},
                {"alpha", model.alpha},
                {"beta", model.beta},
                {"seed", model.seed},
                {"dropped_docs", model.dropped_docs},
                {"topics", topics}};
    if (map) {
        report["overlap"] = map->has_overlap();
        report["distances"] = map->distances;
    }
    return report;
}

void run_topics(const TopicsArgs& args) {
    const auto opts = make_preprocess_options(args.stopword_file,
                                              args.drop_terms, args.nouns_only);
    const auto corpus = load_token_corpus(args.corpus, opts);

    scmine::LdaParams params;
    params.alpha = args.alpha;
    params.beta = args.beta;
    params.iterations = args.iterations;
    params.seed = args.seed;

    json config{{"command", "topics"},
                {"corpus", args.corpus},
                {"k", args.k},
                {"kmax", args.k_max},
                {"alpha", args.alpha},
                {"beta", args.beta},
                {"iterations", args.iterations},
                {"seed", args.seed},
                {"lambda", args.lambda},
                {"top", args.top_n},
                {"nouns_only", args.nouns_only},
                {"stopwords", args.stopword_file},
                {"drop_terms", args.drop_terms},
                {"out", args.out}};

    json report;
    if (args.k > 0) {
        params.K = args.k;
        const auto model = scmine::lda_fit(corpus, params);
        if (model.K >= 2) {
            const auto map = scmine::intertopic_map(model);
            report = topic_report(model, &map, args.lambda, args.top_n);
        } else {
            report = topic_report(model, nullptr, args.lambda, args.top_n);
        }
    } else {
        const auto tuned = scmine::tune_topics(corpus, args.k_max, params);
        report = topic_report(tuned.model, &tuned.map, args.lambda, args.top_n);
        report["tuned_K"] = tuned.K;
        report["overlap"] = tuned.overlap;
    }
    report["config"] = config;

    const std::string payload = report.dump(2) + "\n";
    if (args.out.empty())
        std::cout << payload;
    else
        write_text_file(args.out, payload);
    std::cout << "topics: K=" << report["K"] << " over " << corpus.size()
              << " documents\n";
}

// ------------------------------------------------------------------ link

struct LinkArgs {
    std::string docs_dir;
    std::vector<std::string> transcripts;
    int top_n = 20;
    double tau = 0.12;
    bool raw_counts = false;
    std::string stopword_file;
    std::vector<std::string> drop_terms;
    std::string out;
    std::string csv_dir;
};

void run_link(const LinkArgs& args) {
    // Transcript queries keep all content words; no noun-only filtering.
    const auto opts = make_preprocess_options(args.stopword_file,
                                              args.drop_terms, false);

    std::vector<scmine::Document> docs;
    std::vector<fs::path> pages;
    for (const auto& entry : fs::directory_iterator(args.docs_dir)) {
        const auto ext = entry.path().extension().string();
        if (ext == ".html" || ext == ".htm") pages.push_back(entry.path());
    }
    std::sort(pages.begin(), pages.end());
    if (pages.empty())
        throw scmine::validation_error("no .html documents in " + args.docs_dir);
    for (const auto& page : pages) {
        auto doc = scmine::load_api_doc(page);
        doc.tokens = scmine::preprocess_text(doc.raw_text, opts);
        docs.push_back(std::move(doc));
    }
    const auto index = scmine::tfidf_build(docs);

    json config{{"command", "link"},
                {"docs", args.docs_dir},
                {"transcripts", args.transcripts},
                {"top", args.top_n},
                {"tau", args.tau},
                {"raw_counts", args.raw_counts},
                {"stopwords", args.stopword_file},
                {"drop_terms", args.drop_terms},
                {"out", args.out},
                {"csv_dir", args.csv_dir}};

    json results = json::array();
    for (const auto& t : args.transcripts) {
        auto transcript = scmine::load_transcript(t);
        transcript.tokens = scmine::preprocess_text(transcript.raw_text, opts);
        const auto link = scmine::link_transcript(index, transcript, args.tau,
                                                  args.raw_counts);
        const std::size_t cut =
            args.top_n <= 0 ? link.ranking.size()
                            : std::min<std::size_t>(args.top_n,
                                                    link.ranking.size());
        json ranking = json::array();
        for (std::size_t i = 0; i < cut; ++i)
            ranking.push_back({{"doc_id", link.ranking[i].doc_id},
                               {"score", link.ranking[i].score}});
        results.push_back({{"screencast_id", link.screencast_id},
                           {"tau", link.tau},
                           {"above_threshold", link.above_threshold},
                           {"corpus_size", index.corpus_size()},
                           {"ranking", ranking}});

        if (!args.csv_dir.empty()) {
            fs::create_directories(args.csv_dir);
            std::ostringstream csv;
            csv << "# config " << config.dump() << "\n";
            csv << "doc_id,score,rank\n";
            for (std::size_t i = 0; i < cut; ++i)
                csv << link.ranking[i].doc_id << ','
                    << format_score(link.ranking[i].score) << ',' << (i + 1)
                    << "\n";
            write_text_file(fs::path(args.csv_dir) /
                                (link.screencast_id + ".csv"),
                            csv.str());
        }
    }

    json doc{{"config", config}, {"results", results}};
    const std::string payload = doc.dump(2) + "\n";
    if (args.out.empty())
        std::cout << payload;
    else
        write_text_file(args.out, payload);
    std::cout << "link: ranked " << index.corpus_size() << " documents for "
              << args.transcripts.size() << " transcript(s)\n";
}

// ------------------------------------------------------------- eval-link

struct EvalLinkArgs {
    std::string results;
    std::string judgments;
    std::vector<int> ks{3, 5, 10, 20};
    double tau = 0.12;
    std::string out;
};

void run_eval_link(const EvalLinkArgs& args) {
    std::ifstream in(args.results);
    if (!in)
        throw scmine::io_error("cannot open results file: " + args.results);
    json results_doc;
    try {
        in >> results_doc;
    } catch (const nlohmann::json::exception& e) {
        throw scmine::parse_error(std::string("results file: ") + e.what());
    }

    std::vector<scmine::LinkResult> results;
    for (const auto& r : results_doc.at("results")) {
        scmine::LinkResult link;
        link.screencast_id = r.at("screencast_id").get<std::string>();
        link.tau = r.value("tau", args.tau);
        link.above_threshold = r.value("above_threshold", 0);
        for (const auto& sd : r.at("ranking"))
            link.ranking.push_back({sd.at("doc_id").get<std::string>(),
                                    sd.at("score").get<double>()});
        results.push_back(std::move(link));
    }
    const auto judgments = scmine::load_judgments(args.judgments);
    const auto table = scmine::evaluate_links(results, judgments, args.ks);

    // Threshold analysis over the stored scores.
    std::vector<double> all_scores, relevant_scores;
    for (const auto& r : results) {
        const auto& rel = judgments.relevant.at(r.screencast_id);
        for (const auto& sd : r.ranking) {
            all_scores.push_back(sd.score);
            if (rel.count(sd.doc_id)) relevant_scores.push_back(sd.score);
        }
    }
    json threshold = nullptr;
    if (!all_scores.empty()) {
        const auto part =
            scmine::threshold_partition(all_scores, relevant_scores, args.tau);
        threshold = json{{"tau", args.tau},
                         {"fraction_all_below", part.fraction_all_below},
                         {"fraction_relevant_above",
                          part.relevant_defined
                              ? json(part.fraction_relevant_above)
                              : json(nullptr)}};
    }

    json config{{"command", "eval-link"}, {"results", args.results},
                {"judgments", args.judgments}, {"ks", args.ks},
                {"tau", args.tau},         {"out", args.out}};
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"k", row.k},
                        {"retrieved_relevant_total", row.retrieved_relevant_total},
                        {"total_relevant", row.total_relevant},
                        {"micro_precision", row.micro_precision},
                        {"micro_recall", row.micro_recall},
                        {"macro_precision", row.macro_precision},
                        {"macro_recall", row.macro_recall}});
    json doc{{"config", config}, {"rows", rows}, {"threshold", threshold}};
    const std::string payload = doc.dump(2) + "\n";
    if (args.out.empty())
        std::cout << payload;
    else
        write_text_file(args.out, payload);
    std::cout << "eval-link: " << results.size() << " screencast(s), "
              << table.rows.front().total_relevant << " relevant documents\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"screencast mining toolkit"};
    app.require_subcommand(1);

    DetectArgs detect;
    auto* cmd_detect =
        app.add_subcommand("detect", "score and rank videos by frame similarity");
    cmd_detect->add_option("--manifest", detect.manifest)->required();
    cmd_detect->add_option("--algorithm", detect.algorithm)
        ->check(CLI::IsMember({"jaccard", "cosine", "lsi"}));
    cmd_detect->add_option("--interval", detect.interval);
    cmd_detect->add_option("--bits", detect.bits)->check(CLI::Range(1, 8));
    cmd_detect->add_option("--out", detect.out)->required();

    EvalDetectArgs eval_detect;
    auto* cmd_eval_detect = app.add_subcommand(
        "eval-detect", "precision/recall of a video ranking");
    cmd_eval_detect->add_option("--manifest", eval_detect.manifest)->required();
    cmd_eval_detect->add_option("--ranks", eval_detect.ranks)->required();
    cmd_eval_detect->add_option("--k", eval_detect.ks);
    cmd_eval_detect->add_option("--out", eval_detect.out);
    cmd_eval_detect->add_option("--format", eval_detect.format)
        ->check(CLI::IsMember({"json", "csv"}));

    TopicsArgs topics;
    auto* cmd_topics =
        app.add_subcommand("topics", "fit and tune LDA topics on a corpus");
    cmd_topics->add_option("--corpus", topics.corpus)->required();
    cmd_topics->add_option("--k", topics.k);
    cmd_topics->add_option("--kmax", topics.k_max);
    cmd_topics->add_option("--alpha", topics.alpha);
    cmd_topics->add_option("--beta", topics.beta);
    cmd_topics->add_option("--iters", topics.iterations);
    cmd_topics->add_option("--seed", topics.seed);
    cmd_topics->add_option("--lambda", topics.lambda)
        ->check(CLI::Range(0.0, 1.0));
    cmd_topics->add_option("--top", topics.top_n);
    cmd_topics->add_flag("--nouns-only", topics.nouns_only);
    cmd_topics->add_option("--stopwords", topics.stopword_file);
    cmd_topics->add_option("--drop-term", topics.drop_terms);
    cmd_topics->add_option("--out", topics.out);

    LinkArgs link;
    auto* cmd_link = app.add_subcommand(
        "link", "rank API documents against screencast transcripts");
    cmd_link->add_option("--docs", link.docs_dir)->required();
    cmd_link->add_option("--transcript", link.transcripts)->required();
    cmd_link->add_option("--top", link.top_n);
    cmd_link->add_option("--tau", link.tau);
    cmd_link->add_flag("--raw-counts", link.raw_counts);
    cmd_link->add_option("--stopwords", link.stopword_file);
    cmd_link->add_option("--drop-term", link.drop_terms);
    cmd_link->add_option("--out", link.out);
    cmd_link->add_option("--csv-dir", link.csv_dir);

    EvalLinkArgs eval_link;
    auto* cmd_eval_link = app.add_subcommand(
        "eval-link", "evaluate document links against relevance judgments");
    cmd_eval_link->add_option("--results", eval_link.results)->required();
    cmd_eval_link->add_option("--judgments", eval_link.judgments)->required();
    cmd_eval_link->add_option("--ks", eval_link.ks)->delimiter(',');
    cmd_eval_link->add_option("--tau", eval_link.tau);
    cmd_eval_link->add_option("--out", eval_link.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_detect) run_detect(detect);
        if (*cmd_eval_detect) run_eval_detect(eval_detect);
        if (*cmd_topics) run_topics(topics);
        if (*cmd_link) run_link(link);
        if (*cmd_eval_link) run_eval_link(eval_link);
    } catch (const scmine::io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 1;
    } catch (const scmine::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
