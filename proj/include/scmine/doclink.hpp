#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/similarity.hpp"
#include "scmine/tfidf.hpp"

namespace scmine {

struct RelevanceJudgments {
    std::map<std::string, std::set<std::string>> relevant; // screencast -> docs
};

/// Line-delimited JSON: {"screencast_id": ..., "relevant_doc_ids": [...]}.
inline RelevanceJudgments load_judgments(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open judgments file: " + path.string());
    RelevanceJudgments judgments;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            const auto id = j.at("screencast_id").get<std::string>();
            std::set<std::string> docs;
            for (const auto& d : j.at("relevant_doc_ids"))
                docs.insert(d.get<std::string>());
            if (docs.empty())
                throw validation_error(
                    "judgments: empty relevant set for screencast " + id);
            judgments.relevant[id] = std::move(docs);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error("judgments line " + std::to_string(lineno) +
                              ": " + e.what());
        }
    }
    return judgments;
}

struct ScoredDoc {
    std::string doc_id;
    double score = 0.0;
};

struct LinkResult {
    std::string screencast_id;
    std::vector<ScoredDoc> ranking; // full corpus, scores non-increasing
    double tau = 0.12;
    int above_threshold = 0; // scores >= tau
};

/// Ranks every document of the index against a transcript by cosine over
/// TF-IDF vectors (raw counts behind a flag). Ties break by ascending
/// doc id; the full ranking is retained.
inline LinkResult link_transcript(const TfidfIndex& index,
                                  const Document& transcript, double tau = 0.12,
                                  bool raw_counts = false) {
    if (transcript.tokens.empty())
        throw validation_error("link_transcript: empty query transcript");
    const TermVector query = raw_counts
                                 ? index.count_tokens(transcript.tokens)
                                 : index.weigh_tokens(transcript.tokens);

    LinkResult result;
    result.screencast_id = transcript.id;
    result.tau = tau;
    result.ranking.reserve(index.corpus_size());
    for (std::size_t i = 0; i < index.corpus_size(); ++i) {
        const TermVector& doc = index.vector(i);
        double score = 0.0;
        if (!query.empty() && !doc.empty()) score = cosine(query, doc);
        result.ranking.push_back({index.doc_ids()[i], score});
    }
    std::sort(result.ranking.begin(), result.ranking.end(),
              [](const ScoredDoc& a, const ScoredDoc& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.doc_id < b.doc_id;
              });
    for (const auto& sd : result.ranking)
        if (sd.score >= tau) ++result.above_threshold;
    return result;
}

struct EvaluationRow {
    int k = 0;
    int retrieved_relevant_total = 0;
    int total_relevant = 0;
    double micro_precision = 0.0;
    double micro_recall = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
};

struct EvaluationTable {
    std::vector<EvaluationRow> rows;
};

/// Precision/recall at each cutoff, both micro (pooled counts) and macro
/// (mean of per-screencast values) averaged.
inline EvaluationTable evaluate_links(const std::vector<LinkResult>& results,
                                      const RelevanceJudgments& judgments,
                                      const std::vector<int>& ks) {
    if (results.empty())
        throw validation_error("evaluate_links: no link results");
    for (const auto& r : results)
        if (!judgments.relevant.count(r.screencast_id))
            throw validation_error("evaluate_links: no judgment for screencast " +
                                   r.screencast_id);

    int total_relevant = 0;
    for (const auto& r : results)
        total_relevant +=
            static_cast<int>(judgments.relevant.at(r.screencast_id).size());

    EvaluationTable table;
    for (int k : ks) {
        if (k < 1) throw validation_error("evaluate_links: k must be >= 1");
        EvaluationRow row;
        row.k = k;
        row.total_relevant = total_relevant;
        double macro_p = 0.0, macro_r = 0.0;
        long pooled_k = 0;
        for (const auto& r : results) {
            const auto& rel = judgments.relevant.at(r.screencast_id);
            const int cut =
                std::min<int>(k, static_cast<int>(r.ranking.size()));
            int hits = 0;
            for (int i = 0; i < cut; ++i)
                if (rel.count(r.ranking[i].doc_id)) ++hits;
            row.retrieved_relevant_total += hits;
            pooled_k += k;
            macro_p += static_cast<double>(hits) / k;
            macro_r += static_cast<double>(hits) / rel.size();
        }
        row.micro_precision =
            static_cast<double>(row.retrieved_relevant_total) / pooled_k;
        row.micro_recall = static_cast<double>(row.retrieved_relevant_total) /
                           total_relevant;
        row.macro_precision = macro_p / results.size();
        row.macro_recall = macro_r / results.size();
        table.rows.push_back(row);
    }
    return table;
}

struct ThresholdPartition {
    double fraction_all_below = 0.0;     // strictly < tau
    double fraction_relevant_above = 0.0; // >= tau
    bool relevant_defined = true;
};

/// Exact rational fractions: integer counts divided once at the end.
inline ThresholdPartition threshold_partition(
    const std::vector<double>& all_scores,
    const std::vector<double>& relevant_scores, double tau) {
    if (all_scores.empty())
        throw validation_error("threshold_partition: no scores");
    ThresholdPartition part;
    std::size_t below = 0;
    for (double s : all_scores)
        if (s < tau) ++below;
    part.fraction_all_below =
        static_cast<double>(below) / static_cast<double>(all_scores.size());
    if (relevant_scores.empty()) {
        part.relevant_defined = false;
    } else {
        std::size_t above = 0;
        for (double s : relevant_scores)
            if (s >= tau) ++above;
        part.fraction_relevant_above = static_cast<double>(above) /
                                       static_cast<double>(relevant_scores.size());
    }
    return part;
}

} // namespace scmine
