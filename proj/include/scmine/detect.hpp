#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/frame.hpp"
#include "scmine/lsi.hpp"
#include "scmine/similarity.hpp"

namespace scmine {

enum class SimilarityAlgorithm { jaccard, cosine, lsi };

inline std::string to_string(SimilarityAlgorithm a) {
    switch (a) {
        case SimilarityAlgorithm::jaccard: return "jaccard";
        case SimilarityAlgorithm::cosine: return "cosine";
        case SimilarityAlgorithm::lsi: return "lsi";
    }
    return "cosine";
}

inline SimilarityAlgorithm algorithm_from_string(const std::string& s) {
    if (s == "jaccard") return SimilarityAlgorithm::jaccard;
    if (s == "cosine") return SimilarityAlgorithm::cosine;
    if (s == "lsi") return SimilarityAlgorithm::lsi;
    throw validation_error("unknown similarity algorithm: " + s);
}

struct VideoScore {
    std::string video_id;
    SimilarityAlgorithm algorithm = SimilarityAlgorithm::cosine;
    double score = 0.0;
    int pair_count = 0;
};

/// Mean similarity of consecutive frame pairs. For LSI the model is
/// fitted on the video's own sampled frames with k = min(10, rank).
inline VideoScore video_similarity(const FrameSequence& seq,
                                   SimilarityAlgorithm algorithm) {
    if (seq.frames.size() < 2)
        throw insufficient_frames_error(
            "video_similarity needs at least 2 frames for " + seq.video_id);

    const int pairs = static_cast<int>(seq.frames.size()) - 1;
    double sum = 0.0;
    switch (algorithm) {
        case SimilarityAlgorithm::jaccard:
            for (int i = 0; i < pairs; ++i)
                sum += jaccard(seq.frames[i].bag, seq.frames[i + 1].bag);
            break;
        case SimilarityAlgorithm::cosine:
            for (int i = 0; i < pairs; ++i)
                sum += cosine(seq.frames[i].bag, seq.frames[i + 1].bag);
            break;
        case SimilarityAlgorithm::lsi: {
            std::vector<TermVector> cols;
            cols.reserve(seq.frames.size());
            for (const auto& f : seq.frames) cols.push_back(f.bag);
            const LsiModel model = lsi_fit(cols, 10);
            for (int i = 0; i < pairs; ++i)
                sum += lsi_similarity(model, i, i + 1);
            break;
        }
    }
    return {seq.video_id, algorithm, sum / pairs, pairs};
}

/// Descending by score, ties broken by ascending video id.
inline std::vector<std::string> rank_videos(std::vector<VideoScore> scores) {
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i].algorithm != scores[0].algorithm)
            throw validation_error("rank_videos: mixed similarity algorithms");
    std::sort(scores.begin(), scores.end(),
              [](const VideoScore& a, const VideoScore& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.video_id < b.video_id;
              });
    std::vector<std::string> ids;
    ids.reserve(scores.size());
    for (const auto& s : scores) ids.push_back(s.video_id);
    return ids;
}

struct RankingEvaluation {
    int k = 0;
    int retrieved_relevant = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool k_clamped = false;
};

/// Precision/recall/F1 at k against a gold set of relevant video ids.
/// A k larger than the ranking is clamped and flagged.
inline RankingEvaluation evaluate_ranking(const std::vector<std::string>& ranked,
                                          const std::set<std::string>& relevant,
                                          int k) {
    if (k < 1) throw validation_error("evaluate_ranking: k must be >= 1");
    if (relevant.empty())
        throw validation_error("evaluate_ranking: relevant set is empty");

    RankingEvaluation ev;
    ev.k_clamped = k > static_cast<int>(ranked.size());
    ev.k = ev.k_clamped ? static_cast<int>(ranked.size()) : k;
    for (int i = 0; i < ev.k; ++i)
        if (relevant.count(ranked[i])) ++ev.retrieved_relevant;
    ev.precision = ev.k > 0 ? static_cast<double>(ev.retrieved_relevant) / ev.k
                            : 0.0;
    ev.recall = static_cast<double>(ev.retrieved_relevant) /
                static_cast<double>(relevant.size());
    ev.f1 = (ev.precision + ev.recall) > 0.0
                ? 2.0 * ev.precision * ev.recall / (ev.precision + ev.recall)
                : 0.0;
    return ev;
}

} // namespace scmine
