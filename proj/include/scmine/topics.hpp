#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/lda.hpp"

namespace scmine {

struct RelevantTerm {
    std::string term;
    double relevance = 0.0;
};

/// Terms of one topic ranked by the relevance metric
///   relevance(w) = lambda * log phi(k,w) + (1 - lambda) * log(phi(k,w)/p(w)).
/// lambda = 1 orders by topic probability, lambda = 0 by lift.
inline std::vector<RelevantTerm> relevance_terms(const TopicModel& model,
                                                 int topic, double lambda,
                                                 int top_n) {
    if (topic < 0 || topic >= model.K)
        throw validation_error("relevance_terms: topic index out of range");
    if (lambda < 0.0 || lambda > 1.0)
        throw validation_error("relevance_terms: lambda must be in [0,1]");

    const auto& phi = model.phi[topic];
    std::vector<RelevantTerm> terms;
    terms.reserve(phi.size());
    for (std::size_t w = 0; w < phi.size(); ++w) {
        const double rel = lambda * std::log(phi[w]) +
                           (1.0 - lambda) *
                               std::log(phi[w] / model.term_marginal[w]);
        terms.push_back({model.vocab.term_of(static_cast<term_id>(w)), rel});
    }
    std::sort(terms.begin(), terms.end(),
              [](const RelevantTerm& a, const RelevantTerm& b) {
                  if (a.relevance != b.relevance)
                      return a.relevance > b.relevance;
                  return a.term < b.term;
              });
    if (top_n >= 0 && static_cast<std::size_t>(top_n) < terms.size())
        terms.resize(top_n);
    return terms;
}

/// Jensen-Shannon divergence (natural log), in [0, ln 2].
inline double jensen_shannon(const std::vector<double>& p,
                             const std::vector<double>& q) {
    if (p.size() != q.size())
        throw validation_error("jensen_shannon: dimension mismatch");
    auto kl_to_mid = [](const std::vector<double>& a,
                        const std::vector<double>& b) {
        double kl = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0.0) kl += a[i] * std::log(2.0 * a[i] / (a[i] + b[i]));
        return kl;
    };
    const double jsd = 0.5 * kl_to_mid(p, q) + 0.5 * kl_to_mid(q, p);
    return std::clamp(jsd, 0.0, std::log(2.0));
}

struct IntertopicMap {
    std::vector<std::pair<double, double>> coords; // one (x, y) per topic
    std::vector<double> radii;                     // c * sqrt(prevalence)
    std::vector<std::vector<double>> distances;    // sqrt(JSD), symmetric

    bool has_overlap() const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = i + 1; j < coords.size(); ++j) {
                const double dx = coords[i].first - coords[j].first;
                const double dy = coords[i].second - coords[j].second;
                if (std::sqrt(dx * dx + dy * dy) < radii[i] + radii[j])
                    return true;
            }
        return false;
    }
};

namespace detail {

// Classical (Torgerson) MDS of a distance matrix to 2 dimensions.
inline std::vector<std::pair<double, double>> classical_mds_2d(
    const std::vector<std::vector<double>>& dist) {
    const int n = static_cast<int>(dist.size());
    Eigen::MatrixXd sq(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sq(i, j) = dist[i][j] * dist[i][j];

    // Double centering: B = -0.5 * J * D^2 * J
    Eigen::MatrixXd j_center =
        Eigen::MatrixXd::Identity(n, n) -
        Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::MatrixXd b = -0.5 * j_center * sq * j_center;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    const auto& values = solver.eigenvalues();   // ascending
    const auto& vectors = solver.eigenvectors();

    std::vector<std::pair<double, double>> coords(n, {0.0, 0.0});
    const int top = n - 1, second = n - 2;
    for (int i = 0; i < n; ++i) {
        const double l1 = std::max(values(top), 0.0);
        coords[i].first = vectors(i, top) * std::sqrt(l1);
        if (second >= 0) {
            const double l2 = std::max(values(second), 0.0);
            coords[i].second = vectors(i, second) * std::sqrt(l2);
        }
    }
    return coords;
}

} // namespace detail

/// Embeds topics in the plane by classical MDS of sqrt(JSD) between their
/// term distributions; circle radius is proportional to sqrt(prevalence),
/// scaled so the largest circle has radius 0.25 in map units.
inline IntertopicMap intertopic_map(const TopicModel& model) {
    if (model.K < 2)
        throw validation_error("intertopic_map needs at least 2 topics");

    IntertopicMap map;
    const int K = model.K;
    map.distances.assign(K, std::vector<double>(K, 0.0));
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            const double d =
                std::sqrt(jensen_shannon(model.phi[i], model.phi[j]));
            map.distances[i][j] = d;
            map.distances[j][i] = d;
        }

    map.coords = detail::classical_mds_2d(map.distances);

    double max_sqrt_prev = 0.0;
    for (double p : model.prevalence)
        max_sqrt_prev = std::max(max_sqrt_prev, std::sqrt(p));
    const double scale = max_sqrt_prev > 0.0 ? 0.25 / max_sqrt_prev : 0.0;
    map.radii.reserve(K);
    for (double p : model.prevalence)
        map.radii.push_back(scale * std::sqrt(p));
    return map;
}

struct TunedTopics {
    int K = 0;
    TopicModel model;
    IntertopicMap map;
    bool overlap = false; // set when no K in [2, K_max] was overlap-free
};

/// Searches K = K_max .. 2 (descending) and returns the largest K whose
/// intertopic map has no overlapping circles. Falls back to K = 2 with the
/// overlap flag set when every candidate overlaps.
inline TunedTopics tune_topics(const std::vector<std::vector<std::string>>& corpus,
                               int k_max, LdaParams params) {
    if (k_max < 2) throw validation_error("tune_topics: K_max must be >= 2");

    TunedTopics fallback;
    for (int k = k_max; k >= 2; --k) {
        params.K = k;
        TopicModel model = lda_fit(corpus, params);
        IntertopicMap map = intertopic_map(model);
        const bool overlap = map.has_overlap();
        if (!overlap)
            return {k, std::move(model), std::move(map), false};
        if (k == 2)
            fallback = {2, std::move(model), std::move(map), true};
    }
    return fallback;
}

} // namespace scmine
