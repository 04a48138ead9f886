#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/term_vector.hpp"

namespace scmine {

struct LdaParams {
    int K = 10;
    double alpha = 0.0; // 0 means the 50/K default
    double beta = 0.01;
    int iterations = 1000;
    std::uint32_t seed = 42;

    double resolved_alpha() const { return alpha > 0.0 ? alpha : 50.0 / K; }
};

/// LDA fitted by collapsed Gibbs sampling. phi is K x V, theta is D x K,
/// both row-stochastic and smoothed; deterministic for a given seed.
struct TopicModel {
    int K = 0;
    std::vector<std::vector<double>> phi;   // topic-term
    std::vector<std::vector<double>> theta; // doc-topic (kept docs only)
    std::vector<double> term_marginal;      // p(w) over the vocabulary
    std::vector<double> prevalence;         // topic token share, sums to 1
    double alpha = 0.0;
    double beta = 0.0;
    std::uint32_t seed = 0;
    Vocabulary vocab;
    std::vector<std::size_t> kept_docs; // indices into the input corpus
    std::size_t dropped_docs = 0;       // empty after preprocessing
};

namespace detail {

// mt19937 output mapped to [0,1); fully specified, so runs are
// reproducible across platforms.
inline double uniform01(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

} // namespace detail

inline TopicModel lda_fit(const std::vector<std::vector<std::string>>& corpus,
                          const LdaParams& params) {
    if (corpus.empty()) throw validation_error("lda_fit: empty corpus");
    if (params.K < 1) throw validation_error("lda_fit: K must be >= 1");
    if (params.iterations < 0)
        throw validation_error("lda_fit: negative iteration count");

    TopicModel model;
    model.K = params.K;
    model.alpha = params.resolved_alpha();
    model.beta = params.beta;
    model.seed = params.seed;

    // Intern tokens; empty documents are dropped (recorded, not fatal).
    std::vector<std::vector<term_id>> docs;
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        if (corpus[d].empty()) {
            ++model.dropped_docs;
            continue;
        }
        std::vector<term_id> ids;
        ids.reserve(corpus[d].size());
        for (const auto& tok : corpus[d]) ids.push_back(model.vocab.intern(tok));
        docs.push_back(std::move(ids));
        model.kept_docs.push_back(d);
    }
    if (docs.empty())
        throw validation_error("lda_fit: all documents empty");

    std::size_t total_tokens = 0;
    for (const auto& d : docs) total_tokens += d.size();
    if (static_cast<std::size_t>(params.K) > total_tokens)
        throw validation_error("lda_fit: K exceeds total token count");

    const int K = params.K;
    const int V = static_cast<int>(model.vocab.size());
    const int D = static_cast<int>(docs.size());
    const double alpha = model.alpha;
    const double beta = model.beta;

    std::vector<std::vector<int>> n_dk(D, std::vector<int>(K, 0));
    std::vector<std::vector<int>> n_kw(K, std::vector<int>(V, 0));
    std::vector<int> n_k(K, 0);
    std::vector<std::vector<int>> z(D);

    std::mt19937 rng(params.seed);

    for (int d = 0; d < D; ++d) {
        z[d].resize(docs[d].size());
        for (std::size_t i = 0; i < docs[d].size(); ++i) {
            const int k = static_cast<int>(detail::uniform01(rng) * K);
            const int topic = k >= K ? K - 1 : k;
            z[d][i] = topic;
            ++n_dk[d][topic];
            ++n_kw[topic][docs[d][i]];
            ++n_k[topic];
        }
    }

    std::vector<double> cumulative(K);
    for (int sweep = 0; sweep < params.iterations; ++sweep) {
        for (int d = 0; d < D; ++d) {
            for (std::size_t i = 0; i < docs[d].size(); ++i) {
                const term_id w = docs[d][i];
                const int old_topic = z[d][i];
                --n_dk[d][old_topic];
                --n_kw[old_topic][w];
                --n_k[old_topic];

                double total = 0.0;
                for (int k = 0; k < K; ++k) {
                    total += (n_dk[d][k] + alpha) * (n_kw[k][w] + beta) /
                             (n_k[k] + beta * V);
                    cumulative[k] = total;
                }
                const double u = detail::uniform01(rng) * total;
                int topic = 0;
                while (topic < K - 1 && cumulative[topic] < u) ++topic;

                z[d][i] = topic;
                ++n_dk[d][topic];
                ++n_kw[topic][w];
                ++n_k[topic];
            }
        }
    }

    model.phi.assign(K, std::vector<double>(V, 0.0));
    for (int k = 0; k < K; ++k) {
        const double denom = n_k[k] + beta * V;
        for (int w = 0; w < V; ++w)
            model.phi[k][w] = (n_kw[k][w] + beta) / denom;
    }
    model.theta.assign(D, std::vector<double>(K, 0.0));
    for (int d = 0; d < D; ++d) {
        const double denom = static_cast<double>(docs[d].size()) + alpha * K;
        for (int k = 0; k < K; ++k)
            model.theta[d][k] = (n_dk[d][k] + alpha) / denom;
    }
    model.prevalence.resize(K);
    for (int k = 0; k < K; ++k)
        model.prevalence[k] =
            static_cast<double>(n_k[k]) / static_cast<double>(total_tokens);

    // p(w) = sum_k prevalence(k) * phi(k,w)
    model.term_marginal.assign(V, 0.0);
    for (int k = 0; k < K; ++k)
        for (int w = 0; w < V; ++w)
            model.term_marginal[w] += model.prevalence[k] * model.phi[k][w];

    return model;
}

} // namespace scmine
