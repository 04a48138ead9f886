#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "scmine/corpus.hpp"
#include "scmine/errors.hpp"
#include "scmine/term_vector.hpp"

namespace scmine {

/// TF-IDF index over a tokenized corpus: weight(t,d) = tf(t,d) * ln(N/df(t)).
/// Terms present in every document get weight 0 (ln(N/N) = 0).
class TfidfIndex {
public:
    static TfidfIndex build(const std::vector<Document>& corpus) {
        if (corpus.empty())
            throw validation_error("tfidf_build: empty corpus");
        TfidfIndex index;
        index.n_ = corpus.size();

        // Document frequencies over the corpus vocabulary.
        for (const auto& doc : corpus) {
            std::unordered_set<term_id> seen;
            for (const auto& tok : doc.tokens)
                seen.insert(index.vocab_.intern(tok));
            for (term_id t : seen) {
                if (index.df_.size() <= t) index.df_.resize(t + 1, 0);
                ++index.df_[t];
            }
        }
        if (index.vocab_.size() == 0)
            throw validation_error("tfidf_build: empty vocabulary");

        index.doc_ids_.reserve(corpus.size());
        index.vectors_.reserve(corpus.size());
        for (const auto& doc : corpus) {
            TermVector counts;
            for (const auto& tok : doc.tokens)
                counts.add(index.vocab_.id_of(tok), 1.0);
            index.doc_ids_.push_back(doc.id);
            index.vectors_.push_back(index.weigh(counts));
        }
        return index;
    }

    /// Applies the index's IDF weights to a raw count vector. Terms
    /// outside the corpus vocabulary carry no weight.
    TermVector weigh(const TermVector& counts) const {
        TermVector v;
        for (const auto& [t, tf] : counts.entries())
            if (t < df_.size() && df_[t] > 0)
                v.set(t, tf * idf(t));
        return v;
    }

    /// TF-IDF vector for tokens, using this corpus's vocabulary and IDF.
    TermVector weigh_tokens(const std::vector<std::string>& tokens) const {
        TermVector counts;
        for (const auto& tok : tokens)
            if (vocab_.has(tok)) counts.add(vocab_.id_of(tok), 1.0);
        return weigh(counts);
    }

    /// Raw count vector over the corpus vocabulary (no IDF weighting).
    TermVector count_tokens(const std::vector<std::string>& tokens) const {
        TermVector counts;
        for (const auto& tok : tokens)
            if (vocab_.has(tok)) counts.add(vocab_.id_of(tok), 1.0);
        return counts;
    }

    double idf(term_id t) const {
        return std::log(static_cast<double>(n_) / df_[t]);
    }

    std::size_t corpus_size() const { return n_; }
    std::size_t vocabulary_size() const { return vocab_.size(); }
    const Vocabulary& vocabulary() const { return vocab_; }
    const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    const TermVector& vector(std::size_t i) const { return vectors_.at(i); }
    std::size_t df(term_id t) const { return df_.at(t); }

private:
    std::size_t n_ = 0;
    Vocabulary vocab_;
    std::vector<std::size_t> df_;
    std::vector<std::string> doc_ids_;
    std::vector<TermVector> vectors_;
};

inline TfidfIndex tfidf_build(const std::vector<Document>& corpus) {
    return TfidfIndex::build(corpus);
}

} // namespace scmine
