#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "scmine/errors.hpp"

namespace scmine {

using term_id = std::uint32_t;

/// Sparse bag of terms. Raw bags carry non-negative weights (counts for
/// frames and token lists); no zero entries are stored.
class TermVector {
public:
    TermVector() = default;

    void add(term_id term, double weight) {
        if (weight == 0.0) return;
        auto it = entries_.find(term);
        if (it == entries_.end()) {
            entries_.emplace(term, weight);
        } else {
            it->second += weight;
            if (it->second == 0.0) entries_.erase(it);
        }
    }

    void set(term_id term, double weight) {
        if (weight == 0.0) {
            entries_.erase(term);
        } else {
            entries_[term] = weight;
        }
    }

    double get(term_id term) const {
        auto it = entries_.find(term);
        return it == entries_.end() ? 0.0 : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const std::map<term_id, double>& entries() const { return entries_; }

    double total_weight() const {
        double s = 0.0;
        for (const auto& [t, w] : entries_) s += w;
        return s;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& [t, w] : entries_) s += w * w;
        return std::sqrt(s);
    }

    /// Binary view: every stored term gets weight 1.
    TermVector binarized() const {
        TermVector out;
        for (const auto& [t, w] : entries_) out.set(t, 1.0);
        return out;
    }

private:
    std::map<term_id, double> entries_; // ordered, so iteration is deterministic
};

inline double dot(const TermVector& a, const TermVector& b) {
    const TermVector& small = a.size() <= b.size() ? a : b;
    const TermVector& big = a.size() <= b.size() ? b : a;
    double s = 0.0;
    for (const auto& [t, w] : small.entries()) s += w * big.get(t);
    return s;
}

/// Maps term strings to dense ids. Insertion order defines the id space.
class Vocabulary {
public:
    term_id intern(const std::string& term) {
        auto it = ids_.find(term);
        if (it != ids_.end()) return it->second;
        term_id id = static_cast<term_id>(terms_.size());
        ids_.emplace(term, id);
        terms_.push_back(term);
        return id;
    }

    // -1 sentinel would be awkward with unsigned ids; callers check has().
    bool has(const std::string& term) const { return ids_.count(term) != 0; }

    term_id id_of(const std::string& term) const {
        auto it = ids_.find(term);
        if (it == ids_.end())
            throw validation_error("unknown term: " + term);
        return it->second;
    }

    const std::string& term_of(term_id id) const { return terms_.at(id); }
    std::size_t size() const { return terms_.size(); }

private:
    std::unordered_map<std::string, term_id> ids_;
    std::vector<std::string> terms_;
};

} // namespace scmine
