#pragma once

#include <algorithm>
#include <cmath>

#include "scmine/errors.hpp"
#include "scmine/term_vector.hpp"

namespace scmine {

/// Extended Jaccard (Tanimoto) over raw bags:
///   (a.b) / (|a|^2 + |b|^2 - a.b)
/// With `binary` set, both bags are reduced to 0/1 weights first, which
/// turns the formula into set-intersection over set-union.
inline double jaccard(const TermVector& a, const TermVector& b,
                      bool binary = false) {
    if (a.empty() && b.empty())
        throw undefined_similarity_error("jaccard of two empty vectors");
    if (binary) return jaccard(a.binarized(), b.binarized(), false);
    const double ab = dot(a, b);
    const double na = dot(a, a);
    const double nb = dot(b, b);
    const double denom = na + nb - ab;
    if (denom == 0.0) return 0.0; // one side all-zero
    return ab / denom;
}

/// Cosine similarity. One empty vector yields 0.0 so that padding frames
/// do not abort a video score; two empty vectors are an error.
inline double cosine(const TermVector& a, const TermVector& b) {
    if (a.empty() && b.empty())
        throw undefined_similarity_error("cosine of two empty vectors");
    if (a.empty() || b.empty()) return 0.0;
    const double denom = a.norm() * b.norm();
    return dot(a, b) / denom;
}

} // namespace scmine
