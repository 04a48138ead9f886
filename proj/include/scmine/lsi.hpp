#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/term_vector.hpp"

namespace scmine {

/// Truncated SVD of a term-by-column count matrix. Columns get a
/// k-dimensional latent vector (sigma * V row); cosine between latent
/// vectors is the LSI similarity and ranges over [-1, 1].
class LsiModel {
public:
    int k() const { return k_; }
    std::size_t columns() const { return latent_.size(); }
    const std::vector<double>& latent(std::size_t col) const {
        return latent_.at(col);
    }
    const std::vector<double>& singular_values() const { return sigma_; }

    static LsiModel fit(const std::vector<TermVector>& cols, int k);

private:
    int k_ = 0;
    std::vector<double> sigma_;
    std::vector<std::vector<double>> latent_; // one k-vector per fitted column
};

inline LsiModel LsiModel::fit(const std::vector<TermVector>& cols, int k) {
    if (cols.size() < 2)
        throw validation_error("lsi_fit needs at least 2 columns");
    if (k < 1) throw validation_error("lsi_fit needs k >= 1");

    // Union of term ids -> dense row index.
    std::map<term_id, int> rows;
    for (const auto& c : cols)
        for (const auto& [t, w] : c.entries())
            if (!rows.count(t)) rows.emplace(t, static_cast<int>(rows.size()));
    if (rows.empty())
        throw validation_error("lsi_fit: all-zero matrix");

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(rows.size()),
        static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [t, w] : cols[j].entries())
            m(rows.at(t), static_cast<Eigen::Index>(j)) = w;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();

    // Numerical rank; k is clamped to it.
    const double tol = std::max(m.rows(), m.cols()) * s(0) *
                       std::numeric_limits<double>::epsilon();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol) ++rank;
    if (rank == 0)
        throw validation_error("lsi_fit: degenerate matrix");

    LsiModel model;
    model.k_ = std::min(k, rank);
    model.sigma_.assign(s.data(), s.data() + model.k_);
    model.latent_.resize(cols.size());
    const auto& v = svd.matrixV();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        model.latent_[j].resize(model.k_);
        for (int d = 0; d < model.k_; ++d)
            model.latent_[j][d] = s(d) * v(static_cast<Eigen::Index>(j), d);
    }
    return model;
}

inline LsiModel lsi_fit(const std::vector<TermVector>& cols, int k) {
    return LsiModel::fit(cols, k);
}

inline double lsi_similarity(const LsiModel& model, std::size_t i,
                             std::size_t j) {
    if (i >= model.columns() || j >= model.columns())
        throw validation_error("lsi_similarity: column index out of range");
    const auto& a = model.latent(i);
    const auto& b = model.latent(j);
    double ab = 0.0, na = 0.0, nb = 0.0;
    for (int d = 0; d < model.k(); ++d) {
        ab += a[d] * b[d];
        na += a[d] * a[d];
        nb += b[d] * b[d];
    }
    if (na == 0.0 || nb == 0.0)
        throw undefined_similarity_error("lsi_similarity: zero latent vector");
    return std::clamp(ab / std::sqrt(na * nb), -1.0, 1.0);
}

} // namespace scmine
