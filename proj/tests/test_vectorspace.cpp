#include <Eigen/Dense>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "scmine/frame.hpp"
#include "scmine/lsi.hpp"
#include "scmine/similarity.hpp"
#include "scmine/tfidf.hpp"

using namespace scmine;

namespace {

TermVector vec(std::initializer_list<double> weights) {
    TermVector v;
    term_id id = 0;
    for (double w : weights) v.set(id++, w);
    return v;
}

TermVector random_sparse(std::mt19937& rng, int dim, int max_terms) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<term_id> term(0, dim - 1);
    std::uniform_real_distribution<double> weight(0.1, 10.0);
    TermVector v;
    const int n = term_count(rng);
    for (int i = 0; i < n; ++i) v.set(term(rng), weight(rng));
    return v;
}

// Brute-force similarity over dense expansions, independent of TermVector
// iteration; shared with the acceptance suite's oracle criterion.
double dense_jaccard(const TermVector& a, const TermVector& b, int dim) {
    std::vector<double> da(dim, 0.0), db(dim, 0.0);
    for (const auto& [t, w] : a.entries()) da[t] = w;
    for (const auto& [t, w] : b.entries()) db[t] = w;
    double ab = 0, na = 0, nb = 0;
    for (int i = 0; i < dim; ++i) {
        ab += da[i] * db[i];
        na += da[i] * da[i];
        nb += db[i] * db[i];
    }
    return ab / (na + nb - ab);
}

double dense_cosine(const TermVector& a, const TermVector& b, int dim) {
    std::vector<double> da(dim, 0.0), db(dim, 0.0);
    for (const auto& [t, w] : a.entries()) da[t] = w;
    for (const auto& [t, w] : b.entries()) db[t] = w;
    double ab = 0, na = 0, nb = 0;
    for (int i = 0; i < dim; ++i) {
        ab += da[i] * db[i];
        na += da[i] * da[i];
        nb += db[i] * db[i];
    }
    return ab / std::sqrt(na * nb);
}

// Independent LSI oracle: latent similarity from the eigendecomposition of
// the Gram matrix X^T X (the implementation uses a singular value
// decomposition of X instead).
double oracle_lsi_similarity(const Eigen::MatrixXd& x, int k, int i, int j) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x.transpose() * x);
    const auto& values = solver.eigenvalues(); // ascending
    const int n = static_cast<int>(values.size());
    Eigen::VectorXd a = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(k);
    for (int d = 0; d < k; ++d) {
        const int col = n - 1 - d;
        const double sigma = std::sqrt(std::max(values(col), 0.0));
        a(d) = sigma * solver.eigenvectors()(i, col);
        b(d) = sigma * solver.eigenvectors()(j, col);
    }
    return a.dot(b) / (a.norm() * b.norm());
}

} // namespace

TEST_CASE("jaccard printed-formula values") {
    CHECK(jaccard(vec({1, 1, 0}), vec({1, 1, 1})) ==
          Catch::Approx(2.0 / 3.0).margin(1e-12));
    const auto a = vec({3, 1, 4});
    CHECK(jaccard(a, a) == Catch::Approx(1.0).margin(1e-15));

    TermVector left, right;
    left.set(0, 2.0);
    right.set(5, 3.0);
    CHECK(jaccard(left, right) == 0.0);
}

TEST_CASE("jaccard binary variant reduces to set form") {
    // weights are ignored in the binary variant
    const auto a = vec({5, 9, 0});
    const auto b = vec({1, 1, 1});
    CHECK(jaccard(a, b, true) == Catch::Approx(2.0 / 3.0).margin(1e-12));
    // and differs from the weighted form on this witness
    CHECK(jaccard(a, b) != Catch::Approx(jaccard(a, b, true)).margin(1e-6));
}

TEST_CASE("cosine known values and edge conventions") {
    CHECK(cosine(vec({1, 1, 0}), vec({1, 1, 1})) ==
          Catch::Approx(2.0 / std::sqrt(6.0)).margin(1e-12));
    const auto a = vec({2, 7});
    CHECK(cosine(a, a) == Catch::Approx(1.0).margin(1e-15));

    TermVector empty;
    CHECK(cosine(a, empty) == 0.0);
    CHECK_THROWS_AS(cosine(empty, empty), undefined_similarity_error);
    CHECK_THROWS_AS(jaccard(empty, empty), undefined_similarity_error);
}

TEST_CASE("similarity properties on random bags") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_sparse(rng, 50, 12);
        const auto b = random_sparse(rng, 50, 12);
        const double j = jaccard(a, b);
        const double c = cosine(a, b);
        CHECK(j == jaccard(b, a));
        CHECK(c == cosine(b, a));
        CHECK((j >= 0.0 && j <= 1.0 + 1e-12));
        CHECK((c >= 0.0 && c <= 1.0 + 1e-12));
        CHECK(j == Catch::Approx(dense_jaccard(a, b, 50)).margin(1e-12));
        CHECK(c == Catch::Approx(dense_cosine(a, b, 50)).margin(1e-12));

        // cosine is scale invariant, jaccard is not
        TermVector scaled;
        for (const auto& [t, w] : a.entries()) scaled.set(t, 3.5 * w);
        CHECK(cosine(scaled, b) == Catch::Approx(c).margin(1e-12));
    }
    // jaccard scale-variance witness
    const auto a = vec({1, 1});
    TermVector doubled = vec({2, 2});
    CHECK(jaccard(a, vec({1, 1, 1})) != jaccard(doubled, vec({1, 1, 1})));
}

TEST_CASE("quantize_frame bins pixels into color terms") {
    Raster red;
    red.width = 2;
    red.height = 2;
    red.rgb = {255, 0, 0, 255, 0, 0, 255, 0, 0, 255, 0, 0};
    const auto bag = quantize_frame(red, 4);
    REQUIRE(bag.size() == 1);
    CHECK(bag.get(3840) == 4.0); // 15 * 256

    Raster bw;
    bw.width = 1;
    bw.height = 2;
    bw.rgb = {0, 0, 0, 255, 255, 255};
    const auto bag1 = quantize_frame(bw, 1);
    REQUIRE(bag1.size() == 2);
    CHECK(bag1.get(0) == 1.0);
    CHECK(bag1.get(7) == 1.0);

    // b=8 is the identity binning
    Raster px;
    px.width = 1;
    px.height = 1;
    px.rgb = {12, 34, 56};
    const auto bag8 = quantize_frame(px, 8);
    CHECK(bag8.get(12u * 65536 + 34u * 256 + 56) == 1.0);

    Raster empty;
    CHECK_THROWS_AS(quantize_frame(empty, 4), validation_error);
}

TEST_CASE("quantize_frame conserves total pixel count") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> byte(0, 255);
    Raster r;
    r.width = 17;
    r.height = 9;
    r.rgb.resize(r.pixel_count() * 3);
    for (auto& b : r.rgb) b = static_cast<std::uint8_t>(byte(rng));
    for (int bits : {1, 3, 4, 8})
        CHECK(quantize_frame(r, bits).total_weight() ==
              static_cast<double>(r.pixel_count()));
}

TEST_CASE("lsi full-rank similarity equals plain cosine") {
    std::mt19937 rng(23);
    std::vector<TermVector> cols;
    for (int j = 0; j < 6; ++j) cols.push_back(random_sparse(rng, 8, 8));
    const auto model = lsi_fit(cols, 100); // clamped to rank
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            CHECK(lsi_similarity(model, i, j) ==
                  Catch::Approx(cosine(cols[i], cols[j])).margin(1e-6));
}

TEST_CASE("lsi identical columns have identical latent vectors") {
    std::vector<TermVector> cols{vec({1, 2, 3}), vec({1, 2, 3}), vec({4, 0, 1})};
    const auto model = lsi_fit(cols, 2);
    for (int d = 0; d < model.k(); ++d)
        CHECK(model.latent(0)[d] == Catch::Approx(model.latent(1)[d]).margin(1e-9));
    CHECK(lsi_similarity(model, 0, 1) == Catch::Approx(1.0).margin(1e-9));
    CHECK(lsi_similarity(model, 0, 0) == 1.0);
}

TEST_CASE("lsi truncated similarities match the dense oracle") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> count(0, 5);
    Eigen::MatrixXd x(8, 6);
    std::vector<TermVector> cols(6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 8; ++i) {
            const int c = count(rng);
            x(i, j) = c;
            if (c > 0) cols[j].set(static_cast<term_id>(i), c);
        }
    const int k = 3;
    const auto model = lsi_fit(cols, k);
    REQUIRE(model.k() == k);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            CHECK(lsi_similarity(model, i, j) ==
                  Catch::Approx(oracle_lsi_similarity(x, k, i, j)).margin(1e-6));
}

TEST_CASE("lsi input validation") {
    std::vector<TermVector> one{vec({1, 2})};
    CHECK_THROWS_AS(lsi_fit(one, 2), validation_error);
    std::vector<TermVector> zeros{TermVector{}, TermVector{}};
    CHECK_THROWS_AS(lsi_fit(zeros, 1), validation_error);
}

TEST_CASE("tfidf weights follow tf * ln(N/df)") {
    Document d1{"d1", DocumentKind::transcript, "", {"a", "a", "b"}};
    Document d2{"d2", DocumentKind::transcript, "", {"b", "c"}};
    const auto index = tfidf_build({d1, d2});

    const auto& vocab = index.vocabulary();
    const auto& v1 = index.vector(0);
    const auto& v2 = index.vector(1);
    CHECK(v1.get(vocab.id_of("a")) == Catch::Approx(2 * std::log(2.0)).margin(1e-12));
    CHECK(v1.get(vocab.id_of("b")) == 0.0); // df = N
    CHECK(v2.get(vocab.id_of("b")) == 0.0);
    CHECK(v2.get(vocab.id_of("c")) == Catch::Approx(std::log(2.0)).margin(1e-12));
    CHECK(v1.get(vocab.id_of("c")) == 0.0); // absent term

    // single-document corpus: every weight is 0
    const auto solo = tfidf_build({d1});
    CHECK(solo.vector(0).empty());
}

TEST_CASE("tfidf rejects empty corpora") {
    CHECK_THROWS_AS(tfidf_build({}), validation_error);
    Document empty{"e", DocumentKind::transcript, "", {}};
    CHECK_THROWS_AS(tfidf_build({empty, empty}), validation_error);
}
