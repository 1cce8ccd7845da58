#include "doctest.h"

#include <random>

#include "coact/linalg.hpp"

using namespace coact;

namespace {

const Field Q = Field::rationals();

LinearMap from_ints(const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    LinearMap m(rows.size(), cols, Q);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}

Vec ivec(const std::vector<long>& xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

LinearMap random_map(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> entry(-3, 3);
    LinearMap m(rows, cols, Q);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(entry(rng));
    return m;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-3, 3);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(entry(rng)));
    return v;
}

} // namespace

TEST_CASE("solve_linear on the stock systems") {
    CHECK(*solve_linear(LinearMap::identity(2, Q), ivec({3, 5})) == ivec({3, 5}));
    CHECK(!solve_linear(LinearMap::zero(2, 2, Q), ivec({1, 0})).has_value());

    // back-substitution gives (1,2); cross-check by applying A
    LinearMap a = from_ints({{1, 1}, {0, 2}});
    Vec x = *solve_linear(a, ivec({3, 4}));
    CHECK(x == ivec({1, 2}));
    CHECK(a.apply(x) == ivec({3, 4}));

    CHECK_THROWS_AS(solve_linear(a, ivec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("kernel_basis on the stock maps") {
    CHECK(kernel_basis(LinearMap::identity(3, Q)).dim() == 0);
    CHECK(kernel_basis(LinearMap::zero(2, 2, Q)).dim() == 2);

    LinearMap a = from_ints({{1, 1}});
    Subspace k = kernel_basis(a);
    REQUIRE(k.dim() == 1);
    CHECK(is_zero_vec(a.apply(k.basis()[0])));
    CHECK(k == Subspace::span(2, {ivec({1, -1})}, Q));
}

TEST_CASE("rank-nullity on randomized small matrices") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        LinearMap a = random_map(rng, dim(rng), dim(rng));
        CHECK(rank(a) + kernel_basis(a).dim() == a.cols());
        CHECK(image_basis(a).dim() == rank(a));
    }
}

TEST_CASE("tensor_map basics") {
    CHECK(tensor_map(LinearMap::identity(2, Q), LinearMap::identity(3, Q)) == LinearMap::identity(6, Q));
    LinearMap f = from_ints({{1, 2}, {3, 4}});
    CHECK(tensor_map(f, LinearMap::zero(2, 2, Q)).is_zero());
    CHECK(tensor_map(from_ints({{2}}), from_ints({{3}})) == from_ints({{6}}));
}

TEST_CASE("tensor interchange law on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        LinearMap f = random_map(rng, 2, 3), fp = random_map(rng, 3, 2);
        LinearMap g = random_map(rng, 2, 2), gp = random_map(rng, 2, 3);
        CHECK(tensor_map(f, g).compose(tensor_map(fp, gp)) == tensor_map(f.compose(fp), g.compose(gp)));
    }
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        LinearMap f = random_map(rng, 3, 2), g = random_map(rng, 2, 4), h = random_map(rng, 4, 3);
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    }
}

TEST_CASE("quotient_space degenerate cases") {
    QuotientSpace q0 = quotient_space(3, Subspace::span(3, {}, Q));
    CHECK(q0.projection == LinearMap::identity(3, Q));

    QuotientSpace qall = quotient_space(2, Subspace::span(2, {ivec({1, 0}), ivec({0, 1})}, Q));
    CHECK(qall.dim() == 0);
}

TEST_CASE("quotient_space identifies related vectors") {
    QuotientSpace q = quotient_space(2, Subspace::span(2, {ivec({1, -1})}, Q));
    REQUIRE(q.dim() == 1);
    CHECK(q.projection.apply(ivec({1, 0})) == q.projection.apply(ivec({0, 1})));
    CHECK(q.projection.compose(q.section) == LinearMap::identity(1, Q));
}

TEST_CASE("quotient projection kills exactly the relations") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t n = dim(rng);
        std::vector<Vec> rels;
        std::uniform_int_distribution<std::size_t> count(0, 3);
        for (std::size_t i = 0, c = count(rng); i < c; ++i) rels.push_back(random_vec(rng, n));
        Subspace rel = Subspace::span(n, rels, Q);
        QuotientSpace q = quotient_space(n, rel);
        CHECK(q.dim() == n - rel.dim());
        CHECK(q.projection.compose(q.section) == LinearMap::identity(q.dim(), Q));
        CHECK(kernel_basis(q.projection) == rel);
    }
}

TEST_CASE("permutation of tensor factors") {
    // flip on 2⊗3 sends (i,j) to (j,i)
    LinearMap fl = flip_map(2, 3, Q);
    Vec v = kron_vec(ivec({1, 2}), ivec({5, 7, 11}));
    Vec w = fl.apply(v);
    CHECK(w == kron_vec(ivec({5, 7, 11}), ivec({1, 2})));
    CHECK(flip_map(3, 2, Q).compose(fl) == LinearMap::identity(6, Q));
}
