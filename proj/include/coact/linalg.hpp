#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coact/scalar.hpp"

namespace coact {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec unit_vec(std::size_t n, std::size_t i, const Field& f);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& a);
bool is_zero_vec(const Vec& a);
/// Kronecker of column vectors: index (i,j) -> i*dim(b)+j, left factor major.
Vec kron_vec(const Vec& a, const Vec& b);

/// Dense exact matrix, acting on column vectors: k^cols -> k^rows.
class LinearMap {
public:
    LinearMap() : rows_(0), cols_(0), field_(Field::rationals()) {}
    LinearMap(std::size_t rows, std::size_t cols, const Field& f);

    static LinearMap identity(std::size_t n, const Field& f);
    static LinearMap zero(std::size_t rows, std::size_t cols, const Field& f) { return LinearMap(rows, cols, f); }
    /// Matrix from rows (each of equal length).
    static LinearMap from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f);
    /// Matrix whose j-th column is cols_v[j].
    static LinearMap from_columns(const std::vector<Vec>& cols_v, std::size_t rows, const Field& f);
    /// Column vector as an n x 1 map.
    static LinearMap column(const Vec& v, const Field& f);
    /// Row vector as a 1 x n map.
    static LinearMap row(const Vec& v, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec apply(const Vec& x) const;
    Vec column_at(std::size_t j) const;

    /// Composition this∘g; defined only when cols() == g.rows().
    LinearMap compose(const LinearMap& g) const;
    LinearMap operator*(const LinearMap& g) const { return compose(g); }
    LinearMap operator+(const LinearMap& g) const;
    LinearMap operator-(const LinearMap& g) const;
    LinearMap scaled(const Scalar& c) const;

    bool operator==(const LinearMap& g) const;
    bool operator!=(const LinearMap& g) const { return !(*this == g); }
    bool is_zero() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

/// Subspace of k^n presented by a linearly independent basis.
class Subspace {
public:
    Subspace() : ambient_(0), field_(Field::rationals()) {}
    Subspace(std::size_t ambient_dim, const Field& f) : ambient_(ambient_dim), field_(f) {}

    /// Reduced span of arbitrary spanning vectors (row echelon, pivots 1).
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors, const Field& f);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const Field& field() const { return field_; }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    std::size_t ambient_;
    Field field_;
    std::vector<Vec> basis_; // rows of an rref matrix
};

/// Presentation of k^n / span(relations): projection p and a section s with
/// p∘s = id on the quotient and ker p = span(relations).  The quotient basis
/// is chosen by greedy pivoting in lexicographic column order.
struct QuotientSpace {
    LinearMap projection; // n -> q
    LinearMap section;    // q -> n
    std::size_t dim() const { return projection.rows(); }
};

std::size_t rank(const LinearMap& a);
std::optional<Vec> solve_linear(const LinearMap& a, const Vec& b);
Subspace kernel_basis(const LinearMap& a);
Subspace image_basis(const LinearMap& a);
bool is_invertible(const LinearMap& a);
/// Two-sided inverse; throws std::invalid_argument if a is not invertible.
LinearMap inverse(const LinearMap& a);

/// Kronecker product f⊗g on the lexicographic tensor basis (left index major).
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& relations);

/// Flip V⊗W -> W⊗V as a permutation matrix.
LinearMap flip_map(std::size_t dim_v, std::size_t dim_w, const Field& f);
/// Permutation of tensor factors: output factor t is input factor perm[t].
LinearMap permute_factors(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm, const Field& f);

} // namespace coact
