#include "coact/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace coact {

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, const Field& f) {
    Vec v = zero_vec(n, f);
    v.at(i) = Scalar::one(f);
    return v;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = c * x;
    return r;
}

bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Vec kron_vec(const Vec& a, const Vec& b) {
    Vec r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

LinearMap::LinearMap(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

LinearMap LinearMap::identity(std::size_t n, const Field& f) {
    LinearMap m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

LinearMap LinearMap::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
    LinearMap m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

LinearMap LinearMap::from_columns(const std::vector<Vec>& cols_v, std::size_t rows, const Field& f) {
    LinearMap m(rows, cols_v.size(), f);
    for (std::size_t j = 0; j < cols_v.size(); ++j) {
        if (cols_v[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols_v[j][i];
    }
    return m;
}

LinearMap LinearMap::column(const Vec& v, const Field& f) { return from_columns({v}, v.size(), f); }

LinearMap LinearMap::row(const Vec& v, const Field& f) { return from_rows({v}, v.size(), f); }

Vec LinearMap::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vec y = zero_vec(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& aij = at(i, j);
            if (!aij.is_zero() && !x[j].is_zero()) s += aij * x[j];
        }
        y[i] = s;
    }
    return y;
}

Vec LinearMap::column_at(std::size_t j) const {
    Vec v = zero_vec(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (cols_ != g.rows_) throw std::invalid_argument("dimension mismatch in composition");
    LinearMap r(rows_, g.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < g.cols_; ++j) {
                const Scalar& gkj = g.at(k, j);
                if (!gkj.is_zero()) r.at(i, j) += aik * gkj;
            }
        }
    return r;
}

LinearMap LinearMap::operator+(const LinearMap& g) const {
    if (rows_ != g.rows_ || cols_ != g.cols_) throw std::invalid_argument("dimension mismatch in sum");
    LinearMap r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + g.a_[i];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& g) const {
    if (rows_ != g.rows_ || cols_ != g.cols_) throw std::invalid_argument("dimension mismatch in difference");
    LinearMap r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - g.a_[i];
    return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
    LinearMap r = *this;
    for (auto& x : r.a_) x = c * x;
    return r;
}

bool LinearMap::operator==(const LinearMap& g) const {
    if (rows_ != g.rows_ || cols_ != g.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != g.a_[i]) return false;
    return true;
}

bool LinearMap::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string LinearMap::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

struct Echelon {
    std::vector<Vec> rows;         // nonzero rows in rref
    std::vector<std::size_t> pivots; // pivot column per row, strictly increasing
};

// Reduced row echelon form with leftmost pivots (greedy lexicographic).
Echelon rref(std::vector<Vec> rows, std::size_t ncols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][c].inverse();
        rows[r] = scale_vec(inv, rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            rows[i] = sub_vec(rows[i], scale_vec(factor, rows[r]));
        }
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

std::vector<Vec> matrix_rows(const LinearMap& a) {
    std::vector<Vec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec r(a.cols(), Scalar::zero(a.field()));
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] = a.at(i, j);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors, const Field& f) {
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw std::invalid_argument("spanning vector has wrong ambient dimension");
    Echelon e = rref(vectors, ambient_dim);
    Subspace s(ambient_dim, f);
    s.basis_ = std::move(e.rows);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong ambient dimension");
    // reduce v against the rref basis
    Vec w = v;
    for (const auto& row : basis_) {
        std::size_t p = 0;
        while (p < ambient_ && row[p].is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) w = sub_vec(w, scale_vec(w[p], row));
    }
    return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && contains(other) && other.contains(*this);
}

std::size_t rank(const LinearMap& a) {
    return rref(matrix_rows(a), a.cols()).rows.size();
}

std::optional<Vec> solve_linear(const LinearMap& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch: |b| != rows(A)");
    const Field& f = a.field();
    // eliminate on [A | b]
    std::vector<Vec> rows = matrix_rows(a);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    Echelon e = rref(std::move(rows), a.cols() + 1);
    Vec x = zero_vec(a.cols(), f);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt; // row (0..0 | 1): inconsistent
        x[e.pivots[i]] = e.rows[i][a.cols()];
    }
    return x;
}

Subspace kernel_basis(const LinearMap& a) {
    const Field& f = a.field();
    Echelon e = rref(matrix_rows(a), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(a.cols(), f);
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][c];
        basis.push_back(std::move(v));
    }
    return Subspace::span(a.cols(), basis, f);
}

Subspace image_basis(const LinearMap& a) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column_at(j));
    return Subspace::span(a.rows(), cols, a.field());
}

bool is_invertible(const LinearMap& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

LinearMap inverse(const LinearMap& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square map");
    const std::size_t n = a.rows();
    const Field& f = a.field();
    std::vector<Vec> rows = matrix_rows(a);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ext = unit_vec(n, i, f);
        rows[i].insert(rows[i].end(), ext.begin(), ext.end());
    }
    Echelon e = rref(std::move(rows), 2 * n);
    if (e.rows.size() != n || e.pivots.back() >= n) throw std::invalid_argument("map is singular");
    LinearMap r(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = e.rows[i][n + j];
    return r;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    LinearMap r(f.rows() * g.rows(), f.cols() * g.cols(), f.field());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < f.cols(); ++k) {
            const Scalar& fik = f.at(i, k);
            if (fik.is_zero()) continue;
            for (std::size_t j = 0; j < g.rows(); ++j)
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& gjl = g.at(j, l);
                    if (!gjl.is_zero()) r.at(i * g.rows() + j, k * g.cols() + l) = fik * gjl;
                }
        }
    return r;
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& relations) {
    if (relations.ambient_dim() != ambient_dim)
        throw std::invalid_argument("relations do not live in the ambient space");
    const Field& f = relations.field();
    Echelon e = rref(relations.basis(), ambient_dim);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const std::size_t q = free_cols.size();
    LinearMap proj(q, ambient_dim, f), sect(ambient_dim, q, f);
    for (std::size_t k = 0; k < q; ++k) {
        proj.at(k, free_cols[k]) = Scalar::one(f);
        sect.at(free_cols[k], k) = Scalar::one(f);
    }
    // a pivot basis vector maps to minus the free part of its rref row
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        for (std::size_t k = 0; k < q; ++k) proj.at(k, e.pivots[i]) = -e.rows[i][free_cols[k]];
    return QuotientSpace{std::move(proj), std::move(sect)};
}

LinearMap flip_map(std::size_t dim_v, std::size_t dim_w, const Field& f) {
    return permute_factors({dim_v, dim_w}, {1, 0}, f);
}

LinearMap permute_factors(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm, const Field& f) {
    if (dims.size() != perm.size()) throw std::invalid_argument("permutation length mismatch");
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    LinearMap r(total, total, f);
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t in = 0; in < total; ++in) {
        // decompose: leftmost factor major
        std::size_t rest = in;
        for (std::size_t t = dims.size(); t-- > 0;) {
            idx[t] = rest % dims[t];
            rest /= dims[t];
        }
        std::size_t out = 0;
        for (std::size_t t = 0; t < perm.size(); ++t) out = out * dims[perm[t]] + idx[perm[t]];
        r.at(out, in) = Scalar::one(f);
    }
    return r;
}

} // namespace coact
