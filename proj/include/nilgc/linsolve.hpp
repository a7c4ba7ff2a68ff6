#pragma once

// Exact linear algebra over Q(i) and over polynomial rings with certified pivots.
//
// Elimination is Gauss-Jordan with unit pivots. Over Q(i) every nonzero entry
// is a unit; over ParamPolynomial only nonzero constants are, and a column
// whose remaining entries are all nonzero but parameter-dependent raises
// PivotAmbiguous so the caller can split cases explicitly.

#include "nilgc/scalars.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilgc {

class PivotAmbiguous : public std::runtime_error {
public:
    PivotAmbiguous(std::size_t column, const std::string& entry)
        : std::runtime_error("pivot in column " + std::to_string(column) + " is parameter-dependent: " + entry),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<R> apply(const std::vector<R>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
        std::vector<R> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero((*this)(r, c)) && !is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    std::vector<R> column(std::size_t c) const {
        std::vector<R> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <class R>
struct AffineSolution {
    std::vector<R> particular;
    std::vector<std::vector<R>> null_basis;
};

namespace detail {

inline std::string to_text(const GaussianRational& z) { return z.to_string(); }
inline std::string to_text(const ParamPolynomial& p) { return p.to_string(); }

template <class R>
struct Reduced {
    std::vector<std::vector<R>> rows;  // augmented when an rhs was supplied
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot;
};

// Reduced row echelon form of the first `cols` columns; any further columns ride along.
template <class R>
Reduced<R> reduce(std::vector<std::vector<R>> rows, std::size_t cols) {
    Reduced<R> out;
    out.is_pivot.assign(cols, false);
    std::size_t next = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        bool saw_nonzero = false;
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (is_zero(rows[r][c])) continue;
            saw_nonzero = true;
            if (is_unit(rows[r][c])) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) {
            if (saw_nonzero) {
                for (std::size_t r = next; r < rows.size(); ++r)
                    if (!is_zero(rows[r][c])) throw PivotAmbiguous(c, to_text(rows[r][c]));
            }
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        auto& prow = rows[next];
        const R inv = inverse(prow[c]);
        support.clear();
        for (std::size_t k = c; k < prow.size(); ++k) {
            if (is_zero(prow[k])) continue;
            prow[k] = prow[k] * inv;
            support.push_back(k);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || is_zero(rows[r][c])) continue;
            const R factor = rows[r][c];
            for (std::size_t k : support) rows[r][k] -= factor * prow[k];
        }
        out.pivot_cols.push_back(c);
        out.is_pivot[c] = true;
        ++next;
    }
    out.rows = std::move(rows);
    return out;
}

template <class R>
std::vector<std::vector<R>> rows_of(const Matrix<R>& a) {
    std::vector<std::vector<R>> rows(a.rows(), std::vector<R>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
    return rows;
}

template <class R>
std::vector<std::vector<R>> null_basis_from(const Reduced<R>& red, std::size_t cols) {
    std::vector<std::vector<R>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (red.is_pivot[f]) continue;
        std::vector<R> v(cols);
        v[f] = R(1);
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
            if (!is_zero(red.rows[k][f])) v[red.pivot_cols[k]] = -red.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Solves a x = rhs (rhs absent means the homogeneous system). Returns
/// std::nullopt when rhs is not in the column span. Throws PivotAmbiguous for
/// parameter-dependent pivots.
template <class R>
std::optional<AffineSolution<R>> solve_linear(const Matrix<R>& a, const std::optional<std::vector<R>>& rhs = {}) {
    const std::size_t cols = a.cols();
    auto rows = detail::rows_of(a);
    if (rhs) {
        if (rhs->size() != a.rows()) throw std::invalid_argument("rhs length does not match matrix rows");
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back((*rhs)[r]);
    }
    auto red = detail::reduce(std::move(rows), cols);
    AffineSolution<R> sol;
    sol.particular.assign(cols, R{});
    if (rhs) {
        for (std::size_t r = red.pivot_cols.size(); r < red.rows.size(); ++r)
            if (!is_zero(red.rows[r][cols])) return std::nullopt;
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) sol.particular[red.pivot_cols[k]] = red.rows[k][cols];
    }
    sol.null_basis = detail::null_basis_from(red, cols);
    return sol;
}

template <class R>
std::vector<std::vector<R>> null_space(const Matrix<R>& a) {
    return solve_linear(a)->null_basis;
}

template <class R>
std::size_t rank(const Matrix<R>& a) {
    return detail::reduce(detail::rows_of(a), a.cols()).pivot_cols.size();
}

/// Incrementally built span of vectors, kept fully reduced for membership tests.
template <class R>
class RowSpace {
public:
    explicit RowSpace(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }
    std::size_t dimension() const { return rows_.size(); }

    /// Residual of v after reduction by the current basis (zero iff v is in the span).
    std::vector<R> residual(std::vector<R> v) const {
        if (v.size() != length_) throw std::invalid_argument("vector length mismatch in RowSpace");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (is_zero(v[p])) continue;
            const R factor = v[p];
            for (std::size_t c : support_[k]) v[c] -= factor * rows_[k][c];
        }
        return v;
    }

    bool contains(const std::vector<R>& v) const {
        auto r = residual(v);
        for (const auto& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    /// Adds v; returns false if it was already in the span.
    bool insert(const std::vector<R>& v) {
        auto r = residual(v);
        std::size_t p = length_;
        for (std::size_t c = 0; c < length_; ++c) {
            if (is_unit(r[c])) {
                p = c;
                break;
            }
            if (!is_zero(r[c])) throw PivotAmbiguous(c, detail::to_text(r[c]));
        }
        if (p == length_) return false;
        const R inv = inverse(r[p]);
        std::vector<std::size_t> sup;
        for (std::size_t c = 0; c < length_; ++c) {
            if (is_zero(r[c])) continue;
            r[c] = r[c] * inv;
            sup.push_back(c);
        }
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (is_zero(rows_[k][p])) continue;
            const R factor = rows_[k][p];
            for (std::size_t c : sup) rows_[k][c] -= factor * r[c];
            support_[k].clear();
            for (std::size_t c = 0; c < length_; ++c)
                if (!is_zero(rows_[k][c])) support_[k].push_back(c);
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        support_.push_back(std::move(sup));
        return true;
    }

    const std::vector<std::vector<R>>& basis() const { return rows_; }

private:
    std::size_t length_;
    std::vector<std::vector<R>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;
};

}  // namespace nilgc
