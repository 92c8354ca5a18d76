#pragma once

// Template definitions for linalg.hpp.

#include <algorithm>

namespace harmonia {

template <class F>
Matrix<F> Matrix<F>::from_dense(const std::vector<std::vector<F>>& dense) {
    Matrix m(dense.empty() ? 0 : dense.front().size());
    for (const auto& r : dense) m.add_dense_row(r);
    return m;
}

template <class F>
Matrix<F> Matrix<F>::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.add_row({{i, F(1)}});
    return m;
}

template <class F>
void Matrix<F>::add_row(std::vector<std::pair<std::size_t, F>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow<F> row;
    row.reserve(entries.size());
    for (auto& [c, v] : entries) {
        if (c >= cols_) throw std::out_of_range("Matrix::add_row: column out of range");
        if (!row.empty() && row.back().first == c)
            row.back().second += v;
        else
            row.emplace_back(c, std::move(v));
    }
    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
    rows_.push_back(std::move(row));
}

template <class F>
void Matrix<F>::add_dense_row(const std::vector<F>& row) {
    if (row.size() != cols_) throw std::invalid_argument("Matrix::add_dense_row: width mismatch");
    SparseRow<F> r;
    for (std::size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) r.emplace_back(c, row[c]);
    rows_.push_back(std::move(r));
}

template <class F>
F Matrix<F>::at(std::size_t r, std::size_t c) const {
    for (const auto& [col, v] : rows_[r])
        if (col == c) return v;
    return F(0);
}

template <class F>
std::vector<std::vector<F>> Matrix<F>::to_dense() const {
    std::vector<std::vector<F>> d(rows_.size(), std::vector<F>(cols_, F(0)));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) d[r][c] = v;
    return d;
}

template <class F>
Vec<F> Matrix<F>::apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec<F> out(rows_.size(), F(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, x] : rows_[r])
            if (!v[c].is_zero()) out[r] += x * v[c];
    return out;
}

namespace detail {

// row -= factor * pivot_row, both sparse and sorted.
template <class F>
SparseRow<F> axpy(const SparseRow<F>& row, const F& factor, const SparseRow<F>& pivot_row) {
    SparseRow<F> out;
    out.reserve(row.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
            out.emplace_back(pivot_row[j].first, -(factor * pivot_row[j].second));
            ++j;
        } else {
            F v = row[i].second - factor * pivot_row[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
void check_field(const Matrix<F>& a) {
    if constexpr (std::is_same_v<F, Cyclo>) {
        int order = 0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (const auto& [c, v] : a.row(r)) {
                if (v.order() == 0) continue;
                if (order == 0)
                    order = v.order();
                else if (order != v.order())
                    throw FieldMismatch("matrix entries from different cyclotomic fields");
            }
    }
}

}  // namespace detail

template <class F>
Echelon<F> echelon(const Matrix<F>& a) {
    detail::check_field(a);
    Echelon<F> e;
    e.cols = a.cols();
    std::map<std::size_t, SparseRow<F>> piv;  // pivot column -> row (leading 1, echelon only)
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseRow<F> row = a.row(r);
        std::size_t k = 0;
        while (k < row.size()) {
            auto it = piv.find(row[k].first);
            if (it == piv.end()) {
                ++k;
                continue;
            }
            F factor = row[k].second;
            row = detail::axpy(row, factor, it->second);
            // entries before k are untouched (pivot rows only have columns >= their pivot)
        }
        if (row.empty()) continue;
        F inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        piv.emplace(row.front().first, std::move(row));
    }
    // Back substitution: reduce each pivot row by the pivots to its right.
    std::vector<std::size_t> cols;
    for (const auto& [c, _] : piv) cols.push_back(c);
    for (std::size_t idx = cols.size(); idx-- > 0;) {
        SparseRow<F>& row = piv[cols[idx]];
        std::size_t k = 1;
        while (k < row.size()) {
            auto it = piv.find(row[k].first);
            if (it == piv.end() || it->first == cols[idx]) {
                ++k;
                continue;
            }
            F factor = row[k].second;
            row = detail::axpy(row, factor, it->second);
        }
    }
    for (auto& [c, row] : piv) {
        e.pivots.push_back(c);
        e.rows.push_back(std::move(row));
    }
    return e;
}

template <class F>
std::vector<Vec<F>> Echelon<F>::kernel() const {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(cols, F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (const auto& [c, x] : rows[i])
                if (c == f) v[pivots[i]] = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::vector<Vec<F>> nullspace_exact(const Matrix<F>& a) {
    return echelon(a).kernel();
}

template <class F>
std::optional<Vec<F>> solve_exact(const Matrix<F>& a, const Vec<F>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix<F> aug(a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<std::pair<std::size_t, F>> row(a.row(r).begin(), a.row(r).end());
        if (!b[r].is_zero()) row.emplace_back(a.cols(), b[r]);
        aug.add_row(std::move(row));
    }
    Echelon<F> e = echelon(aug);
    Vec<F> x(a.cols(), F(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        for (const auto& [c, v] : e.rows[i])
            if (c == a.cols()) x[e.pivots[i]] = v;
    }
    return x;
}

template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& a) {
    if constexpr (std::is_same_v<F, Rational>) {
        if (a.cols() > kMultimodularThreshold) return nullspace_multimodular(a);
    }
    return nullspace_exact(a);
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    if constexpr (std::is_same_v<F, Rational>) {
        if (a.cols() > kMultimodularThreshold) return a.cols() - nullspace_multimodular(a).size();
    }
    return echelon(a).rank();
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
    if constexpr (std::is_same_v<F, Rational>) {
        if (a.cols() > kMultimodularThreshold) return solve_multimodular(a, b);
    }
    return solve_exact(a, b);
}

}  // namespace harmonia
