#include "agc/linalg.hpp"

#include <algorithm>

namespace agc {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        FieldElement inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldElement f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return (int)rref(m).size(); }

Matrix kernel_basis(const Matrix& m, int ncols, const LevelPtr& level) {
    Matrix a = m;
    for (auto& row : a) check_internal((int)row.size() == ncols, "ragged matrix");
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        Row v((size_t)ncols, FieldElement::zero(level));
        v[c] = FieldElement::one(level);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const Matrix& basis, const Row& v, const LevelPtr& level) {
    Matrix m = basis;
    m.push_back(v);
    return rank(std::move(m)) == rank(basis);
}

Matrix complement_basis(const Matrix& v, const Matrix& w, const LevelPtr& level) {
    Matrix acc = w;
    int base_rank = rank(acc);
    Matrix out;
    for (auto& row : v) {
        acc.push_back(row);
        int r = rank(acc);
        if (r > base_rank) {
            out.push_back(row);
            base_rank = r;
        } else {
            acc.pop_back();
        }
    }
    return out;
}

bool orthogonal(const Matrix& a, const Matrix& b, const LevelPtr& level) {
    for (auto& x : a)
        for (auto& y : b) {
            FieldElement s = FieldElement::zero(level);
            check_internal(x.size() == y.size(), "dimension mismatch");
            for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
            if (!s.is_zero()) return false;
        }
    return true;
}

} // namespace agc
