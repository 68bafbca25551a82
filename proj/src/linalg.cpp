#include "svmod/linalg.hpp"

namespace svmod {

size_t rref(RatMatrix& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

size_t rank(RatMatrix m) { return rref(m); }

std::vector<std::vector<Scalar>> kernel_basis(const RatMatrix& m, size_t cols) {
    RatMatrix red = m;
    for (auto& row : red)
        if (row.size() != cols) throw std::invalid_argument("kernel_basis: ragged matrix");
    size_t r = rref(red);
    // locate pivot columns
    std::vector<long> pivot_of_col(cols, -1);
    size_t ri = 0;
    std::vector<size_t> pivot_cols;
    for (size_t c = 0; c < cols && ri < r; ++c) {
        if (!red[ri][c].is_zero()) {
            pivot_of_col[c] = static_cast<long>(ri);
            pivot_cols.push_back(c);
            ++ri;
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[c] = Scalar(1);
        for (size_t k = 0; k < pivot_cols.size(); ++k)
            v[pivot_cols[k]] = -red[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace svmod
