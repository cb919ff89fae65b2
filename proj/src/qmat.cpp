#include "mcm/qmat.hpp"

#include <stdexcept>

namespace mcm {

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("rat_mul: dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatVec rat_apply(const RatMatrix& a, const RatVec& v) {
    if (int(v.size()) != a.cols()) throw std::invalid_argument("rat_apply: dimension mismatch");
    RatVec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

std::vector<int> rat_rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rat_rank(RatMatrix m) { return int(rat_rref(m).size()); }

std::optional<RatVec> rat_solve(const RatMatrix& a, const RatVec& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("rat_solve: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rat_rref(aug);
    for (int p : pivots)
        if (p == a.cols()) return std::nullopt;  // inconsistent row 0...0 | 1
    RatVec x(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), a.cols());
    return x;
}

std::vector<RatVec> rat_nullspace(const RatMatrix& a) {
    RatMatrix m = a;
    auto pivots = rat_rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(a.cols());
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("rat_inverse: square matrix required");
    int n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rat_rref(aug);
    if (int(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace mcm
