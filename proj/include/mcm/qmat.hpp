#pragma once

#include <optional>
#include <vector>

#include "mcm/bigint.hpp"

namespace mcm {

using RatVec = std::vector<Rat>;

// Dense exact rational matrix with just enough linear algebra for the
// solvers in this project (all sizes are small).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatVec rat_apply(const RatMatrix& a, const RatVec& v);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rat_rref(RatMatrix& m);

int rat_rank(RatMatrix m);

// One solution of A x = b, if consistent.
std::optional<RatVec> rat_solve(const RatMatrix& a, const RatVec& b);

// Basis of { x : A x = 0 }.
std::vector<RatVec> rat_nullspace(const RatMatrix& a);

// Inverse of a square nonsingular matrix (nullopt if singular).
std::optional<RatMatrix> rat_inverse(const RatMatrix& a);

}  // namespace mcm
