#pragma once

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "mcm/bigint.hpp"

namespace mcm {

// Dense row-major arbitrary-precision integer matrix.  Dimensions may be
// zero in either direction; a 0 x n matrix is a legitimate value (empty
// equation system over n variables).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Int(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            if (int(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
            for (long x : row) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }
    const Int& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }

    IntVec row(int i) const {
        IntVec v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    IntVec col(int j) const {
        IntVec v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_transpose(const IntMatrix& a);
IntVec mat_apply(const IntMatrix& a, const IntVec& v);  // a * v

// Exact determinant (fraction-free Bareiss elimination); square input.
Int mat_det(const IntMatrix& a);

struct HermiteResult {
    IntMatrix h;  // row-style Hermite normal form of the input
    IntMatrix u;  // unimodular, u * input == h
};

// Canonical row HNF: pivot columns strictly increase, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows at bottom.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
    IntMatrix d;  // diagonal, d_1 | d_2 | ... | d_r, zeros afterwards
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform, u * input * v == d
};

SmithResult smith_normal_form(const IntMatrix& m);

// Rank over Q (= number of nonzero rows of the HNF).
int mat_rank(const IntMatrix& m);

// Canonical basis (rows, in HNF, zero rows dropped) of
// { v in Z^cols : m * v = 0 }.
IntMatrix kernel_lattice_basis(const IntMatrix& m);

// Canonical form of the lattice spanned by the rows: HNF with zero rows
// dropped.  Two row sets span the same lattice iff these forms coincide.
IntMatrix row_lattice_canonical(const IntMatrix& m);

bool lattice_equal(const IntMatrix& rows_a, const IntMatrix& rows_b);

}  // namespace mcm
