#include "mcm/intmat.hpp"

#include <stdexcept>

namespace mcm {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mat_transpose(const IntMatrix& a) {
    IntMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

IntVec mat_apply(const IntMatrix& a, const IntVec& v) {
    if (int(v.size()) != a.cols()) throw std::invalid_argument("mat_apply: dimension mismatch");
    IntVec r(a.rows(), Int(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

Int mat_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_det: square matrix required");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        // Bareiss step: divisions are exact.
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = t;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row_i -= q * row_k
void shear_row(IntMatrix& m, int i, int k, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(k, j);
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMatrix& m, int j) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

// col_j -= q * col_k
void shear_col(IntMatrix& m, int j, int k, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, k);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
    HermiteResult r{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = r.h;
    IntMatrix& u = r.u;
    int pivot_row = 0;
    for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
        // Euclidean elimination below pivot_row in this column.
        for (;;) {
            int best = -1;
            for (int i = pivot_row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best < 0 || int_abs(h.at(i, col)) < int_abs(h.at(best, col))) best = i;
            }
            if (best < 0) break;  // column clear below pivot_row
            swap_rows(h, pivot_row, best);
            swap_rows(u, pivot_row, best);
            if (h.at(pivot_row, col) < 0) {
                negate_row(h, pivot_row);
                negate_row(u, pivot_row);
            }
            bool reduced_all = true;
            for (int i = pivot_row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = fdiv_q(h.at(i, col), h.at(pivot_row, col));
                shear_row(h, i, pivot_row, q);
                shear_row(u, i, pivot_row, q);
                if (h.at(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (pivot_row < h.rows() && h.at(pivot_row, col) != 0) {
            // Normalize: pivot positive, entries above reduced into [0, pivot).
            if (h.at(pivot_row, col) < 0) {
                negate_row(h, pivot_row);
                negate_row(u, pivot_row);
            }
            for (int i = 0; i < pivot_row; ++i) {
                Int q = fdiv_q(h.at(i, col), h.at(pivot_row, col));
                shear_row(h, i, pivot_row, q);
                shear_row(u, i, pivot_row, q);
            }
            ++pivot_row;
        }
    }
    return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = r.d;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    int n = std::min(d.rows(), d.cols());
    for (int t = 0; t < n; ++t) {
        // Find the absolutely smallest nonzero entry of the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi < 0 || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(d, t, pi), swap_rows(u, t, pi);
        swap_cols(d, t, pj), swap_cols(v, t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = fdiv_q(d.at(i, t), d.at(t, t));
                shear_row(d, i, t, q), shear_row(u, i, t, q);
                if (d.at(i, t) != 0) {
                    swap_rows(d, t, i), swap_rows(u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = fdiv_q(d.at(t, j), d.at(t, t));
                shear_col(d, j, t, q), shear_col(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j), swap_cols(v, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Row and column are clear.  Enforce that the pivot divides the
            // whole trailing block; if not, fold the offending row in and
            // restart the elimination for this pivot.
            bool divides = true;
            for (int i = t + 1; i < d.rows() && divides; ++i)
                for (int j = t + 1; j < d.cols() && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        for (int jj = 0; jj < d.cols(); ++jj) d.at(t, jj) += d.at(i, jj);
                        for (int jj = 0; jj < u.cols(); ++jj) u.at(t, jj) += u.at(i, jj);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) { negate_row(d, t); negate_row(u, t); }
    }
    return r;
}

int mat_rank(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    int r = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { nz = true; break; }
        if (nz) ++r;
    }
    return r;
}

IntMatrix row_lattice_canonical(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    std::vector<IntVec> keep;
    for (int i = 0; i < h.rows(); ++i) {
        IntVec row = h.row(i);
        if (!vec_is_zero(row)) keep.push_back(row);
    }
    IntMatrix r = IntMatrix::from_rows(keep);
    if (keep.empty()) r = IntMatrix(0, m.cols());
    return r;
}

bool lattice_equal(const IntMatrix& rows_a, const IntMatrix& rows_b) {
    if (rows_a.cols() != rows_b.cols()) return false;
    return row_lattice_canonical(rows_a) == row_lattice_canonical(rows_b);
}

IntMatrix kernel_lattice_basis(const IntMatrix& m) {
    // Row-reduce m^T with transform: rows of U matching zero rows of H
    // form a basis of { v : m v = 0 }.
    IntMatrix mt = mat_transpose(m);
    HermiteResult hr = hermite_normal_form(mt);
    std::vector<IntVec> basis;
    for (int i = 0; i < hr.h.rows(); ++i) {
        if (vec_is_zero(hr.h.row(i))) basis.push_back(hr.u.row(i));
    }
    IntMatrix b = IntMatrix::from_rows(basis);
    if (basis.empty()) b = IntMatrix(0, m.cols());
    return row_lattice_canonical(b);
}

}  // namespace mcm
