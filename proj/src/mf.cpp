#include "mcm/mf.hpp"

#include <sstream>
#include <stdexcept>

#include "mcm/groebner.hpp"

namespace mcm {

namespace {

// Enumerate all k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return out;
        }
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
    PolyMatrix s(m.field(), rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

}  // namespace

PolyMatrix PolyMatrix::from_rows(const NumberField& field,
                                 const std::vector<std::vector<Poly>>& rows) {
    if (rows.empty()) return PolyMatrix(field, 0, 0);
    size_t cols = rows.front().size();
    PolyMatrix m(field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("PolyMatrix::from_rows: ragged rows");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j].into_field(field);
    }
    return m;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("pm_mul: size mismatch");
    PolyMatrix c(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            Poly s = Poly::zero(a.field());
            for (size_t k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

PolyMatrix pm_diag(const NumberField& field, const std::vector<Poly>& diagonal) {
    PolyMatrix m(field, diagonal.size(), diagonal.size());
    for (size_t i = 0; i < diagonal.size(); ++i) m.at(i, i) = diagonal[i].into_field(field);
    return m;
}

Poly pm_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pm_det: not square");
    size_t n = m.rows();
    if (n == 0) return Poly::rational(m.field(), Rat(1));
    if (n == 1) return m.at(0, 0);
    Poly det = Poly::zero(m.field());
    // Laplace expansion along the first row.
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<size_t> rows, cols;
        for (size_t i = 1; i < n; ++i) rows.push_back(i);
        for (size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Poly minor = pm_det(submatrix(m, rows, cols));
        Poly term = m.at(0, j) * minor;
        if (j % 2 == 1) term = Poly::rational(m.field(), Rat(-1)) * term;
        det = det + term;
    }
    return det;
}

size_t pm_rank(const PolyMatrix& m) {
    size_t bound = std::min(m.rows(), m.cols());
    for (size_t k = bound; k >= 1; --k) {
        for (const auto& r : subsets(m.rows(), k))
            for (const auto& c : subsets(m.cols(), k))
                if (!pm_det(submatrix(m, r, c)).is_zero()) return k;
    }
    return 0;
}

PolyMatrix pm_substitute(const PolyMatrix& m, const Poly& xv, const Poly& yv,
                         const Poly& tv) {
    PolyMatrix out(xv.field(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, j).substitute(xv, yv, tv);
    return out;
}

MFCheck verify_mf(const Poly& f, const PolyMatrix& phi, const PolyMatrix& psi) {
    MFCheck check;
    if (phi.rows() != phi.cols() || psi.rows() != psi.cols() ||
        phi.rows() != psi.rows()) {
        check.detail = "matrices must be square and of equal size";
        return check;
    }
    size_t n = phi.rows();
    std::vector<Poly> diag(n, f.into_field(phi.field()));
    PolyMatrix target = pm_diag(phi.field(), diag);
    PolyMatrix ab = pm_mul(phi, psi);
    PolyMatrix ba = pm_mul(psi, phi);
    check.phi_psi_ok = (ab == target);
    check.psi_phi_ok = (ba == target);
    if (!check.phi_psi_ok)
        check.detail = "phi*psi != f*I; got " + ab.to_string();
    else if (!check.psi_phi_ok)
        check.detail = "psi*phi != f*I; got " + ba.to_string();
    return check;
}

bool is_reduced_mf(const PolyMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).constant_term().is_zero()) return false;
    return true;
}

std::vector<Poly> fitting_ideal(const PolyMatrix& m, size_t k) {
    if (k == 0) return {Poly::rational(m.field(), Rat(1))};
    if (k > std::min(m.rows(), m.cols())) return {};
    std::vector<Poly> minors;
    for (const auto& r : subsets(m.rows(), k))
        for (const auto& c : subsets(m.cols(), k)) {
            Poly d = pm_det(submatrix(m, r, c));
            if (!d.is_zero()) minors.push_back(d);
        }
    return groebner_basis(minors);
}

std::vector<NamedMF> two_branch_family(const NumberField& k, int n) {
    if (k.dim() < 2) throw std::invalid_argument("two_branch_family: need a quadratic generator");
    if (n < 0) throw std::invalid_argument("two_branch_family: n must be nonnegative");
    Poly x = Poly::variable(k, 'x');
    Poly y = Poly::variable(k, 'y');
    Poly xi = Poly::constant(k.gen1());
    Poly xi2 = xi * xi;
    Poly f = x * x - xi2 * poly_pow(y, 2 * n + 2);
    Poly neg1 = Poly::rational(k, Rat(-1));

    std::vector<NamedMF> out;
    for (int j = 1; j <= 2 * n + 2; ++j) {
        Poly yj = poly_pow(y, j);
        Poly yc = poly_pow(y, 2 * n + 2 - j);
        PolyMatrix phi = PolyMatrix::from_rows(k, {{neg1 * xi2 * yc, x}, {x, neg1 * yj}});
        PolyMatrix psi = PolyMatrix::from_rows(k, {{yj, x}, {x, xi2 * yc}});
        out.push_back({"phi_" + std::to_string(j), f, phi, psi, IntVec{1, 1}});
    }
    return out;
}

std::vector<NamedMF> three_branch_family(const NumberField& k, int n) {
    if (k.dim() < 2) throw std::invalid_argument("three_branch_family: need a quadratic generator");
    if (n < 1) throw std::invalid_argument("three_branch_family: n must be positive");
    Poly x = Poly::variable(k, 'x');
    Poly y = Poly::variable(k, 'y');
    Poly xi = Poly::constant(k.gen1());
    Poly xi2 = xi * xi;
    Poly neg1 = Poly::rational(k, Rat(-1));
    Poly xmy = x - y;
    Poly yn = poly_pow(y, n);
    Poly f = xmy * (xi2 * poly_pow(y, 2 * n) - x * x);

    std::vector<NamedMF> out;
    for (int j = 1; j <= n; ++j) {
        Poly yj1 = poly_pow(y, j - 1);
        Poly yc = poly_pow(y, 2 * n + 1 - j);
        PolyMatrix alpha =
            PolyMatrix::from_rows(k, {{xi2 * yc, x * xmy}, {x, yj1 * xmy}});
        PolyMatrix beta =
            PolyMatrix::from_rows(k, {{yj1 * xmy, neg1 * x * xmy}, {neg1 * x, xi2 * yc}});
        out.push_back({"alpha_" + std::to_string(j), f, alpha, beta, IntVec{1, 1, 1}});
        out.push_back({"beta_" + std::to_string(j), f, beta, alpha, IntVec{1, 1, 1}});
    }
    for (int i = 1; i <= n - 1; ++i) {
        Poly yi = poly_pow(y, i);
        Poly yc = poly_pow(y, 2 * n - i);
        PolyMatrix phi = PolyMatrix::from_rows(k, {{xi2 * yc, x}, {x, yi}});
        PolyMatrix psi = PolyMatrix::from_rows(
            k, {{yi * xmy, neg1 * x * xmy}, {neg1 * x * xmy, xi2 * yc * xmy}});
        out.push_back({"phi_" + std::to_string(i), f, phi, psi, IntVec{0, 1, 1}});
        out.push_back({"psi_" + std::to_string(i), f, psi, phi, IntVec{2, 1, 1}});
    }

    Poly a = xmy;
    Poly b = xi * yn - x;
    Poly c = xi * yn + x;
    Poly fa = xi2 * poly_pow(y, 2 * n) - x * x;  // cofactor of a: b*c
    Poly eb = xmy * c;                           // cofactor of b
    Poly dc = xmy * b;                           // cofactor of c
    auto one_by_one = [&](const std::string& name, const Poly& g, const Poly& cof,
                          IntVec rank) {
        out.push_back({name, f, PolyMatrix::from_rows(k, {{g}}),
                       PolyMatrix::from_rows(k, {{cof}}), rank});
    };
    one_by_one("A", a, fa, IntVec{1, 0, 0});
    one_by_one("B", b, eb, IntVec{0, 1, 0});
    one_by_one("C", c, dc, IntVec{0, 0, 1});
    one_by_one("D", dc, c, IntVec{1, 1, 0});
    one_by_one("E", eb, b, IntVec{1, 0, 1});
    one_by_one("F", fa, a, IntVec{0, 1, 1});
    return out;
}

std::vector<NamedMF> cubic_family(const NumberField& f, const Rat& a, const Rat& b,
                                  const Rat& c) {
    Poly x = Poly::variable(f, 'x');
    Poly y = Poly::variable(f, 'y');
    Poly pa = Poly::rational(f, a);
    Poly pb = Poly::rational(f, b);
    Poly pc = Poly::rational(f, c);
    Poly neg1 = Poly::rational(f, Rat(-1));
    Poly eq = y * y * y + pa * y * y * x + pb * y * x * x + pc * x * x * x;
    PolyMatrix phi = PolyMatrix::from_rows(
        f, {{y * y, x * x}, {neg1 * (pb * y + pc * x), y + pa * x}});
    PolyMatrix psi = PolyMatrix::from_rows(
        f, {{y + pa * x, neg1 * x * x}, {pb * y + pc * x, y * y}});
    return {{"phi", eq, phi, psi, IntVec{1, 1, 1}}};
}

}  // namespace mcm
