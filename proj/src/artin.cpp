#include "mcm/artin.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mcm {

namespace {

// ---------- generic matrix / subspace helpers ----------

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

RatVec concat(const RatVec& x, const RatVec& y) {
    RatVec r = x;
    r.insert(r.end(), y.begin(), y.end());
    return r;
}

RatMatrix rows_to_matrix(const std::vector<RatVec>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return m;
}

// Canonical (rref) basis of the row space.
std::vector<RatVec> row_basis(const std::vector<RatVec>& rows, int cols) {
    if (rows.empty()) return {};
    RatMatrix m = rows_to_matrix(rows, cols);
    std::vector<int> pivots = rat_rref(m);
    std::vector<RatVec> out;
    for (size_t i = 0; i < pivots.size(); ++i) {
        RatVec r(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) r[static_cast<size_t>(j)] = m.at(static_cast<int>(i), j);
        out.push_back(std::move(r));
    }
    return out;
}

int row_rank(const std::vector<RatVec>& rows, int cols) {
    if (rows.empty()) return 0;
    return rat_rank(rows_to_matrix(rows, cols));
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
    int cols = static_cast<int>(v.size());
    if (basis.empty()) {
        for (const Rat& c : v)
            if (c != 0) return false;
        return true;
    }
    // columns = basis vectors
    RatMatrix a(cols, static_cast<int>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < cols; ++i) a.at(i, static_cast<int>(k)) = basis[k][static_cast<size_t>(i)];
    return rat_solve(a, v).has_value();
}

bool subspace_equal(const std::vector<RatVec>& a, const std::vector<RatVec>& b, int cols) {
    return row_basis(a, cols) == row_basis(b, cols);
}

// Intersection of two row spaces.
std::vector<RatVec> subspace_intersection(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                          int cols) {
    if (a.empty() || b.empty()) return {};
    RatMatrix m(cols, static_cast<int>(a.size() + b.size()));
    for (size_t k = 0; k < a.size(); ++k)
        for (int i = 0; i < cols; ++i) m.at(i, static_cast<int>(k)) = a[k][static_cast<size_t>(i)];
    for (size_t k = 0; k < b.size(); ++k)
        for (int i = 0; i < cols; ++i)
            m.at(i, static_cast<int>(a.size() + k)) = -b[k][static_cast<size_t>(i)];
    std::vector<RatVec> null = rat_nullspace(m);
    std::vector<RatVec> rows;
    for (const RatVec& lam : null) {
        RatVec x(static_cast<size_t>(cols), Rat(0));
        for (size_t k = 0; k < a.size(); ++k)
            for (int i = 0; i < cols; ++i) x[static_cast<size_t>(i)] += lam[k] * a[k][static_cast<size_t>(i)];
        rows.push_back(std::move(x));
    }
    return row_basis(rows, cols);
}

// Span of theta^p v for p < deg over the given vectors: the K-span.
std::vector<RatVec> k_orbit(const RatMatrix& theta, int deg, const std::vector<RatVec>& vs) {
    std::vector<RatVec> rows;
    for (const RatVec& v : vs) {
        RatVec cur = v;
        for (int p = 0; p < deg; ++p) {
            rows.push_back(cur);
            if (p + 1 < deg) cur = rat_apply(theta, cur);
        }
    }
    return row_basis(rows, theta.cols());
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

RatMatrix mat_scale(const Rat& c, const RatMatrix& a) {
    RatMatrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) *= c;
    return r;
}

bool mat_is_zero(const RatMatrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) return false;
    return true;
}

RatVec flatten(const RatMatrix& a) {
    RatVec v;
    v.reserve(static_cast<size_t>(a.rows()) * static_cast<size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
    return v;
}

QPoly matrix_minpoly(const RatMatrix& a) {
    int n = a.rows();
    std::vector<RatVec> flats;
    RatMatrix p = RatMatrix::identity(n);
    for (int k = 0;; ++k) {
        RatVec f = flatten(p);
        if (!flats.empty()) {
            RatMatrix cols(static_cast<int>(f.size()), static_cast<int>(flats.size()));
            for (size_t c = 0; c < flats.size(); ++c)
                for (size_t r = 0; r < f.size(); ++r)
                    cols.at(static_cast<int>(r), static_cast<int>(c)) = flats[c][r];
            if (auto sol = rat_solve(cols, f)) {
                QPoly mu(static_cast<size_t>(k) + 1, Rat(0));
                mu[static_cast<size_t>(k)] = 1;
                for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] = -(*sol)[static_cast<size_t>(i)];
                return mu;
            }
        }
        flats.push_back(std::move(f));
        p = rat_mul(p, a);
        if (k > n + 1) throw std::logic_error("matrix_minpoly: no relation found");
    }
}

RatMatrix poly_at_matrix(const QPoly& p, const RatMatrix& a) {
    int n = a.rows();
    RatMatrix r(n, n);
    for (size_t i = p.size(); i-- > 0;) {
        r = rat_mul(r, a);
        for (int d = 0; d < n; ++d) r.at(d, d) += p[i];
    }
    return r;
}

RatVec unit_vec(int n, int k) {
    RatVec v(static_cast<size_t>(n), Rat(0));
    v[static_cast<size_t>(k)] = 1;
    return v;
}

}  // namespace

// ---------- Galois data ----------

std::vector<NFElem> GaloisCubic::k_power_basis() const {
    return {L.one(), roots[0], roots[0] * roots[0]};
}

NFElem GaloisCubic::omega() const {
    if (L.dim() != 6) throw std::logic_error("omega: splitting field has no cube root of unity");
    return roots[1] * nf_inverse(roots[0]);
}

RatMatrix mult_matrix(const NFElem& s) {
    int n = s.field.dim();
    RatMatrix m(n, n);
    for (int k = 0; k < n; ++k) {
        NFElem basis{s.field, unit_vec(n, k)};
        NFElem prod = s * basis;
        for (int i = 0; i < n; ++i) m.at(i, k) = prod.coords[static_cast<size_t>(i)];
    }
    return m;
}

GaloisCubic make_galois_cubic(const Rat& a, const Rat& b, const Rat& c) {
    auto sp = NumberField::splitting_field(a, b, c);
    GaloisCubic g;
    g.L = sp.field;
    g.roots = sp.roots;
    g.a = a;
    g.b = b;
    g.c = c;

    std::vector<NFElem> tau_images;
    if (g.L.num_generators() == 1) {
        if (!(g.L.gen1() == g.roots[0]))
            throw std::logic_error("make_galois_cubic: unexpected generator layout");
        tau_images = {g.roots[1]};
    } else {
        if (!(g.L.gen1() == g.roots[0]) || !(g.L.gen2() == g.roots[1]))
            throw std::logic_error("make_galois_cubic: unexpected generator layout");
        tau_images = {g.roots[1], g.roots[2]};
    }
    auto tau = algebra_endomorphism(g.L, tau_images);
    if (!tau) throw std::logic_error("make_galois_cubic: root cycle is not a symmetry");
    g.tau = *tau;
    g.tau2 = rat_mul(g.tau, g.tau);
    if (!(apply_endomorphism(g.tau, g.roots[1]) == g.roots[2]) ||
        !(apply_endomorphism(g.tau, g.roots[2]) == g.roots[0]))
        throw std::logic_error("make_galois_cubic: tau does not cycle the roots");
    if (!(rat_mul(g.tau2, g.tau) == RatMatrix::identity(g.L.dim())))
        throw std::logic_error("make_galois_cubic: tau is not of order three");

    if (g.L.num_generators() == 2) {
        auto sigma = algebra_endomorphism(g.L, {g.roots[0], g.roots[2]});
        if (!sigma) throw std::logic_error("make_galois_cubic: root swap is not a symmetry");
        if (!(rat_mul(*sigma, *sigma) == RatMatrix::identity(g.L.dim())))
            throw std::logic_error("make_galois_cubic: sigma is not an involution");
        g.sigma = *sigma;
    }
    return g;
}

std::string convention_name(PairConvention c) {
    return c == PairConvention::diagonal ? "diagonal" : "twisted";
}

// ---------- module builders ----------

namespace {

// Candidate V-subspaces for the rank-four modules: the graphs over the
// twisted subfields c * sym(K) inside L.  twist_first selects the graph
// shape: (tau^2 x, x) for the relabelled form, (x, x) for the listed one.
std::vector<std::vector<RatVec>> graph_hints(const GaloisCubic& g, bool twist_first) {
    if (g.L.dim() != 6) return {};
    NFElem one = g.L.one(), w = g.omega(), th = g.roots[0], u = g.roots[1];
    std::vector<NFElem> cs = {one, w, w * w, one + w, one + w * w, th, u};
    std::vector<RatMatrix> syms = {RatMatrix::identity(6), g.tau, g.tau2};
    std::vector<std::vector<RatVec>> hints;
    for (const RatMatrix& sym : syms) {
        for (const NFElem& c : cs) {
            std::vector<RatVec> rows;
            for (const NFElem& p : g.k_power_basis()) {
                NFElem x = c * apply_endomorphism(sym, p);
                NFElem first = twist_first ? apply_endomorphism(g.tau2, x) : x;
                rows.push_back(concat(first.coords, x.coords));
            }
            hints.push_back(row_basis(rows, 12));
        }
    }
    return hints;
}

RatMatrix companion_of_cubic(const Rat& a, const Rat& b, const Rat& c) {
    RatMatrix m(3, 3);
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    m.at(0, 2) = -c;
    m.at(1, 2) = -b;
    m.at(2, 2) = -a;
    return m;
}

}  // namespace

PairModule build_rank4_listed(const GaloisCubic& g) {
    int n = g.L.dim();
    PairModule m;
    m.name = "rank4-listed";
    m.theta_minpoly = g.minpoly();
    m.theta = block_diag(mult_matrix(g.roots[1]), mult_matrix(g.roots[0]));
    for (int i = 0; i < n; ++i) m.v_basis.push_back(concat(unit_vec(n, i), unit_vec(n, i)));
    m.split_hints = graph_hints(g, /*twist_first=*/false);
    return m;
}

PairModule build_rank4_module(const GaloisCubic& g, PairConvention conv) {
    int n = g.L.dim();
    PairModule m;
    m.name = "rank4-graph-" + convention_name(conv);
    m.theta_minpoly = g.minpoly();
    const NFElem& first = conv == PairConvention::twisted ? g.roots[2] : g.roots[0];
    m.theta = block_diag(mult_matrix(first), mult_matrix(g.roots[0]));
    for (int i = 0; i < n; ++i) {
        RatVec t(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) t[static_cast<size_t>(r)] = g.tau2.at(r, i);
        m.v_basis.push_back(concat(t, unit_vec(n, i)));
    }
    m.split_hints = graph_hints(g, /*twist_first=*/true);
    return m;
}

PairModule build_rank3_module(const GaloisCubic& g, PairConvention conv) {
    PairModule m;
    m.name = "rank3-" + convention_name(conv);
    m.theta_minpoly = g.minpoly();
    const NFElem& first = conv == PairConvention::twisted ? g.roots[2] : g.roots[0];
    m.theta = block_diag(mult_matrix(first), companion_of_cubic(g.a, g.b, g.c));
    auto kb = g.k_power_basis();
    for (int i = 0; i < 3; ++i) m.v_basis.push_back(concat(kb[static_cast<size_t>(i)].coords, unit_vec(3, i)));
    return m;
}

// ---------- validation ----------

PairValidation validate_pair(const PairModule& m) {
    PairValidation r;
    std::ostringstream detail;
    int d = qp_deg(m.theta_minpoly);
    r.theta_ok = d >= 1 && mat_is_zero(poly_at_matrix(m.theta_minpoly, m.theta)) &&
                 qp_is_irreducible(m.theta_minpoly);
    if (!r.theta_ok) detail << "theta does not satisfy an irreducible cubic; ";
    r.v_independent = row_rank(m.v_basis, m.w_dim()) == m.v_dim();
    if (!r.v_independent) detail << "V basis dependent; ";
    auto orbit = k_orbit(m.theta, d, m.v_basis);
    r.kv_dim = static_cast<int>(orbit.size());
    r.generates = r.kv_dim == m.w_dim();
    if (!r.generates)
        detail << "K.V has dimension " << r.kv_dim << " inside W of dimension " << m.w_dim() << "; ";
    r.detail = detail.str();
    return r;
}

bool rank4_relabel_is_isomorphism(const GaloisCubic& g, std::string* why) {
    PairModule listed = build_rank4_listed(g);
    PairModule graph = build_rank4_module(g, PairConvention::diagonal);
    int n = g.L.dim();
    RatMatrix phi = block_diag(g.tau2, RatMatrix::identity(n));
    if (!rat_inverse(phi)) {
        if (why) *why = "relabelling map is singular";
        return false;
    }
    if (!(rat_mul(phi, listed.theta) == rat_mul(graph.theta, phi))) {
        if (why) *why = "relabelling map does not intertwine the K-actions";
        return false;
    }
    std::vector<RatVec> image;
    for (const RatVec& v : listed.v_basis) image.push_back(rat_apply(phi, v));
    if (!subspace_equal(image, graph.v_basis, 2 * n)) {
        if (why) *why = "relabelling map does not carry V onto V";
        return false;
    }
    return true;
}

DisplayedSummandReport displayed_summand_check(const GaloisCubic& g, PairConvention conv) {
    if (g.L.dim() != 6)
        throw std::logic_error("displayed_summand_check: needs the degree-six splitting field");
    DisplayedSummandReport rep;
    rep.convention = conv;
    PairModule n = build_rank4_module(g, conv);
    PairValidation val = validate_pair(n);
    rep.ambient_valid = val.ok();
    rep.ambient_kv_dim = val.kv_dim;

    NFElem w = g.omega(), w2 = w * w;
    auto pair_row = [&](const NFElem& first, const NFElem& second) {
        return concat(first.coords, second.coords);
    };
    std::vector<RatVec> w1, w2rows;
    for (const NFElem& p : g.k_power_basis()) {
        NFElem tp = apply_endomorphism(g.tau2, p);
        w1.push_back(pair_row(tp, p));            // x-family: (tau^2 x, x)
        w1.push_back(pair_row(tp * w2, p * w));   // y-family: (tau^2 y w^2, y w)
        w2rows.push_back(pair_row(tp * w, p * w));    // x-family: (tau^2 x w, x w)
        w2rows.push_back(pair_row(tp, p * w2));       // y-family: (tau^2 y, y w^2)
    }
    std::vector<RatVec> b1 = row_basis(w1, 12), b2 = row_basis(w2rows, 12);

    auto stable = [&](const std::vector<RatVec>& basis) {
        for (const RatVec& v : basis)
            if (!in_span(basis, rat_apply(n.theta, v))) return false;
        return true;
    };
    rep.w1_stable = stable(b1);
    rep.w2_stable = stable(b2);

    std::vector<RatVec> both = b1;
    both.insert(both.end(), b2.begin(), b2.end());
    rep.sum_direct = b1.size() == 6 && b2.size() == 6 && row_rank(both, 12) == 12;

    auto v1 = subspace_intersection(n.v_basis, b1, 12);
    auto v2 = subspace_intersection(n.v_basis, b2, 12);
    rep.v1_dim = static_cast<int>(v1.size());
    rep.v2_dim = static_cast<int>(v2.size());
    std::vector<RatVec> vsum = v1;
    vsum.insert(vsum.end(), v2.begin(), v2.end());
    rep.v_splits = rep.v1_dim + rep.v2_dim == n.v_dim() && row_rank(vsum, 12) == n.v_dim();

    rep.w1_generated = subspace_equal(k_orbit(n.theta, 3, v1), b1, 12);
    rep.w2_generated = subspace_equal(k_orbit(n.theta, 3, v2), b2, 12);
    return rep;
}

// ---------- endomorphism algebra ----------

std::vector<RatMatrix> endomorphism_algebra(const PairModule& m) {
    int w = m.w_dim();
    int n2 = w * w;
    std::vector<RatVec> eq_rows;

    // commutation with theta: for all (i,j), sum_k theta_ik A_kj - A_ik theta_kj = 0
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) {
            RatVec row(static_cast<size_t>(n2), Rat(0));
            for (int k = 0; k < w; ++k) {
                row[static_cast<size_t>(k * w + j)] += m.theta.at(i, k);
                row[static_cast<size_t>(i * w + k)] -= m.theta.at(k, j);
            }
            eq_rows.push_back(std::move(row));
        }
    }

    // preservation of V: phi(A v) = 0 for every v in V and phi annihilating V
    std::vector<RatVec> ann = rat_nullspace(rows_to_matrix(m.v_basis, w));
    for (const RatVec& v : m.v_basis) {
        for (const RatVec& phi : ann) {
            RatVec row(static_cast<size_t>(n2), Rat(0));
            for (int i = 0; i < w; ++i) {
                if (phi[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; j < w; ++j)
                    row[static_cast<size_t>(i * w + j)] += phi[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
            }
            eq_rows.push_back(std::move(row));
        }
    }

    std::vector<RatVec> null = rat_nullspace(rows_to_matrix(eq_rows, n2));
    std::vector<RatMatrix> basis;
    for (const RatVec& x : null) {
        RatMatrix a(w, w);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) a.at(i, j) = x[static_cast<size_t>(i * w + j)];
        basis.push_back(std::move(a));
    }
    return basis;
}

// ---------- decomposition ----------

namespace {

struct Piece {
    PairModule module;
    RatMatrix embedding;
};

// Tries V = span(v1) + span(v2) as a module decomposition; on success
// returns the two sub-pair-modules with their embeddings.
std::optional<std::pair<Piece, Piece>> try_v_split(const PairModule& m,
                                                   const std::vector<RatVec>& v1_in,
                                                   const std::vector<RatVec>& v2_in,
                                                   const std::vector<RatVec>& vspan) {
    int w = m.w_dim();
    int d = qp_deg(m.theta_minpoly);
    std::vector<RatVec> v1 = row_basis(v1_in, w), v2 = row_basis(v2_in, w);
    if (v1.empty() || v2.empty()) return std::nullopt;
    if (static_cast<int>(v1.size() + v2.size()) != m.v_dim()) return std::nullopt;
    for (const RatVec& v : v1)
        if (!in_span(vspan, v)) return std::nullopt;
    for (const RatVec& v : v2)
        if (!in_span(vspan, v)) return std::nullopt;
    std::vector<RatVec> vall = v1;
    vall.insert(vall.end(), v2.begin(), v2.end());
    if (row_rank(vall, w) != m.v_dim()) return std::nullopt;

    auto k1 = k_orbit(m.theta, d, v1);
    auto k2 = k_orbit(m.theta, d, v2);
    int r1 = static_cast<int>(k1.size()), r2 = static_cast<int>(k2.size());
    if (r1 == 0 || r2 == 0 || r1 + r2 != w) return std::nullopt;
    std::vector<RatVec> kall = k1;
    kall.insert(kall.end(), k2.begin(), k2.end());
    if (row_rank(kall, w) != w) return std::nullopt;

    auto build = [&](const std::vector<RatVec>& kbasis, const std::vector<RatVec>& vrows,
                     const std::string& name) -> std::optional<Piece> {
        int r = static_cast<int>(kbasis.size());
        RatMatrix emb(w, r);
        for (int c = 0; c < r; ++c)
            for (int i = 0; i < w; ++i) emb.at(i, c) = kbasis[static_cast<size_t>(c)][static_cast<size_t>(i)];
        PairModule child;
        child.name = name;
        child.theta_minpoly = m.theta_minpoly;
        child.theta = RatMatrix(r, r);
        for (int c = 0; c < r; ++c) {
            RatVec img = rat_apply(m.theta, kbasis[static_cast<size_t>(c)]);
            auto coords = rat_solve(emb, img);
            if (!coords) return std::nullopt;
            for (int i = 0; i < r; ++i) child.theta.at(i, c) = (*coords)[static_cast<size_t>(i)];
        }
        for (const RatVec& v : vrows) {
            auto coords = rat_solve(emb, v);
            if (!coords) return std::nullopt;
            child.v_basis.push_back(*coords);
        }
        Piece p{std::move(child), std::move(emb)};
        return p;
    };
    auto p1 = build(k1, v1, m.name + ".0");
    auto p2 = build(k2, v2, m.name + ".1");
    if (!p1 || !p2) return std::nullopt;
    return std::make_pair(std::move(*p1), std::move(*p2));
}

// Splitting from an endomorphism whose minimal polynomial has at least
// two distinct irreducible factors: the corresponding exact idempotent
// cuts V in two.
std::optional<std::pair<Piece, Piece>> try_idempotent_split(const PairModule& m, const RatMatrix& a,
                                                            const std::vector<RatVec>& vspan) {
    QPoly mu = matrix_minpoly(a);
    auto factors = qp_factor(mu);
    if (factors.size() < 2) return std::nullopt;
    QPoly p = {Rat(1)};
    for (int i = 0; i < factors[0].multiplicity; ++i) p = qp_mul(p, factors[0].factor);
    QPoly q = qp_divmod(mu, p).first;
    auto xg = qp_extended_gcd(p, q);
    if (qp_deg(xg.g) != 0) return std::nullopt;
    RatMatrix e = poly_at_matrix(qp_mul(xg.t, q), a);
    if (!(rat_mul(e, e) == e)) return std::nullopt;
    std::vector<RatVec> v1, v2;
    RatMatrix one_minus = mat_sub(RatMatrix::identity(e.rows()), e);
    for (const RatVec& v : m.v_basis) {
        v1.push_back(rat_apply(e, v));
        v2.push_back(rat_apply(one_minus, v));
    }
    return try_v_split(m, v1, v2, vspan);
}

// Restriction of an endomorphism to V, in the coordinates of v_basis.
std::optional<RatMatrix> restrict_to_v(const PairModule& m, const RatMatrix& a) {
    int w = m.w_dim(), v = m.v_dim();
    RatMatrix cols(w, v);
    for (int c = 0; c < v; ++c)
        for (int i = 0; i < w; ++i) cols.at(i, c) = m.v_basis[static_cast<size_t>(c)][static_cast<size_t>(i)];
    RatMatrix r(v, v);
    for (int c = 0; c < v; ++c) {
        RatVec img = rat_apply(a, m.v_basis[static_cast<size_t>(c)]);
        auto coords = rat_solve(cols, img);
        if (!coords) return std::nullopt;
        for (int i = 0; i < v; ++i) r.at(i, c) = (*coords)[static_cast<size_t>(i)];
    }
    return r;
}

// Generalized eigenspace split of V under the restriction of an
// endomorphism: one irreducible factor against all the others.
std::optional<std::pair<Piece, Piece>> try_eigensplit(const PairModule& m, const RatMatrix& a,
                                                      const std::vector<RatVec>& vspan) {
    auto restr = restrict_to_v(m, a);
    if (!restr) return std::nullopt;
    QPoly mu = matrix_minpoly(*restr);
    auto factors = qp_factor(mu);
    if (factors.size() < 2) return std::nullopt;
    int v = m.v_dim();
    for (size_t pick = 0; pick < factors.size(); ++pick) {
        QPoly p1 = {Rat(1)}, p2 = {Rat(1)};
        for (size_t i = 0; i < factors.size(); ++i) {
            QPoly& dst = (i == pick) ? p1 : p2;
            for (int k = 0; k < factors[i].multiplicity; ++k) dst = qp_mul(dst, factors[i].factor);
        }
        auto part1 = rat_nullspace(poly_at_matrix(p1, *restr));
        auto part2 = rat_nullspace(poly_at_matrix(p2, *restr));
        auto lift = [&](const std::vector<RatVec>& coords_list) {
            std::vector<RatVec> rows;
            for (const RatVec& cvec : coords_list) {
                RatVec x(static_cast<size_t>(m.w_dim()), Rat(0));
                for (int k = 0; k < v; ++k)
                    for (int i = 0; i < m.w_dim(); ++i)
                        x[static_cast<size_t>(i)] += cvec[static_cast<size_t>(k)] *
                                                     m.v_basis[static_cast<size_t>(k)][static_cast<size_t>(i)];
                rows.push_back(std::move(x));
            }
            return rows;
        };
        if (auto split = try_v_split(m, lift(part1), lift(part2), vspan)) return split;
    }
    return std::nullopt;
}

// Whether the quotient of the endomorphism algebra by its radical is a
// field; this certifies indecomposability.  E is the algebra basis.
bool certify_local(const PairModule& m, const std::vector<RatMatrix>& e_basis, uint64_t seed) {
    size_t d = e_basis.size();
    if (m.rank() == 1) return true;  // W is a simple K-module
    if (d == 1) return true;
    // radical = kernel of the trace form x -> tr(x y) on the algebra
    RatMatrix gram(static_cast<int>(d), static_cast<int>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Rat t(0);
            for (int a = 0; a < e_basis[i].rows(); ++a)
                for (int b = 0; b < e_basis[i].cols(); ++b)
                    t += e_basis[i].at(a, b) * e_basis[j].at(b, a);
            gram.at(static_cast<int>(i), static_cast<int>(j)) = t;
        }
    std::vector<RatVec> rad_coords = rat_nullspace(gram);
    size_t s_dim = d - rad_coords.size();
    if (s_dim == 1) return true;

    std::vector<RatVec> rad_flats;
    for (const RatVec& rc : rad_coords) {
        RatMatrix acc(e_basis[0].rows(), e_basis[0].cols());
        for (size_t k = 0; k < d; ++k) acc = mat_add(acc, mat_scale(rc[k], e_basis[k]));
        rad_flats.push_back(flatten(acc));
    }
    rad_flats = row_basis(rad_flats, e_basis[0].rows() * e_basis[0].cols());

    // complement indices spanning E modulo the radical
    std::vector<size_t> comp;
    {
        std::vector<RatVec> acc = rad_flats;
        int rank = static_cast<int>(acc.size());
        for (size_t i = 0; i < d && comp.size() < s_dim; ++i) {
            std::vector<RatVec> trial = acc;
            trial.push_back(flatten(e_basis[i]));
            int r = row_rank(trial, e_basis[0].rows() * e_basis[0].cols());
            if (r > rank) {
                comp.push_back(i);
                acc = std::move(trial);
                rank = r;
            }
        }
    }

    // the quotient must be commutative for this certificate
    for (size_t x : comp)
        for (size_t y : comp) {
            RatMatrix c = mat_sub(rat_mul(e_basis[x], e_basis[y]), rat_mul(e_basis[y], e_basis[x]));
            if (!in_span(rad_flats, flatten(c))) return false;
        }

    // find a primitive element: single irreducible minimal polynomial of
    // degree equal to the quotient dimension
    std::mt19937_64 rng(seed ^ 0xC2B2AE3D27D4EB4FULL);
    std::vector<RatMatrix> candidates;
    for (size_t i : comp) candidates.push_back(e_basis[i]);
    for (int round = 0; round < 40; ++round) {
        RatMatrix acc(e_basis[0].rows(), e_basis[0].cols());
        for (size_t i : comp) {
            long coef = static_cast<long>(rng() % 7) - 3;
            if (coef != 0) acc = mat_add(acc, mat_scale(Rat(coef), e_basis[i]));
        }
        candidates.push_back(std::move(acc));
    }
    for (const RatMatrix& z : candidates) {
        QPoly mu = matrix_minpoly(z);
        auto factors = qp_factor(mu);
        if (factors.size() == 1 && static_cast<size_t>(qp_deg(factors[0].factor)) == s_dim &&
            qp_is_irreducible(factors[0].factor))
            return true;
    }
    return false;
}

void decompose_worker(const PairModule& m, uint64_t seed, int depth,
                      const RatMatrix& embedding_into_root, std::vector<Summand>& out) {
    int w = m.w_dim(), v = m.v_dim();
    int d = qp_deg(m.theta_minpoly);
    std::vector<RatVec> vspan = row_basis(m.v_basis, w);

    auto recurse = [&](std::pair<Piece, Piece> split) {
        decompose_worker(split.first.module, seed + 1, depth + 1,
                         rat_mul(embedding_into_root, split.first.embedding), out);
        decompose_worker(split.second.module, seed + 2, depth + 1,
                         rat_mul(embedding_into_root, split.second.embedding), out);
    };

    if (w > d && depth < 16) {  // rank one is indecomposable outright
        // (a) subsets of the given V-basis
        if (v <= 10) {
            unsigned full = (1u << v) - 1;
            for (unsigned mask = 1; mask < full; ++mask) {
                unsigned comp = full & ~mask;
                if (mask > comp) continue;
                std::vector<RatVec> v1, v2;
                for (int i = 0; i < v; ++i)
                    ((mask >> i) & 1u ? v1 : v2).push_back(m.v_basis[static_cast<size_t>(i)]);
                if (auto split = try_v_split(m, v1, v2, vspan)) { recurse(std::move(*split)); return; }
            }
        }
        // (b) hinted candidate pairs
        for (size_t i = 0; i < m.split_hints.size(); ++i)
            for (size_t j = i + 1; j < m.split_hints.size(); ++j)
                if (auto split = try_v_split(m, m.split_hints[i], m.split_hints[j], vspan)) {
                    recurse(std::move(*split));
                    return;
                }

        // (c) endomorphism-driven splits
        std::vector<RatMatrix> ealg = endomorphism_algebra(m);
        std::vector<RatMatrix> candidates;
        for (const RatMatrix& a : ealg) candidates.push_back(a);
        for (size_t i = 0; i < ealg.size(); ++i)
            for (size_t j = i + 1; j < ealg.size() && candidates.size() < 120; ++j) {
                candidates.push_back(mat_add(ealg[i], ealg[j]));
                candidates.push_back(mat_sub(ealg[i], ealg[j]));
            }
        for (size_t i = 0; i < ealg.size() && candidates.size() < 180; ++i)
            for (size_t j = 0; j < ealg.size() && candidates.size() < 180; ++j)
                if (i != j) candidates.push_back(rat_mul(ealg[i], ealg[j]));
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);
        for (int round = 0; round < 120; ++round) {
            RatMatrix acc(w, w);
            int support = 1 + static_cast<int>(rng() % std::min<size_t>(4, ealg.size()));
            for (int s = 0; s < support; ++s) {
                size_t idx = rng() % ealg.size();
                long coef = static_cast<long>(rng() % 7) - 3;
                if (coef != 0) acc = mat_add(acc, mat_scale(Rat(coef), ealg[idx]));
            }
            candidates.push_back(std::move(acc));
        }
        for (const RatMatrix& a : candidates) {
            if (mat_is_zero(a)) continue;
            if (auto split = try_idempotent_split(m, a, vspan)) { recurse(std::move(*split)); return; }
            if (auto split = try_eigensplit(m, a, vspan)) { recurse(std::move(*split)); return; }
        }

        // (d) random change-of-basis splits of V
        for (int round = 0; round < 40; ++round) {
            std::vector<RatVec> newbasis;
            RatMatrix t(v, v);
            for (int i = 0; i < v; ++i)
                for (int j = 0; j < v; ++j) t.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
            if (rat_rank(t) != v) continue;
            for (int i = 0; i < v; ++i) {
                RatVec x(static_cast<size_t>(w), Rat(0));
                for (int j = 0; j < v; ++j)
                    for (int c = 0; c < w; ++c)
                        x[static_cast<size_t>(c)] += t.at(i, j) * m.v_basis[static_cast<size_t>(j)][static_cast<size_t>(c)];
                newbasis.push_back(std::move(x));
            }
            for (int s = 1; s <= v / 2; ++s) {
                std::vector<RatVec> v1(newbasis.begin(), newbasis.begin() + s);
                std::vector<RatVec> v2(newbasis.begin() + s, newbasis.end());
                if (auto split = try_v_split(m, v1, v2, vspan)) { recurse(std::move(*split)); return; }
            }
        }

        // no split found: fall through to certification as a leaf
        Summand leaf;
        leaf.module = m;
        leaf.embedding = embedding_into_root;
        leaf.certified_indecomposable = certify_local(m, ealg, seed);
        out.push_back(std::move(leaf));
        return;
    }

    Summand leaf;
    leaf.module = m;
    leaf.embedding = embedding_into_root;
    leaf.certified_indecomposable =
        w == d || certify_local(m, endomorphism_algebra(m), seed);
    out.push_back(std::move(leaf));
}

}  // namespace

Decomposition decompose(const PairModule& m, uint64_t seed) {
    Decomposition dec;
    decompose_worker(m, seed, 0, RatMatrix::identity(m.w_dim()), dec.summands);
    std::stable_sort(dec.summands.begin(), dec.summands.end(), [](const Summand& a, const Summand& b) {
        if (a.module.w_dim() != b.module.w_dim()) return a.module.w_dim() > b.module.w_dim();
        return a.module.v_dim() > b.module.v_dim();
    });
    dec.all_certified = true;
    for (const Summand& s : dec.summands)
        if (!s.certified_indecomposable) dec.all_certified = false;
    return dec;
}

bool verify_decomposition(const PairModule& m, const Decomposition& d, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int w = m.w_dim();
    int total_w = 0, total_v = 0;
    std::vector<RatVec> all_cols, all_v;
    for (const Summand& s : d.summands) {
        total_w += s.module.w_dim();
        total_v += s.module.v_dim();
        if (s.embedding.rows() != w || s.embedding.cols() != s.module.w_dim())
            return fail("embedding shape mismatch");
        // theta-compatibility: theta . emb = emb . theta_child
        RatMatrix lhs = rat_mul(m.theta, s.embedding);
        RatMatrix rhs = rat_mul(s.embedding, s.module.theta);
        if (!(lhs == rhs)) return fail("summand is not K-stable");
        for (int c = 0; c < s.embedding.cols(); ++c) {
            RatVec col(static_cast<size_t>(w));
            for (int i = 0; i < w; ++i) col[static_cast<size_t>(i)] = s.embedding.at(i, c);
            all_cols.push_back(std::move(col));
        }
        std::vector<RatVec> vspan = row_basis(m.v_basis, w);
        for (const RatVec& cv : s.module.v_basis) {
            RatVec x(static_cast<size_t>(w), Rat(0));
            for (int c = 0; c < s.embedding.cols(); ++c)
                for (int i = 0; i < w; ++i) x[static_cast<size_t>(i)] += s.embedding.at(i, c) * cv[static_cast<size_t>(c)];
            if (!in_span(vspan, x)) return fail("summand V does not sit inside V");
            all_v.push_back(std::move(x));
        }
        PairValidation pv = validate_pair(s.module);
        if (!pv.ok()) return fail("summand is not a valid pair module: " + pv.detail);
    }
    if (total_w != w) return fail("W dimensions do not add up");
    if (total_v != m.v_dim()) return fail("V dimensions do not add up");
    if (row_rank(all_cols, w) != w) return fail("summands do not span W");
    if (row_rank(all_v, w) != m.v_dim()) return fail("summand V parts do not span V");
    return true;
}

}  // namespace mcm
