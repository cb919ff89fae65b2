#include "mcm/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mcm {

bool contains(const MonoidPresentation& p, const MonoidElement& v) {
    if (int(v.size()) != p.dim()) throw std::invalid_argument("contains: wrong element length");
    for (const auto& x : v)
        if (x < 0) return false;
    int t = p.constrained_dim();
    IntVec c(v.begin(), v.begin() + t);
    return vec_is_zero(mat_apply(p.equations, c));
}

std::vector<IntVec> minimal_kernel_solutions(const IntMatrix& equations) {
    const int t = equations.cols();
    const int s = equations.rows();
    std::vector<IntVec> sols;
    if (t == 0) return sols;

    // Precompute columns for the branching test <A x, A e_j> < 0.
    std::vector<IntVec> col(t);
    for (int j = 0; j < t; ++j) col[j] = equations.col(j);

    struct Node {
        IntVec x;    // candidate in N^t
        IntVec val;  // equations * x
    };

    auto dominated = [&](const IntVec& x) {
        for (const auto& s0 : sols)
            if (vec_leq(s0, x)) return true;  // s0 <= x (s0 != x by construction)
        return false;
    };

    // Breadth-first by coordinate sum, so every accepted solution is
    // automatically minimal: any strictly smaller solution appears at an
    // earlier level and prunes its multiples.
    std::vector<Node> frontier;
    std::set<IntVec> seen;
    for (int j = 0; j < t; ++j) {
        Node n;
        n.x.assign(t, Int(0));
        n.x[j] = 1;
        n.val = col[j];
        frontier.push_back(std::move(n));
    }

    while (!frontier.empty()) {
        std::vector<Node> next;
        std::set<IntVec> next_seen;
        for (const Node& n : frontier) {
            if (vec_is_zero(n.val)) {
                if (!dominated(n.x)) sols.push_back(n.x);
                continue;
            }
            for (int j = 0; j < t; ++j) {
                // Directed search: only step in directions that reduce the
                // defect of the current value vector.
                Int dot = 0;
                for (int i = 0; i < s; ++i) dot += n.val[i] * col[j][i];
                if (dot >= 0) continue;
                IntVec y = n.x;
                y[j] += 1;
                if (dominated(y)) continue;
                if (!next_seen.insert(y).second) continue;
                Node m;
                m.x = std::move(y);
                m.val = n.val;
                for (int i = 0; i < s; ++i) m.val[i] += col[j][i];
                next.push_back(std::move(m));
            }
        }
        frontier = std::move(next);
    }

    std::sort(sols.begin(), sols.end(), graded_lex_less);
    return sols;
}

std::vector<MonoidElement> hilbert_basis(const MonoidPresentation& p) {
    const int t = p.constrained_dim();
    const int u = p.free_rank;
    std::vector<MonoidElement> out;
    for (const auto& a : minimal_kernel_solutions(p.equations)) {
        MonoidElement v(t + u, Int(0));
        for (int j = 0; j < t; ++j) v[j] = a[j];
        out.push_back(std::move(v));
    }
    for (int j = 0; j < u; ++j) {
        MonoidElement v(t + u, Int(0));
        v[t + j] = 1;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

bool is_atom(const MonoidPresentation& p, const MonoidElement& v) {
    if (!contains(p, v) || vec_is_zero(v)) return false;
    auto hb = hilbert_basis(p);
    return std::find(hb.begin(), hb.end(), v) != hb.end();
}

}  // namespace mcm
