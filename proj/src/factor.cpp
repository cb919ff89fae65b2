#include "mcm/factor.hpp"

#include <algorithm>

#include "mcm/qmat.hpp"

namespace mcm {

std::vector<Factorization> factorizations_over(const std::vector<MonoidElement>& atoms,
                                               const MonoidElement& v, long cap) {
    std::vector<Factorization> out;
    const int k = int(atoms.size());
    Factorization cur;
    IntVec rest = v;
    auto rec = [&](auto&& self, int from) -> void {
        if (vec_is_zero(rest)) {
            if (long(out.size()) >= cap) throw FactorizationCapExceeded();
            out.push_back(cur);
            return;
        }
        for (int i = from; i < k; ++i) {
            if (!vec_leq(atoms[i], rest)) continue;
            for (size_t c = 0; c < rest.size(); ++c) rest[c] -= atoms[i][c];
            auto it = cur.mult.find(i);
            if (it == cur.mult.end()) cur.mult[i] = 1;
            else ++it->second;
            self(self, i);
            for (size_t c = 0; c < rest.size(); ++c) rest[c] += atoms[i][c];
            it = cur.mult.find(i);
            if (it->second == 1) cur.mult.erase(it);
            else --it->second;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Factorization> factorizations(const MonoidPresentation& p, const MonoidElement& v,
                                          long cap) {
    if (int(v.size()) != p.dim()) throw std::invalid_argument("factorizations: wrong length");
    return factorizations_over(hilbert_basis(p), v, cap);
}

std::set<Int> length_set(const MonoidPresentation& p, const MonoidElement& v) {
    if (vec_is_zero(v)) throw std::invalid_argument("length_set: zero element");
    std::set<Int> ls;
    for (const auto& f : factorizations(p, v)) ls.insert(f.length());
    return ls;
}

Rat elasticity_element(const MonoidPresentation& p, const MonoidElement& v) {
    auto ls = length_set(p, v);
    if (ls.empty()) throw std::invalid_argument("elasticity_element: element does not factor");
    return Rat(*ls.rbegin()) / Rat(*ls.begin());
}

Rat elasticity_monoid(const MonoidPresentation& p) {
    auto atoms = hilbert_basis(p);
    const int k = int(atoms.size());
    if (k == 0) return Rat(1);
    const int n = p.dim();
    // Relation system: sum u_i a_i - sum w_j a_j = 0 over (u, w) in N^{2k}.
    IntMatrix rel(n, 2 * k);
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c) {
            rel.at(c, i) = atoms[i][c];
            rel.at(c, k + i) = -atoms[i][c];
        }
    Rat best(1);
    for (const auto& z : minimal_kernel_solutions(rel)) {
        Int lu = 0, lw = 0;
        for (int i = 0; i < k; ++i) lu += z[i];
        for (int i = 0; i < k; ++i) lw += z[k + i];
        if (lw >= 1 && lu >= lw) {
            Rat r = Rat(lu) / Rat(lw);
            if (r > best) best = r;
        }
    }
    return best;
}

bool is_half_factorial(const MonoidPresentation& p) {
    auto atoms = hilbert_basis(p);
    if (atoms.empty()) return true;
    const int n = p.dim();
    // Solve x^T * [atoms as columns] = all-ones: exists iff every integer
    // relation among the atoms has balanced length.
    RatMatrix at(int(atoms.size()), n);
    for (size_t i = 0; i < atoms.size(); ++i)
        for (int c = 0; c < n; ++c) at.at(int(i), c) = Rat(atoms[i][c]);
    RatVec ones(atoms.size(), Rat(1));
    return rat_solve(at, ones).has_value();
}

bool is_factorial(const MonoidPresentation& p) {
    auto atoms = hilbert_basis(p);
    if (atoms.empty()) return true;
    return mat_rank(IntMatrix::from_rows(atoms)) == int(atoms.size());
}

}  // namespace mcm
