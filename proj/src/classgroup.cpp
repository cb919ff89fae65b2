#include "mcm/classgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mcm {

std::string AbelianGroupInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (int i = 0; i < free_rank; ++i) {
        if (!s.empty()) s += " + ";
        s += "Z";
    }
    for (const auto& d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

bool zbasis_in_monoid_check(const MonoidPresentation& p) {
    auto hb = hilbert_basis(p);
    IntMatrix atom_rows = IntMatrix::from_rows(hb);
    if (hb.empty()) atom_rows = IntMatrix(0, p.dim());

    // Kernel of the equations extended by zero columns over the free part.
    const int t = p.constrained_dim(), u = p.free_rank, s = p.equations.rows();
    IntMatrix ext(s, t + u);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) ext.at(i, j) = p.equations.at(i, j);
    return lattice_equal(atom_rows, kernel_lattice_basis(ext));
}

namespace {

// All sums of 1..budget atoms, deduplicated.
std::vector<MonoidElement> bounded_sums(const std::vector<MonoidElement>& atoms, int budget) {
    std::set<MonoidElement> cur(atoms.begin(), atoms.end());
    std::set<MonoidElement> all = cur;
    for (int round = 2; round <= budget; ++round) {
        std::set<MonoidElement> next;
        for (const auto& v : cur)
            for (const auto& a : atoms) {
                MonoidElement w = v;
                for (size_t i = 0; i < w.size(); ++i) w[i] += a[i];
                next.insert(std::move(w));
            }
        all.insert(next.begin(), next.end());
        cur = std::move(next);
    }
    return {all.begin(), all.end()};
}

}  // namespace

DivisorTheoryReport divisor_theory_check(const MonoidPresentation& p, int atom_budget) {
    if (atom_budget < 1) throw std::invalid_argument("divisor_theory_check: budget must be >= 1");
    const int n = p.dim();
    const int t = p.constrained_dim();
    auto atoms = hilbert_basis(p);
    auto pool = bounded_sums(atoms, atom_budget);

    DivisorTheoryReport rep;
    rep.coordinates.resize(n);

    // Cached verdicts of the exact emptiness test: does some element of H
    // have coordinate j positive while coordinate i is zero?  Decided via
    // the Hilbert basis of the system with coordinate i deleted (an
    // element with h_i = 0 exists iff an atom of that restriction works).
    std::map<std::pair<int, int>, bool> exists_pos_j_zero_i;
    auto positive_possible_avoiding = [&](int j, int i) {
        auto key = std::make_pair(j, i);
        auto it = exists_pos_j_zero_i.find(key);
        if (it != exists_pos_j_zero_i.end()) return it->second;
        MonoidPresentation q;
        if (i < t) {
            IntMatrix e(p.equations.rows(), t - 1);
            for (int r = 0; r < p.equations.rows(); ++r)
                for (int c = 0, cc = 0; c < t; ++c) {
                    if (c == i) continue;
                    e.at(r, cc++) = p.equations.at(r, c);
                }
            q.equations = e;
            q.free_rank = p.free_rank;
        } else {
            q.equations = p.equations;
            q.free_rank = p.free_rank - 1;
        }
        // Index of coordinate j inside the restricted system.
        int jj = j < i ? j : j - 1;
        bool found = false;
        for (const auto& a : hilbert_basis(q))
            if (a[jj] > 0) { found = true; break; }
        exists_pos_j_zero_i.emplace(key, found);
        return found;
    };

    for (int j = 0; j < n; ++j) {
        auto& cr = rep.coordinates[j];

        bool any_atom_pos = false, any_atom_one = false;
        for (const auto& a : atoms) {
            if (a[j] > 0) any_atom_pos = true;
            if (a[j] == 1) any_atom_one = true;
        }
        if (!any_atom_pos) {
            cr.verdict = DivisorVerdict::failed;
            cr.reason = "no monoid element has a positive coordinate here";
            continue;
        }

        // glb over every pool element with positive j-th coordinate; a
        // witness subset achieving e_j exists iff this glb equals e_j.
        IntVec glb;
        std::vector<const MonoidElement*> cj;
        for (const auto& c : pool) {
            if (c[j] < 1) continue;
            cj.push_back(&c);
            if (glb.empty())
                glb = c;
            else
                for (int i = 0; i < n; ++i) glb[i] = std::min(glb[i], c[i]);
        }
        bool is_unit = !glb.empty();
        if (is_unit)
            for (int i = 0; i < n && is_unit; ++i)
                if (glb[i] != (i == j ? 1 : 0)) is_unit = false;
        if (is_unit) {
            cr.verdict = DivisorVerdict::proved;
            // Small witness set: a coordinate-j minimizer plus, per other
            // coordinate, one element vanishing there.
            std::set<MonoidElement> wit;
            for (const auto* c : cj)
                if ((*c)[j] == 1) { wit.insert(*c); break; }
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                bool covered = false;
                for (const auto& w : wit)
                    if (w[i] == 0) { covered = true; break; }
                if (covered) continue;
                for (const auto* c : cj)
                    if ((*c)[i] == 0) { wit.insert(*c); break; }
            }
            cr.witnesses.assign(wit.begin(), wit.end());
            std::sort(cr.witnesses.begin(), cr.witnesses.end(), graded_lex_less);
            continue;
        }

        // Budget search failed; look for an exact impossibility proof.
        if (!any_atom_one) {
            cr.verdict = DivisorVerdict::failed;
            cr.reason = "every element with positive coordinate here has it >= 2";
            continue;
        }
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i) {
            if (i == j) continue;
            if (!positive_possible_avoiding(j, i)) {
                cr.verdict = DivisorVerdict::failed;
                cr.reason = "every element positive here is also positive at coordinate " +
                            std::to_string(i);
                failed = true;
            }
        }
        if (!failed) cr.verdict = DivisorVerdict::undetermined;
    }
    return rep;
}

ClassGroupResult class_group(const MonoidPresentation& p, bool override_checks, int atom_budget) {
    ClassGroupResult res;
    // The subgroup of Z^s generated by the equation columns is free of
    // rank = rank(equations); the torsion slot stays empty (kept for the
    // general invariants type).
    SmithResult sm = smith_normal_form(p.equations);
    int r = 0;
    for (int i = 0; i < std::min(sm.d.rows(), sm.d.cols()); ++i)
        if (sm.d.at(i, i) != 0) ++r;
    res.group.free_rank = r;

    if (p.equations.rows() == 0) {
        res.zbasis_ok = true;
        res.divisor_theory_ok = true;
        res.justified = true;
        res.note = "free presentation; trivial class group";
        return res;
    }
    res.zbasis_ok = zbasis_in_monoid_check(p);
    res.divisor_theory_ok = divisor_theory_check(p, atom_budget).all_proved();
    res.justified = (res.zbasis_ok && res.divisor_theory_ok) || override_checks;
    if (!res.justified) res.note = "class group formula not justified (hypothesis checks failed)";
    else if (override_checks && !(res.zbasis_ok && res.divisor_theory_ok))
        res.note = "hypothesis checks overridden by caller";
    return res;
}

std::vector<IntVec> prime_divisor_classes(const MonoidPresentation& p) {
    std::vector<IntVec> out;
    const int s = p.equations.rows();
    for (int j = 0; j < p.constrained_dim(); ++j) out.push_back(p.equations.col(j));
    for (int j = 0; j < p.free_rank; ++j) out.push_back(IntVec(s, Int(0)));
    return out;
}

}  // namespace mcm
