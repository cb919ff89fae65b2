#include "mcm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mcm/hilbert.hpp"
#include "mcm/qmat.hpp"

namespace mcm {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::string family_prefix(RingFamily f) {
    switch (f) {
        case RingFamily::A: return "A";
        case RingFamily::D: return "D";
        case RingFamily::E6: return "E6";
        case RingFamily::E7: return "E7";
        case RingFamily::E8: return "E8";
        case RingFamily::A2: return "A2:";
        case RingFamily::D2: return "D2:";
        case RingFamily::D3: return "D3";
    }
    bad("unknown family");
}

IntVec rv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

std::string RingType::to_string() const {
    std::string s = family_prefix(family);
    if (family == RingFamily::A || family == RingFamily::D || family == RingFamily::A2 ||
        family == RingFamily::D2)
        s += std::to_string(index);
    if (primed) s += "'";
    return s;
}

RingType make_ring_type(RingFamily f, int index, bool primed) {
    RingType t{f, index, primed};
    switch (f) {
        case RingFamily::A:
            if (index < 0) bad("A family needs subscript >= 0");
            if (primed) {
                // End(m) of the A_n curve is the A_{n-2} curve.
                if (index < 2) bad("A" + std::to_string(index) + "' is not defined (needs subscript >= 2)");
                t.index = index - 2;
                t.primed = false;
            }
            break;
        case RingFamily::D:
            if (index < 4) bad("D family needs subscript >= 4");
            break;
        case RingFamily::E6:
        case RingFamily::E7:
        case RingFamily::E8:
        case RingFamily::D3:
            if (index != 0) bad(family_prefix(f) + " takes no parameter");
            break;
        case RingFamily::A2:
            // End(m) of A2_n is A2_{n-1}, so n = 0 occurs as a normalized value.
            if (index < (primed ? 1 : 0)) bad("A2 family needs parameter n >= 1");
            if (primed) {
                t.index = index - 1;
                t.primed = false;
            }
            break;
        case RingFamily::D2:
            if (index < 1) bad("D2 family needs parameter n >= 1");
            break;
    }
    return t;
}

RingType parse_ring_type(const std::string& text) {
    std::string s = text;
    bool primed = false;
    if (!s.empty() && s.back() == '\'') {
        primed = true;
        s.pop_back();
    }
    auto parse_int = [&](const std::string& digits) -> int {
        if (digits.empty()) bad("missing numeric parameter in ring type '" + text + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                bad("bad numeric parameter in ring type '" + text + "'");
        if (digits.size() > 6) bad("ring parameter out of range in '" + text + "'");
        return std::stoi(digits);
    };
    if (s.rfind("A2:", 0) == 0) return make_ring_type(RingFamily::A2, parse_int(s.substr(3)), primed);
    if (s.rfind("D2:", 0) == 0) return make_ring_type(RingFamily::D2, parse_int(s.substr(3)), primed);
    if (s == "D3") return make_ring_type(RingFamily::D3, 0, primed);
    if (s == "E6") return make_ring_type(RingFamily::E6, 0, primed);
    if (s == "E7") return make_ring_type(RingFamily::E7, 0, primed);
    if (s == "E8") return make_ring_type(RingFamily::E8, 0, primed);
    if (!s.empty() && s[0] == 'A') return make_ring_type(RingFamily::A, parse_int(s.substr(1)), primed);
    if (!s.empty() && s[0] == 'D') return make_ring_type(RingFamily::D, parse_int(s.substr(1)), primed);
    bad("unrecognized ring type '" + text + "'");
}

int num_minimal_primes(const RingType& t) {
    switch (t.family) {
        case RingFamily::A: return t.index % 2 == 0 ? 1 : 2;
        case RingFamily::D: return t.index % 2 == 0 ? 3 : 2;
        case RingFamily::E6: return 1;
        case RingFamily::E7: return 2;
        case RingFamily::E8: return 1;
        case RingFamily::A2: return 1;
        case RingFamily::D2: return 2;
        case RingFamily::D3: return 1;
    }
    bad("unknown family");
}

int RankTable::total_count() const {
    int c = 0;
    for (const auto& [r, m] : entries) c += m;
    return c;
}

RankTable rank_table(const RingType& t) {
    RankTable rt;
    rt.num_primes = num_minimal_primes(t);
    auto add = [&](IntVec r, int mult) {
        if (mult > 0) rt.entries.emplace_back(std::move(r), mult);
    };
    switch (t.family) {
        case RingFamily::A: {
            if (t.index % 2 == 0) {
                int n = t.index / 2;
                add(rv({1}), n + 1);
            } else {
                int n = (t.index - 1) / 2;
                add(rv({1, 0}), 1);
                add(rv({0, 1}), 1);
                add(rv({1, 1}), n + 1);
            }
            break;
        }
        case RingFamily::D: {
            if (t.index % 2 == 0) {
                int n = (t.index - 2) / 2;
                add(rv({1, 0, 0}), 1);
                add(rv({0, 1, 0}), 1);
                add(rv({0, 0, 1}), 1);
                add(rv({1, 1, 0}), 1);
                add(rv({1, 0, 1}), 1);
                add(rv({0, 1, 1}), n);
                add(rv({1, 1, 1}), 2 * n + 1);
                add(rv({2, 1, 1}), n - 1);
            } else {
                int n = (t.index - 3) / 2;
                add(rv({1, 0}), 1);
                add(rv({0, 1}), n + 1);
                add(rv({1, 1}), 2 * n + 2);
                add(rv({2, 1}), n);
            }
            break;
        }
        case RingFamily::E6:
            add(rv({1}), 5);
            add(rv({2}), 2);
            break;
        case RingFamily::E7:
            add(rv({1, 0}), 1);
            add(rv({0, 1}), 2);
            add(rv({1, 1}), 6);
            add(rv({1, 2}), 1);
            add(rv({2, 1}), 2);
            add(rv({2, 2}), 3);
            break;
        case RingFamily::E8:
            add(rv({1}), 7);
            add(rv({2}), 7);
            add(rv({3}), 3);
            break;
        case RingFamily::A2:
            add(rv({1}), t.index + 2);
            break;
        case RingFamily::D2: {
            int n = t.index;
            add(rv({1, 0}), 1);
            add(rv({0, 1}), n + 1);
            add(rv({1, 1}), 2 * n + 1);
            add(rv({2, 1}), n);
            break;
        }
        case RingFamily::D3:
            add(rv({1}), 4);
            add(rv({2}), 1);
            break;
    }
    if (t.primed) {
        // Drop one copy of the free module (the all-ones rank vector).
        IntVec ones(size_t(rt.num_primes), Int(1));
        bool found = false;
        for (auto it = rt.entries.begin(); it != rt.entries.end(); ++it) {
            if (it->first == ones) {
                found = true;
                if (--it->second == 0) rt.entries.erase(it);
                break;
            }
        }
        if (!found) bad("primed transform needs an all-ones rank row");
    }
    return rt;
}

int GlueSpec::num_primes() const {
    int s = 0;
    for (const auto& g : groups) s += int(g.size());
    return s;
}

GlueSpec GlueSpec::separate(int s) {
    GlueSpec g;
    for (int i = 1; i <= s; ++i) g.groups.push_back({i});
    return g;
}

GlueSpec GlueSpec::glue_all(int s) {
    GlueSpec g;
    g.groups.emplace_back();
    for (int i = 1; i <= s; ++i) g.groups.back().push_back(i);
    return g;
}

GlueSpec GlueSpec::glue_pair(int s, int a, int b) {
    GlueSpec g;
    g.groups.push_back({a, b});
    for (int i = 1; i <= s; ++i)
        if (i != a && i != b) g.groups.push_back({i});
    return g;
}

std::string GlueSpec::to_string() const {
    std::string s;
    for (size_t i = 0; i < groups.size(); ++i) {
        if (i) s += "|";
        for (size_t j = 0; j < groups[i].size(); ++j) {
            if (j) s += "=";
            s += std::to_string(groups[i][j]);
        }
    }
    return s;
}

GlueSpec validate_glue(const RingType& t, const GlueSpec& g) {
    int s = num_minimal_primes(t);
    GlueSpec norm = g;
    std::vector<int> seen;
    for (auto& grp : norm.groups) {
        if (grp.empty()) bad("empty glue group");
        std::sort(grp.begin(), grp.end());
        for (int p : grp) seen.push_back(p);
    }
    std::sort(norm.groups.begin(), norm.groups.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> expect;
    for (int i = 1; i <= s; ++i) expect.push_back(i);
    if (seen != expect)
        bad("glue groups must partition the primes 1.." + std::to_string(s) + " of " + t.to_string());
    if (s == 3 && norm.m() == 1) {
        // The only pair patterns realized are {1,2} and {2,3}: the second and
        // third primes are exchanged by a coordinate symmetry, so gluing
        // {1,3} is the same ring as gluing {1,2} with columns relabeled.
        for (const auto& grp : norm.groups)
            if (grp.size() == 2 && grp[0] == 1 && grp[1] == 3)
                bad("gluing primes {1,3} is equivalent to gluing {1,2} under the symmetry "
                    "exchanging primes 2 and 3; use --glue 1=2 (case 1) or --glue 2=3 (case 2)");
    }
    return norm;
}

namespace {

std::string rank_vec_label(const IntVec& r) {
    std::string s = "rank(";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += r[i].get_str();
    }
    return s + ")";
}

std::string atom_label(const IntVec& atom, const std::vector<std::string>& labels) {
    std::string s;
    for (size_t i = 0; i < atom.size(); ++i) {
        if (atom[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (atom[i] != 1) s += atom[i].get_str() + "*";
        s += labels[i];
    }
    return s;
}

}  // namespace

CatalogPresentation monoid_presentation(const RingType& t, const GlueSpec& g) {
    GlueSpec glue = validate_glue(t, g);
    RankTable rt = rank_table(t);

    std::vector<IntVec> ranks;
    std::vector<std::string> labels;
    for (const auto& [r, mult] : rt.entries) {
        for (int k = 1; k <= mult; ++k) {
            ranks.push_back(r);
            labels.push_back(mult == 1 ? rank_vec_label(r)
                                       : rank_vec_label(r) + "#" + std::to_string(k));
        }
    }
    const int total = int(ranks.size());

    std::vector<IntVec> rows;
    for (const auto& grp : glue.groups) {
        for (size_t k = 0; k + 1 < grp.size(); ++k) {
            int a = grp[k] - 1, b = grp[k + 1] - 1;
            IntVec row(size_t(total), Int(0));
            for (int j = 0; j < total; ++j) row[j] = ranks[j][a] - ranks[j][b];
            rows.push_back(std::move(row));
        }
    }

    CatalogPresentation cp;
    cp.type = t;
    cp.glue = glue;
    if (rows.empty()) {
        cp.presentation = MonoidPresentation::free_monoid(total);
        cp.labels = labels;
        return cp;
    }

    std::vector<int> constrained, free_cols;
    for (int j = 0; j < total; ++j) {
        bool nonzero = false;
        for (const auto& row : rows)
            if (row[j] != 0) nonzero = true;
        (nonzero ? constrained : free_cols).push_back(j);
    }

    IntMatrix eq(int(rows.size()), int(constrained.size()));
    for (int i = 0; i < eq.rows(); ++i)
        for (int j = 0; j < eq.cols(); ++j) eq.at(i, j) = rows[i][constrained[j]];

    std::vector<std::string> constrained_labels;
    for (int j : constrained) constrained_labels.push_back(labels[j]);

    // If the constrained atoms are linearly independent the constrained part
    // is itself a free monoid on those atoms; fold it into the free part so
    // the presentation is the canonical free one.
    std::vector<IntVec> atoms = minimal_kernel_solutions(eq);
    if (mat_rank(IntMatrix::from_rows(atoms)) == int(atoms.size())) {
        cp.presentation = MonoidPresentation::free_monoid(int(atoms.size() + free_cols.size()));
        cp.folded = true;
        for (const auto& a : atoms) cp.labels.push_back(atom_label(a, constrained_labels));
    } else {
        cp.presentation.equations = eq;
        cp.presentation.free_rank = int(free_cols.size());
        cp.labels = constrained_labels;
    }
    for (int j : free_cols) cp.labels.push_back(labels[j]);
    return cp;
}

RefMatrixId parse_ref_matrix_id(const std::string& text) {
    if (text == "A1") return RefMatrixId::A1;
    if (text == "A2") return RefMatrixId::A2;
    if (text == "A3") return RefMatrixId::A3;
    if (text == "A4") return RefMatrixId::A4;
    if (text == "A5") return RefMatrixId::A5;
    if (text == "A6") return RefMatrixId::A6;
    bad("unknown reference matrix id '" + text + "' (expect A1..A6)");
}

IntMatrix reference_matrix(RefMatrixId id, int n) {
    auto one_row = [](const IntVec& row) {
        IntMatrix m(1, int(row.size()));
        for (int j = 0; j < m.cols(); ++j) m.at(0, j) = row[j];
        return m;
    };
    switch (id) {
        case RefMatrixId::A1:
        case RefMatrixId::A6: {
            if (n < 1) bad("reference matrix needs n >= 1");
            IntVec row;
            row.emplace_back(1);
            for (int i = 0; i <= n; ++i) row.emplace_back(-1);
            for (int i = 0; i < n; ++i) row.emplace_back(1);
            return one_row(row);  // 1 x (2n+2)
        }
        case RefMatrixId::A2: {
            if (n < 2) bad("reference matrix A2 needs n >= 2 (block sizes n-2 appear)");
            IntVec row;
            for (long x : {1L, -1L, 1L, 0L, -1L, 0L}) row.emplace_back(x);
            for (int i = 0; i < n - 2; ++i) row.emplace_back(-1);
            for (int i = 0; i < n - 2; ++i) row.emplace_back(1);
            return one_row(row);  // 1 x (2n+2)
        }
        case RefMatrixId::A3:
            return IntMatrix{{-1, 1, 1, -1}};
        case RefMatrixId::A4: {
            if (n < 1) bad("reference matrix needs n >= 1");
            IntMatrix m(2, 2 * n + 4);
            IntVec r1;
            for (long x : {1L, -1L, 0L, 0L, 1L}) r1.emplace_back(x);
            for (int i = 0; i < n; ++i) r1.emplace_back(-1);
            for (int i = 0; i < n - 1; ++i) r1.emplace_back(1);
            IntVec r2;
            for (long x : {0L, 1L, -1L, 1L, -1L}) r2.emplace_back(x);
            for (int i = 0; i < 2 * n - 1; ++i) r2.emplace_back(0);
            for (int j = 0; j < m.cols(); ++j) {
                m.at(0, j) = r1[j];
                m.at(1, j) = r2[j];
            }
            return m;
        }
        case RefMatrixId::A5:
            return IntMatrix{{1, -1, 1, -1, -1, 1}};
    }
    bad("unknown reference matrix id");
}

namespace {

// Per-coordinate fingerprint: the sorted list of values the atoms take
// there.  Invariant under any coordinate permutation identifying the
// two monoids.
std::vector<IntVec> coordinate_fingerprints(const std::vector<MonoidElement>& atoms, int dim) {
    std::vector<IntVec> fp(size_t(dim), IntVec{});
    for (int j = 0; j < dim; ++j) {
        IntVec vals;
        vals.reserve(atoms.size());
        for (const auto& a : atoms) vals.push_back(a[j]);
        std::sort(vals.begin(), vals.end());
        fp[j] = std::move(vals);
    }
    return fp;
}

bool pair_profiles_equal(const std::vector<MonoidElement>& atoms_a, int ja, int ka,
                         const std::vector<MonoidElement>& atoms_b, int jb, int kb) {
    std::vector<std::pair<Int, Int>> pa, pb;
    pa.reserve(atoms_a.size());
    pb.reserve(atoms_b.size());
    for (const auto& x : atoms_a) pa.emplace_back(x[ja], x[ka]);
    for (const auto& x : atoms_b) pb.emplace_back(x[jb], x[kb]);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

}  // namespace

MatchResult presentations_match(const MonoidPresentation& a, const MonoidPresentation& b) {
    MatchResult res;
    if (a.dim() != b.dim()) {
        res.mismatch_reason = "different total dimensions (" + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()) + ")";
        return res;
    }
    const int dim = a.dim();
    std::vector<MonoidElement> atoms_a = hilbert_basis(a);
    std::vector<MonoidElement> atoms_b = hilbert_basis(b);
    if (atoms_a.size() != atoms_b.size()) {
        res.mismatch_reason = "different atom counts (" + std::to_string(atoms_a.size()) + " vs " +
                              std::to_string(atoms_b.size()) + ")";
        return res;
    }
    std::vector<IntVec> fp_a = coordinate_fingerprints(atoms_a, dim);
    std::vector<IntVec> fp_b = coordinate_fingerprints(atoms_b, dim);
    {
        auto ma = fp_a, mb = fp_b;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) {
            res.mismatch_reason = "coordinate fingerprints differ";
            return res;
        }
    }

    // Backtracking assignment a-coordinate -> b-coordinate, pruned by the
    // single-coordinate fingerprints and pairwise value profiles.
    std::vector<int> assign(size_t(dim), -1);
    std::vector<bool> used(size_t(dim), false);
    long nodes = 0;
    const long node_budget = 2000000;

    std::set<MonoidElement> target(atoms_b.begin(), atoms_b.end());
    auto verify = [&]() {
        for (const auto& x : atoms_a) {
            MonoidElement y(size_t(dim), Int(0));
            for (int j = 0; j < dim; ++j) y[size_t(assign[j])] = x[j];
            if (!target.count(y)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int j) -> bool {
        if (j == dim) return verify();
        for (int c = 0; c < dim; ++c) {
            if (used[c] || fp_a[j] != fp_b[c]) continue;
            if (++nodes > node_budget) return false;
            bool ok = true;
            for (int k = 0; k < j && ok; ++k)
                ok = pair_profiles_equal(atoms_a, j, k, atoms_b, c, assign[k]);
            if (!ok) continue;
            assign[j] = c;
            used[c] = true;
            if (self(self, j + 1)) return true;
            used[c] = false;
            assign[j] = -1;
        }
        return false;
    };

    if (rec(rec, 0)) {
        res.match = true;
        res.permutation = assign;
        return res;
    }
    res.mismatch_reason = nodes > node_budget
                              ? "search budget exceeded"
                              : "no coordinate permutation maps the atom sets onto each other";
    return res;
}

ARSolveResult ar_rank_solve(const ARSystem& sys) {
    ARSolveResult out;
    const int s = sys.num_primes;
    if (s <= 0) {
        out.failure = "number of primes must be positive";
        return out;
    }
    for (const auto& [name, r] : sys.known)
        if (int(r.size()) != s) {
            out.failure = "known rank vector for '" + name + "' has wrong length";
            return out;
        }

    std::set<std::string> unknown_set;
    auto note = [&](const std::string& name) {
        if (!sys.known.count(name)) unknown_set.insert(name);
    };
    for (const auto& q : sys.sequences) {
        note(q.left);
        note(q.right);
        for (const auto& [name, mult] : q.middle) {
            if (mult <= 0) {
                out.failure = "nonpositive multiplicity in a middle term";
                return out;
            }
            note(name);
        }
    }
    for (const auto& name : sys.wanted) note(name);
    std::vector<std::string> unknowns(unknown_set.begin(), unknown_set.end());
    const int nu = int(unknowns.size());
    auto uindex = [&](const std::string& name) -> int {
        auto it = unknown_set.find(name);
        if (it == unknown_set.end()) return -1;
        return int(std::distance(unknown_set.begin(), it));
    };

    const int ns = int(sys.sequences.size());
    RatMatrix m(ns, nu);
    std::vector<RatVec> rhs(size_t(s), RatVec(size_t(ns), Rat(0)));
    for (int i = 0; i < ns; ++i) {
        const auto& q = sys.sequences[i];
        auto contribute = [&](const std::string& name, long coeff) {
            int j = uindex(name);
            if (j >= 0) {
                m.at(i, j) += Rat(coeff);
            } else {
                const IntVec& r = sys.known.at(name);
                for (int c = 0; c < s; ++c) rhs[c][i] -= Rat(coeff) * Rat(r[c]);
            }
        };
        for (const auto& [name, mult] : q.middle) contribute(name, mult);
        contribute(q.left, -1);
        contribute(q.right, -1);
    }

    // Solve m * x = rhs[c] for each coordinate c.
    std::vector<RatVec> solution(size_t(s), RatVec{});
    for (int c = 0; c < s; ++c) {
        auto sol = rat_solve(m, rhs[c]);
        if (!sol) {
            out.failure = "inconsistent: no rank assignment satisfies all sequences";
            return out;
        }
        solution[c] = *sol;
    }
    if (nu > 0 && !rat_nullspace(m).empty()) {
        RatMatrix mm = m;
        std::vector<int> pivots = rat_rref(mm);
        std::set<int> pivot_set(pivots.begin(), pivots.end());
        for (int j = 0; j < nu; ++j)
            if (!pivot_set.count(j)) out.free_modules.push_back(unknowns[j]);
        out.failure = "underdetermined: the sequences do not pin down every module";
        return out;
    }

    out.ranks = sys.known;
    for (int j = 0; j < nu; ++j) {
        IntVec r(size_t(s), Int(0));
        for (int c = 0; c < s; ++c) {
            const Rat& x = solution[c][j];
            if (x.get_den() != 1 || x.get_num() < 0) {
                out.failure = "the unique solution is not a nonnegative integer vector (module '" +
                              unknowns[j] + "')";
                out.ranks.clear();
                return out;
            }
            r[c] = x.get_num();
        }
        out.ranks[unknowns[j]] = r;
    }
    out.solved = true;
    return out;
}

ARSystem d6_rank_system(bool corrected_middle) {
    ARSystem sys;
    sys.num_primes = 3;
    sys.known["R/P1"] = rv({1, 0, 0});
    sys.known["R/(P2^P3)"] = rv({0, 1, 1});
    sys.known["R/(P1^P2)"] = rv({1, 1, 0});
    sys.known["R/(P1^P3)"] = rv({1, 0, 1});
    sys.sequences.push_back({"R/P1", {{"X1", 1}}, "R/(P2^P3)"});
    sys.sequences.push_back({"R/(P2^P3)", {{"Y1", 1}}, "R/P1"});
    sys.sequences.push_back({"X1", {{"R/(P2^P3)", 1}, {"N1", 1}}, "Y1"});
    if (corrected_middle) {
        sys.sequences.push_back({"Y1", {{"R/(P1^P2)", 1}, {"R/(P1^P3)", 1}, {"M1", 1}}, "X1"});
    } else {
        sys.sequences.push_back({"Y1", {{"R/P1", 1}, {"M1", 1}}, "X1"});
    }
    sys.sequences.push_back({"M1", {{"X1", 1}, {"Y2", 1}}, "N1"});
    sys.sequences.push_back({"N1", {{"Y1", 1}, {"X2", 1}}, "M1"});
    return sys;
}

}  // namespace mcm
