// Acceptance gate: ten criteria, each printing one PASS/FAIL line.
// Every expected value here was either derived independently of the
// implementation (brute-force oracles, hand computation) or frozen from
// the published tables the catalog reproduces.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "mcm/artin.hpp"
#include "mcm/blocks.hpp"
#include "mcm/branch.hpp"
#include "mcm/catalog.hpp"
#include "mcm/classgroup.hpp"
#include "mcm/factor.hpp"
#include "mcm/groebner.hpp"
#include "mcm/hilbert.hpp"
#include "mcm/mf.hpp"
#include "mcm/poly.hpp"

using namespace mcm;

namespace {

// Collects the verdicts of one criterion and prints its line on scope exit.
struct Gate {
    std::string label;
    bool ok = true;
    explicit Gate(std::string l) : label(std::move(l)) {}
    void check(bool c) {
        ok = ok && c;
        CHECK(c);
    }
    ~Gate() {
        std::printf("%s — %s\n", ok ? "PASS" : "FAIL", label.c_str());
        std::fflush(stdout);
    }
};

MonoidPresentation running_example() {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, -1, 0, 0, 1, -1}, {0, 1, -1, 1, -1, 0}};
    return p;
}

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// One catalog row: a ring type, a gluing, and the tabulated expectations.
struct CatalogRow {
    std::string type;
    GlueSpec glue;
    int cl_rank;      // free rank of the divisor class group
    bool factorial;   // Krull-Schmidt holds
    bool half_fact;   // every length set is a singleton
};

std::vector<CatalogRow> catalog_rows() {
    std::vector<CatalogRow> rows;
    auto add = [&](const std::string& t, const GlueSpec& g, int cl, bool fac, bool hf) {
        rows.push_back({t, g, cl, fac, hf});
    };
    for (int n = 1; n <= 4; ++n) {
        // one branch: no gluing possible
        add("A" + std::to_string(2 * n), GlueSpec::separate(1), 0, true, true);
        add("A2:" + std::to_string(n), GlueSpec::separate(1), 0, true, true);
        // two branches
        for (std::string t : {"A" + std::to_string(2 * n + 1), "D" + std::to_string(2 * n + 3),
                              "D2:" + std::to_string(n)}) {
            add(t, GlueSpec::separate(2), 0, true, true);
            bool a_odd = t[0] == 'A' && t.find(':') == std::string::npos;
            add(t, GlueSpec::glue_all(2), a_odd ? 0 : 1, a_odd, true);
        }
        // three branches
        {
            std::string t = "D" + std::to_string(2 * n + 2);
            add(t, GlueSpec::separate(3), 0, true, true);
            add(t, GlueSpec::glue_pair(3, 1, 2), 1, false, true);
            add(t, GlueSpec::glue_pair(3, 2, 3), 1, false, true);
            add(t, GlueSpec::glue_all(3), 2, false, false);
        }
    }
    for (std::string t : {"E6", "E8", "D3"}) add(t, GlueSpec::separate(1), 0, true, true);
    add("E7", GlueSpec::separate(2), 0, true, true);
    add("E7", GlueSpec::glue_all(2), 1, false, true);
    // endomorphism-ring variants: same verdicts (the dropped module is a
    // free column, zero in every gluing equation)
    for (std::string t : {"E6'", "E8'", "D3'"}) add(t, GlueSpec::separate(1), 0, true, true);
    add("E7'", GlueSpec::separate(2), 0, true, true);
    add("E7'", GlueSpec::glue_all(2), 1, false, true);
    add("A5'", GlueSpec::glue_all(2), 0, true, true);   // normalizes to A3
    add("D5'", GlueSpec::glue_all(2), 1, false, true);
    add("D6'", GlueSpec::glue_pair(3, 1, 2), 1, false, true);
    add("D6'", GlueSpec::glue_all(3), 2, false, false);
    add("A2:2'", GlueSpec::separate(1), 0, true, true);  // normalizes to A2:1
    return rows;
}

NumberField root2_field() { return NumberField::quadratic(Rat(2)); }

// Independent length-set oracle: plain recursion over a reversed atom
// list, no sharing with the library's enumeration order.
void oracle_lengths_rec(const std::vector<MonoidElement>& atoms, size_t from, IntVec rest,
                        long depth, std::multiset<long>& out, long& count) {
    bool zero = true;
    for (const Int& x : rest) zero = zero && x == 0;
    if (zero) {
        out.insert(depth);
        ++count;
        return;
    }
    for (size_t i = from; i < atoms.size(); ++i) {
        IntVec next = rest;
        bool fits = true;
        for (size_t k = 0; k < next.size(); ++k) {
            next[k] -= atoms[i][k];
            if (next[k] < 0) fits = false;
        }
        if (fits) oracle_lengths_rec(atoms, i, next, depth + 1, out, count);
    }
}

}  // namespace

TEST_CASE("criterion 1") {
    Gate gate("criterion 1: the two-equation six-coordinate kernel monoid has exactly its five atoms");
    auto atoms = hilbert_basis(running_example());
    gate.check(atoms.size() == 5);
    std::set<IntVec> got(atoms.begin(), atoms.end());
    std::set<IntVec> want = {iv({0, 0, 1, 1, 0, 0}), iv({0, 1, 0, 0, 1, 0}), iv({1, 0, 0, 0, 0, 1}),
                             iv({0, 0, 0, 1, 1, 1}), iv({1, 1, 1, 0, 0, 0})};
    gate.check(got == want);
}

TEST_CASE("criterion 2") {
    Gate gate("criterion 2: elasticity 3/2, length set {2,3} at the all-ones element, not half-factorial");
    MonoidPresentation p = running_example();
    gate.check(elasticity_monoid(p) == Rat(3, 2));
    std::set<Int> ls = length_set(p, iv({1, 1, 1, 1, 1, 1}));
    gate.check(ls == std::set<Int>({Int(2), Int(3)}));
    gate.check(!is_half_factorial(p));
    gate.check(!is_factorial(p));
}

TEST_CASE("criterion 3") {
    Gate gate("criterion 3: divisor class group matches the catalog on every row (n = 1..4), with "
              "the embedding hypotheses verified");
    auto rows = catalog_rows();
    gate.check(rows.size() >= 26);
    for (const auto& row : rows) {
        CatalogPresentation c = monoid_presentation(parse_ring_type(row.type), row.glue);
        ClassGroupResult r = class_group(c.presentation);
        bool good = r.justified && r.group.free_rank == row.cl_rank && r.group.torsion.empty();
        if (!good) MESSAGE("class group mismatch at " << row.type << " glue " << row.glue.to_string());
        gate.check(good);
        if (row.glue.m() > 0 && !c.folded) {
            gate.check(zbasis_in_monoid_check(c.presentation));
            gate.check(divisor_theory_check(c.presentation).all_proved());
        }
    }
}

TEST_CASE("criterion 4") {
    Gate gate("criterion 4: factorial and half-factorial verdicts match the catalog on every row "
              "(n = 1..4)");
    for (const auto& row : catalog_rows()) {
        CatalogPresentation c = monoid_presentation(parse_ring_type(row.type), row.glue);
        bool fac = is_factorial(c.presentation);
        bool hf = is_half_factorial(c.presentation);
        bool good = fac == row.factorial && hf == row.half_fact;
        if (!good) MESSAGE("verdict mismatch at " << row.type << " glue " << row.glue.to_string());
        gate.check(good);
        // the exact elasticity agrees with the verdict on the rows where its
        // relation-monoid computation stays small
        if (c.presentation.dim() <= 13) {
            Rat rho = elasticity_monoid(c.presentation);
            gate.check(hf == (rho == Rat(1)));
            if (!row.half_fact) gate.check(rho > 1);
        }
    }
    // the fully glued three-branch rows reach elasticity 3/2
    for (int n = 1; n <= 2; ++n) {
        CatalogPresentation c = monoid_presentation(
            parse_ring_type("D" + std::to_string(2 * n + 2)), GlueSpec::glue_all(3));
        gate.check(elasticity_monoid(c.presentation) == Rat(3, 2));
    }
}

TEST_CASE("criterion 5") {
    Gate gate("criterion 5: all matrix factorizations verify; reducedness holds exactly below the "
              "boundary index; any single-coefficient tamper is detected");
    NumberField k = root2_field();
    for (int n = 1; n <= 5; ++n) {
        auto fam = two_branch_family(k, n);
        gate.check(static_cast<int>(fam.size()) == 2 * n + 2);
        for (int j = 1; j <= 2 * n + 2; ++j) {
            const NamedMF& m = fam[size_t(j) - 1];
            gate.check(verify_mf(m.f, m.phi, m.psi).ok());
            bool reduced = is_reduced_mf(m.phi) && is_reduced_mf(m.psi);
            gate.check(reduced == (j <= 2 * n + 1));  // the last index presents a free summand
        }
    }
    for (int n = 1; n <= 4; ++n) {
        auto fam = three_branch_family(k, n);
        std::set<std::string> names;
        for (const NamedMF& m : fam) {
            gate.check(verify_mf(m.f, m.phi, m.psi).ok());
            names.insert(m.name);
        }
        for (std::string c : {"A", "B", "C", "D", "E", "F"}) gate.check(names.count(c) == 1);
    }
    {
        auto sp = NumberField::splitting_field(Rat(0), Rat(0), Rat(-2));
        for (const NamedMF& m : cubic_family(sp.field, Rat(0), Rat(0), Rat(-2)))
            gate.check(verify_mf(m.f, m.phi, m.psi).ok());
    }
    // tampering: bump one coefficient of one entry on either side
    {
        auto fam = two_branch_family(k, 2);
        NamedMF m = fam[2];
        PolyMatrix phi = m.phi;
        phi.at(0, 0) = phi.at(0, 0) + Poly::parse(k, "1");
        gate.check(!verify_mf(m.f, phi, m.psi).ok());
        PolyMatrix psi = m.psi;
        psi.at(psi.rows() - 1, psi.cols() - 1) =
            psi.at(psi.rows() - 1, psi.cols() - 1) + Poly::parse(k, "y");
        gate.check(!verify_mf(m.f, m.phi, psi).ok());
        gate.check(verify_mf(m.f, m.phi, m.psi).ok());
    }
}

TEST_CASE("criterion 6") {
    Gate gate("criterion 6: Fitting ideals take their closed forms, separate the ambiguous pairs, "
              "and settle the ideal-membership questions");
    NumberField k = root2_field();
    auto P = [&](const std::string& s) { return Poly::parse(k, s); };
    for (int n = 1; n <= 4; ++n) {
        auto fam = two_branch_family(k, n);
        for (int j = 1; j <= 2 * n + 2; ++j) {
            int e = std::min(j, 2 * n + 2 - j);
            auto got = fitting_ideal(fam[size_t(j) - 1].phi, 1);
            if (e == 0)
                gate.check(ideal_equal(got, {P("1")}));
            else
                gate.check(ideal_equal(got, {P("x"), P("y^" + std::to_string(e))}));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        auto fam = three_branch_family(k, n);
        std::string y2n = "y^" + std::to_string(2 * n);
        Poly f = P("(x - y)*(xi^2*" + y2n + " - x^2)");
        Poly fx = P("(x - y)^2*(xi^2*" + y2n + " - x^2)");
        const NamedMF* alpha_n = nullptr;
        const NamedMF *B = nullptr, *C = nullptr;
        for (const NamedMF& m : fam) {
            if (m.name.rfind("alpha_", 0) == 0) {
                gate.check(ideal_equal(fitting_ideal(m.phi, 2), {f}));
                if (m.name == "alpha_" + std::to_string(n)) alpha_n = &m;
            }
            if (m.name.rfind("psi_", 0) == 0) {
                gate.check(ideal_equal(fitting_ideal(m.phi, 2), {fx}));
                int i = std::stoi(m.name.substr(4));
                gate.check(ideal_equal(
                    fitting_ideal(m.phi, 1),
                    {P("x*(x - y)"), P("y^" + std::to_string(i) + "*(x - y)")}));
            }
            if (m.name == "B") B = &m;
            if (m.name == "C") C = &m;
        }
        gate.check(alpha_n && B && C);
        if (alpha_n && B && C) {
            // direct sum of the two cyclics: same first Fitting ideal as
            // alpha_n, different second — so I_1 alone cannot tell them apart
            PolyMatrix bc = pm_diag(k, {B->phi.at(0, 0), C->phi.at(0, 0)});
            gate.check(ideal_equal(fitting_ideal(bc, 1), fitting_ideal(alpha_n->phi, 1)));
            gate.check(!ideal_equal(fitting_ideal(bc, 2), fitting_ideal(alpha_n->phi, 2)));
        }
    }
    // x in (x - y, xi*y^n + x) exactly when n = 1
    for (int n = 1; n <= 4; ++n) {
        auto basis = groebner_basis({P("x - y"), P("xi*y^" + std::to_string(n) + " + x")});
        gate.check(ideal_member(P("x"), basis) == (n == 1));
    }
}

TEST_CASE("criterion 7") {
    Gate gate("criterion 7: cokernel ranks at the branches match the tables for every family "
              "member (n <= 4); presentation sizes are consistent with the tables");
    NumberField k = root2_field();
    for (int n = 1; n <= 4; ++n) {
        auto branches = two_branch_points(k, n);
        for (const NamedMF& m : two_branch_family(k, n))
            gate.check(rank_vector(m.phi, branches) == m.expected_rank);
        auto branches3 = three_branch_points(k, n);
        for (const NamedMF& m : three_branch_family(k, n))
            gate.check(rank_vector(m.phi, branches3) == m.expected_rank);
    }
    {
        auto sp = NumberField::splitting_field(Rat(0), Rat(0), Rat(-2));
        auto branches = cubic_branch_points(sp.field, sp.roots);
        for (const NamedMF& m : cubic_family(sp.field, Rat(0), Rat(0), Rat(-2)))
            gate.check(rank_vector(m.phi, branches) == m.expected_rank);
    }
    for (const auto& row : catalog_rows()) {
        RingType t = parse_ring_type(row.type);
        CatalogPresentation c = monoid_presentation(t, row.glue);
        int total = rank_table(t).total_count();
        gate.check(static_cast<int>(c.labels.size()) == c.presentation.dim());
        if (c.folded)
            gate.check(c.presentation.dim() == total - 1);  // two columns merged into one atom
        else
            gate.check(c.presentation.dim() == total);
    }
}

TEST_CASE("criterion 8") {
    Gate gate("criterion 8: the six-sequence rank system determines the tabulated ranks once the "
              "inconsistent middle term is repaired, and pins the repair down");
    ARSolveResult good = ar_rank_solve(d6_rank_system(true));
    gate.check(good.solved);
    if (good.solved) {
        auto want = [&](const std::string& name, std::initializer_list<long> v) {
            auto it = good.ranks.find(name);
            gate.check(it != good.ranks.end() && it->second == iv(v));
        };
        want("X1", {1, 1, 1});
        want("X2", {1, 1, 1});
        want("Y1", {1, 1, 1});
        want("Y2", {1, 1, 1});
        want("M1", {0, 1, 1});
        want("N1", {2, 1, 1});
    }
    // the uncorrected middle still solves, but to ranks that contradict the
    // table — the discrepancy is visible, not silent
    ARSolveResult bad = ar_rank_solve(d6_rank_system(false));
    gate.check(bad.solved);
    if (bad.solved) {
        gate.check(bad.ranks.at("M1") == iv({1, 2, 2}));
        gate.check(bad.ranks.at("X2") == iv({2, 2, 2}));
        gate.check(bad.ranks.at("M1") != good.ranks.at("M1"));
    }
}

TEST_CASE("criterion 9") {
    Gate gate("criterion 9: the alleged rank-four indecomposable splits into two certified rank-two "
              "summands (V = 3+3) under the convention that validates it; the rank-three companion "
              "splits into three rank-ones; both stable across seeds and random basis changes");
    GaloisCubic g = make_galois_cubic(Rat(0), Rat(0), Rat(-2));
    PairModule m4 = build_rank4_module(g, PairConvention::diagonal);
    gate.check(validate_pair(m4).ok());
    gate.check(!validate_pair(build_rank4_module(g, PairConvention::twisted)).ok());
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Decomposition d = decompose(m4, seed);
        gate.check(d.summands.size() == 2);
        for (const Summand& s : d.summands) {
            gate.check(s.module.rank() == 2);
            gate.check(s.module.w_dim() == 6);
            gate.check(s.module.v_dim() == 3);
            gate.check(s.certified_indecomposable);
        }
        gate.check(verify_decomposition(m4, d));
    }
    {
        PairModule m3 = build_rank3_module(g, PairConvention::twisted);
        gate.check(validate_pair(m3).ok());
        Decomposition d = decompose(m3, 1);
        gate.check(d.summands.size() == 3);
        for (const Summand& s : d.summands) {
            gate.check(s.module.rank() == 1);
            gate.check(s.module.w_dim() == 3);
            gate.check(s.module.v_dim() == 1);
            gate.check(s.certified_indecomposable);
        }
        gate.check(verify_decomposition(m3, d));
    }
    // the split multiset is invariant under conjugating W by a random
    // change of basis (a product of shears, so the inverse stays integral)
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2; ++trial) {
        int n = m4.w_dim();
        RatMatrix T = RatMatrix::identity(n), Tinv = RatMatrix::identity(n);
        for (int k = 0; k < 20; ++k) {
            int i = int(rng() % uint64_t(n)), j = int(rng() % uint64_t(n));
            long c = long(rng() % 3) - 1;
            if (i == j || c == 0) continue;
            RatMatrix E = RatMatrix::identity(n), Einv = RatMatrix::identity(n);
            E.at(i, j) = c;
            Einv.at(i, j) = -c;
            T = rat_mul(E, T);
            Tinv = rat_mul(Tinv, Einv);
        }
        PairModule moved;
        moved.name = "conjugated";
        moved.theta_minpoly = m4.theta_minpoly;
        moved.theta = rat_mul(rat_mul(T, m4.theta), Tinv);
        for (const RatVec& v : m4.v_basis) moved.v_basis.push_back(rat_apply(T, v));
        gate.check(validate_pair(moved).ok());
        Decomposition d = decompose(moved, 3 + uint64_t(trial));
        gate.check(d.summands.size() == 2);
        for (const Summand& s : d.summands) {
            gate.check(s.module.w_dim() == 6);
            gate.check(s.module.v_dim() == 3);
        }
        gate.check(verify_decomposition(moved, d));
    }
}

TEST_CASE("criterion 10") {
    Gate gate("criterion 10: property suites — random presentations against a brute-force atom "
              "oracle, independently re-derived length sets, and normal-form postconditions on "
              "random integer matrices");
    std::mt19937_64 rng(2024);

    // (a) 200 random presentations, brute-force oracle up to coordinate sum 5
    const long B = 5;
    for (int trial = 0; trial < 200; ++trial) {
        int t = int(rng() % 7);       // 0..6 constrained
        int u = int(rng() % 3);       // small free part, t + u <= 8
        int s = int(rng() % 3);
        MonoidPresentation p;
        p.equations = IntMatrix(s, t);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j) p.equations.at(i, j) = long(rng() % 5) - 2;
        p.free_rank = u;
        auto atoms = hilbert_basis(p);
        for (const auto& a : atoms) gate.check(contains(p, a));
        // atoms are pairwise incomparable
        for (size_t i = 0; i < atoms.size(); ++i)
            for (size_t j = 0; j < atoms.size(); ++j) {
                if (i == j) continue;
                bool leq = true;
                for (size_t x = 0; x < atoms[i].size(); ++x) leq = leq && atoms[i][x] <= atoms[j][x];
                gate.check(!leq);
            }
        // brute-force all monoid elements with coordinate sum <= B
        std::vector<IntVec> brute;
        IntVec cur(size_t(p.dim()), Int(0));
        std::function<void(int, long)> enumerate = [&](int pos, long budget) {
            if (pos == p.dim()) {
                if (contains(p, cur)) brute.push_back(cur);
                return;
            }
            for (long v = 0; v <= budget; ++v) {
                cur[size_t(pos)] = v;
                enumerate(pos + 1, budget - v);
            }
            cur[size_t(pos)] = 0;
        };
        enumerate(0, B);
        std::set<IntVec> smalls(brute.begin(), brute.end());
        // irreducible within the bound iff listed as an atom
        std::set<IntVec> atom_set(atoms.begin(), atoms.end());
        for (const IntVec& v : brute) {
            bool zero = true;
            for (const Int& x : v) zero = zero && x == 0;
            if (zero) continue;
            bool reducible = false;
            for (const IntVec& a : brute) {
                if (a == v) continue;
                bool azero = true, fits = true;
                IntVec rest = v;
                for (size_t x = 0; x < v.size(); ++x) {
                    azero = azero && a[x] == 0;
                    rest[x] -= a[x];
                    fits = fits && rest[x] >= 0;
                }
                if (azero || !fits) continue;
                if (smalls.count(rest)) {
                    bool rzero = true;
                    for (const Int& x : rest) rzero = rzero && x == 0;
                    if (!rzero) reducible = true;
                }
                if (reducible) break;
            }
            gate.check(atom_set.count(v) == (reducible ? 0u : 1u));
        }
    }

    // (b) length sets on catalog monoids re-derived by an independent search
    for (const char* spec : {"D6 2", "D5 1", "E7 1", "D2:2 1", "D4 2"}) {
        std::string text(spec);
        auto sep = text.find(' ');
        RingType t = parse_ring_type(text.substr(0, sep));
        int m = std::stoi(text.substr(sep + 1));
        int s = num_minimal_primes(t);
        GlueSpec glue = m == 0 ? GlueSpec::separate(s)
                               : (m == s - 1 ? GlueSpec::glue_all(s) : GlueSpec::glue_pair(s, 1, 2));
        MonoidPresentation p = monoid_presentation(t, glue).presentation;
        auto atoms = hilbert_basis(p);
        std::vector<MonoidElement> reversed(atoms.rbegin(), atoms.rend());
        for (int trial = 0; trial < 25; ++trial) {
            int pieces = 1 + int(rng() % 4);
            IntVec v(size_t(p.dim()), Int(0));
            for (int i = 0; i < pieces; ++i) {
                const IntVec& a = atoms[rng() % atoms.size()];
                for (size_t x = 0; x < v.size(); ++x) v[x] += a[x];
            }
            Int sum = 0;
            for (const Int& x : v) sum += x;
            if (sum > 12) continue;
            std::multiset<long> oracle;
            long count = 0;
            oracle_lengths_rec(reversed, 0, v, 0, oracle, count);
            std::set<Int> expect;
            for (long l : oracle) expect.insert(Int(l));
            gate.check(length_set(p, v) == expect);
            gate.check(static_cast<long>(factorizations(p, v).size()) == count);
            Rat rho = elasticity_element(p, v);
            gate.check(rho == Rat(*std::max_element(oracle.begin(), oracle.end())) /
                                  Rat(*std::min_element(oracle.begin(), oracle.end())));
        }
    }

    // (c) 500 random matrices: normal-form postconditions
    for (int trial = 0; trial < 500; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        IntMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = long(rng() % 19) - 9;
        HermiteResult hr = hermite_normal_form(a);
        Int du = mat_det(hr.u);
        gate.check(du == 1 || du == -1);
        gate.check(mat_mul(hr.u, a) == hr.h);
        gate.check(lattice_equal(a, hr.h));
        int last_pivot = -1;
        bool seen_zero_row = false;
        bool shape = true;
        for (int i = 0; i < hr.h.rows(); ++i) {
            int piv = -1;
            for (int j = 0; j < hr.h.cols(); ++j)
                if (hr.h.at(i, j) != 0) {
                    piv = j;
                    break;
                }
            if (piv < 0) {
                seen_zero_row = true;
                continue;
            }
            shape = shape && !seen_zero_row && piv > last_pivot && hr.h.at(i, piv) > 0;
            for (int i2 = 0; i2 < i; ++i2)
                shape = shape && hr.h.at(i2, piv) >= 0 && hr.h.at(i2, piv) < hr.h.at(i, piv);
            last_pivot = piv;
        }
        gate.check(shape);
        SmithResult sr = smith_normal_form(a);
        Int dU = mat_det(sr.u), dV = mat_det(sr.v);
        gate.check((dU == 1 || dU == -1) && (dV == 1 || dV == -1));
        gate.check(mat_mul(mat_mul(sr.u, a), sr.v) == sr.d);
        bool diag_ok = true;
        std::vector<Int> diag;
        for (int i = 0; i < sr.d.rows(); ++i)
            for (int j = 0; j < sr.d.cols(); ++j) {
                if (i != j && sr.d.at(i, j) != 0) diag_ok = false;
                if (i == j) diag.push_back(sr.d.at(i, j));
            }
        for (size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) diag_ok = false;
            if (i > 0 && diag[i - 1] == 0 && diag[i] != 0) diag_ok = false;  // zeros trail
            if (i > 0 && diag[i - 1] != 0 && diag[i] != 0 && diag[i] % diag[i - 1] != 0)
                diag_ok = false;
        }
        gate.check(diag_ok);
        IntMatrix ker = kernel_lattice_basis(a);
        gate.check(ker.rows() == c - mat_rank(a));
        for (int i = 0; i < ker.rows(); ++i) {
            IntVec prod = mat_apply(a, ker.row(i));
            for (const Int& x : prod) gate.check(x == 0);
        }
    }
}
