#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "mcm/hilbert.hpp"

using namespace mcm;

namespace {

// Brute-force oracle: minimal nonzero solutions of A v = 0 inside the box
// [0,B]^t, found by DFS with per-row reachability pruning.  Any minimal
// solution whose coordinates are bounded by B is found; conversely every
// reported vector is globally minimal (a dominating-smaller solution would
// itself lie inside the box).
std::vector<IntVec> brute_box_minimal(const IntMatrix& a, long B) {
    const int t = a.cols(), s = a.rows();
    std::vector<IntVec> sols;
    // Remaining min/max contribution per row for suffix columns.
    std::vector<IntVec> maxrest(t + 1, IntVec(s, Int(0))), minrest(t + 1, IntVec(s, Int(0)));
    for (int j = t - 1; j >= 0; --j)
        for (int i = 0; i < s; ++i) {
            Int c = a.at(i, j);
            maxrest[j][i] = maxrest[j + 1][i] + (c > 0 ? c * B : Int(0));
            minrest[j][i] = minrest[j + 1][i] + (c < 0 ? c * B : Int(0));
        }
    IntVec v(t, Int(0)), partial(s, Int(0));
    auto rec = [&](auto&& self, int j) -> void {
        if (j == t) {
            if (!vec_is_zero(v) && vec_is_zero(partial)) sols.push_back(v);
            return;
        }
        for (long x = 0; x <= B; ++x) {
            v[j] = x;
            bool feasible = true;
            for (int i = 0; i < s; ++i) {
                if (partial[i] + maxrest[j + 1][i] < 0 || partial[i] + minrest[j + 1][i] > 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) self(self, j + 1);
            for (int i = 0; i < s; ++i) partial[i] += a.at(i, j);
        }
        for (int i = 0; i < s; ++i) partial[i] -= a.at(i, j) * Int(B + 1);
        v[j] = 0;
    };
    rec(rec, 0);
    // Minimal filter.
    std::vector<IntVec> min;
    for (const auto& x : sols) {
        bool dominated = false;
        for (const auto& y : sols)
            if (y != x && vec_leq(y, x)) { dominated = true; break; }
        if (!dominated) min.push_back(x);
    }
    std::sort(min.begin(), min.end(), graded_lex_less);
    return min;
}

// Doubling stabilization: accept once the minimal sets at B and 2B agree
// and fit strictly inside the smaller box.
std::vector<IntVec> brute_oracle(const IntMatrix& a) {
    long B = 4;
    for (;;) {
        auto s1 = brute_box_minimal(a, B);
        auto s2 = brute_box_minimal(a, 2 * B);
        bool inside = true;
        for (const auto& v : s1)
            for (const auto& x : v)
                if (x >= B) inside = false;
        if (inside && s1 == s2) return s1;
        B *= 2;
        REQUIRE(B <= 64);  // oracle sized for small random systems
    }
}

}  // namespace

TEST_CASE("hilbert basis: frozen two-equation example") {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, -1, 0, 0, 1, -1}, {0, 1, -1, 1, -1, 0}};
    auto hb = hilbert_basis(p);
    std::set<IntVec> got(hb.begin(), hb.end());
    std::set<IntVec> want = {
        {Int(1), Int(0), Int(0), Int(0), Int(0), Int(1)},
        {Int(0), Int(1), Int(0), Int(0), Int(1), Int(0)},
        {Int(0), Int(0), Int(1), Int(1), Int(0), Int(0)},
        {Int(1), Int(1), Int(1), Int(0), Int(0), Int(0)},
        {Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)},
    };
    CHECK(got == want);
    CHECK(hb.size() == 5);
    for (const auto& v : hb) CHECK(contains(p, v));
}

TEST_CASE("hilbert basis: frozen one-equation example") {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, -1, -1, 1}};
    auto hb = hilbert_basis(p);
    std::set<IntVec> got(hb.begin(), hb.end());
    std::set<IntVec> want = {
        {Int(1), Int(1), Int(0), Int(0)},
        {Int(1), Int(0), Int(1), Int(0)},
        {Int(0), Int(1), Int(0), Int(1)},
        {Int(0), Int(0), Int(1), Int(1)},
    };
    CHECK(got == want);
}

TEST_CASE("hilbert basis: diagonal and free parts") {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, -1}};
    p.free_rank = 2;
    auto hb = hilbert_basis(p);
    std::set<IntVec> got(hb.begin(), hb.end());
    std::set<IntVec> want = {
        {Int(1), Int(1), Int(0), Int(0)},
        {Int(0), Int(0), Int(1), Int(0)},
        {Int(0), Int(0), Int(0), Int(1)},
    };
    CHECK(got == want);

    MonoidPresentation fr = MonoidPresentation::free_monoid(3);
    CHECK(hilbert_basis(fr).size() == 3);
}

TEST_CASE("hilbert basis: non-unit coefficients") {
    MonoidPresentation p;
    p.equations = IntMatrix{{2, -3}};
    auto hb = hilbert_basis(p);
    REQUIRE(hb.size() == 1);
    CHECK(hb[0] == IntVec{Int(3), Int(2)});

    MonoidPresentation q;
    q.equations = IntMatrix{{1, 1}};  // pointed: only the origin solves it
    CHECK(hilbert_basis(q).empty());
}

TEST_CASE("atoms are pairwise incomparable and minimal") {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, -1, 0, 0, 1, -1}, {0, 1, -1, 1, -1, 0}};
    auto hb = hilbert_basis(p);
    for (size_t i = 0; i < hb.size(); ++i)
        for (size_t j = 0; j < hb.size(); ++j)
            if (i != j) CHECK(!vec_leq(hb[i], hb[j]));
    for (const auto& v : hb) CHECK(is_atom(p, v));
    // A sum of two atoms is in the monoid but not an atom.
    IntVec sum(hb[0].size(), Int(0));
    for (size_t k = 0; k < sum.size(); ++k) sum[k] = hb[0][k] + hb[1][k];
    CHECK(contains(p, sum));
    CHECK(!is_atom(p, sum));
}

TEST_CASE("hilbert basis agrees with the brute-force box oracle") {
    std::mt19937_64 rng(424242u);
    std::uniform_int_distribution<int> sd(1, 3), td(2, 6), vd(-2, 2);
    for (int iter = 0; iter < 60; ++iter) {
        IntMatrix a(sd(rng), td(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = vd(rng);
        auto expect = brute_oracle(a);
        auto got = minimal_kernel_solutions(a);
        CHECK(got == expect);
    }
}
