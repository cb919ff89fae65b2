#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcm/qpoly.hpp"

using namespace mcm;

namespace {

QPoly P(std::initializer_list<long> coeffs) {
    QPoly p;
    for (long c : coeffs) p.push_back(Rat(c));
    return qp_normalize(std::move(p));
}

QPoly product(const std::vector<QFactor>& fs) {
    QPoly r = {Rat(1)};
    for (const auto& f : fs)
        for (int i = 0; i < f.multiplicity; ++i) r = qp_mul(r, f.factor);
    return r;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    QPoly a = P({1, 2, 1});       // (X+1)^2
    QPoly b = P({-1, 1});         // X-1
    CHECK(qp_deg(a) == 2);
    CHECK(qp_mul(b, b) == P({1, -2, 1}));
    auto [q, r] = qp_divmod(a, b);
    CHECK(q == P({3, 1}));
    CHECK(r == P({4}));
    CHECK(qp_gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
    CHECK(qp_derivative(a) == P({2, 2}));
    CHECK(qp_eval(a, Rat(3)) == Rat(16));
    auto xg = qp_extended_gcd(P({-1, 0, 1}), P({-1, 1}));
    CHECK(xg.g == P({-1, 1}));
    CHECK(qp_add(qp_mul(xg.s, P({-1, 0, 1})), qp_mul(xg.t, P({-1, 1}))) == xg.g);
}

TEST_CASE("rational coefficient division") {
    QPoly a = {Rat(1, 2), Rat(0), Rat(1)};  // X^2 + 1/2
    QPoly m = qp_monic(qp_scale(Rat(3), a));
    CHECK(m == a);
    CHECK(qp_to_string(P({-2, 0, 0, 1})) == "X^3 - 2");
}

TEST_CASE("irreducible cubic stays whole") {
    auto fs = qp_factor(P({-2, 0, 0, 1}));  // X^3 - 2
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[0].factor == P({-2, 0, 0, 1}));
    CHECK(qp_is_irreducible(P({-2, 0, 0, 1})));
    CHECK(qp_is_irreducible(P({1, 1, 1})));       // X^2+X+1
    CHECK_FALSE(qp_is_irreducible(P({-1, 0, 1})));
}

TEST_CASE("recombination: product of two quadratics that stay glued mod small primes") {
    // (X^2-2)(X^2-3) = X^4 - 5X^2 + 6: splits into linears mod some primes,
    // so recombination has to reassemble the right pairs
    QPoly f = qp_mul(P({-2, 0, 1}), P({-3, 0, 1}));
    auto fs = qp_factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == P({-3, 0, 1}));
    CHECK(fs[1].factor == P({-2, 0, 1}));
    CHECK(product(fs) == f);
}

TEST_CASE("multiplicities recovered") {
    // (X-1)^3 (X+2)^2 (X^2+1)
    QPoly f = {Rat(1)};
    for (int i = 0; i < 3; ++i) f = qp_mul(f, P({-1, 1}));
    for (int i = 0; i < 2; ++i) f = qp_mul(f, P({2, 1}));
    f = qp_mul(f, P({1, 0, 1}));
    auto fs = qp_factor(f);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].factor == P({-1, 1}));
    CHECK(fs[0].multiplicity == 3);
    CHECK(fs[1].factor == P({2, 1}));
    CHECK(fs[1].multiplicity == 2);
    CHECK(fs[2].factor == P({1, 0, 1}));
    CHECK(fs[2].multiplicity == 1);
    CHECK(product(fs) == qp_monic(f));
}

TEST_CASE("cyclotomic-style product") {
    // X^6 - 1 = (X-1)(X+1)(X^2+X+1)(X^2-X+1)
    QPoly f = P({-1, 0, 0, 0, 0, 0, 1});
    auto fs = qp_factor(f);
    REQUIRE(fs.size() == 4);
    CHECK(fs[0].factor == P({-1, 1}));
    CHECK(fs[1].factor == P({1, 1}));
    CHECK(fs[2].factor == P({1, -1, 1}));
    CHECK(fs[3].factor == P({1, 1, 1}));
    for (const auto& fc : fs) CHECK(fc.multiplicity == 1);
}

TEST_CASE("non-monic and fractional input") {
    // 4X^2 - 1 -> (X-1/2)(X+1/2)
    auto fs = qp_factor(P({-1, 0, 4}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == QPoly({Rat(-1, 2), Rat(1)}));
    CHECK(fs[1].factor == QPoly({Rat(1, 2), Rat(1)}));
    // fractional coefficients: X^2 - 5/2 X + 1 = (X-2)(X-1/2)
    auto gs = qp_factor(QPoly{Rat(1), Rat(-5, 2), Rat(1)});
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].factor == QPoly({Rat(-2), Rat(1)}));
    CHECK(gs[1].factor == QPoly({Rat(-1, 2), Rat(1)}));
    auto roots = qp_rational_roots(QPoly{Rat(1), Rat(-5, 2), Rat(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(1, 2));
    CHECK(roots[1] == Rat(2));
}

TEST_CASE("sextic with cubic factors") {
    // minimal polynomial shapes that appear when splitting endomorphism rings:
    // (X^3 - 3X - 1)(X^3 - 2)
    QPoly f = qp_mul(P({-1, -3, 0, 1}), P({-2, 0, 0, 1}));
    auto fs = qp_factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == P({-1, -3, 0, 1}));
    CHECK(fs[1].factor == P({-2, 0, 0, 1}));
}

TEST_CASE("degree twelve stress") {
    // (X^2+X+1)^2 (X^3-2)^2 (X^2-2) (X-7) (X+3)
    QPoly f = {Rat(1)};
    f = qp_mul(f, qp_mul(P({1, 1, 1}), P({1, 1, 1})));
    f = qp_mul(f, qp_mul(P({-2, 0, 0, 1}), P({-2, 0, 0, 1})));
    f = qp_mul(f, P({-2, 0, 1}));
    f = qp_mul(f, P({-7, 1}));
    f = qp_mul(f, P({3, 1}));
    auto fs = qp_factor(f);
    REQUIRE(fs.size() == 5);
    CHECK(product(fs) == f);
    bool saw_cubic_sq = false, saw_quad_sq = false;
    for (const auto& fc : fs) {
        if (fc.factor == P({-2, 0, 0, 1})) { CHECK(fc.multiplicity == 2); saw_cubic_sq = true; }
        if (fc.factor == P({1, 1, 1})) { CHECK(fc.multiplicity == 2); saw_quad_sq = true; }
    }
    CHECK(saw_cubic_sq);
    CHECK(saw_quad_sq);
}
