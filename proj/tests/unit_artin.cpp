#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcm/artin.hpp"

using namespace mcm;

namespace {

GaloisCubic galois_x3_minus_2() { return make_galois_cubic(Rat(0), Rat(0), Rat(-2)); }

}  // namespace

TEST_CASE("splitting field symmetries of X^3 - 2") {
    GaloisCubic g = galois_x3_minus_2();
    CHECK(g.L.dim() == 6);
    CHECK(g.roots.size() == 3);
    for (const NFElem& r : g.roots) {
        NFElem val = r * r * r - g.L.from_rat(Rat(2));
        CHECK(val.is_zero());
    }
    // tau cycles the roots and has order three
    CHECK(apply_endomorphism(g.tau, g.roots[0]) == g.roots[1]);
    CHECK(apply_endomorphism(g.tau, g.roots[1]) == g.roots[2]);
    CHECK(apply_endomorphism(g.tau, g.roots[2]) == g.roots[0]);
    CHECK(rat_mul(g.tau2, g.tau) == RatMatrix::identity(6));
    CHECK_FALSE(g.tau == RatMatrix::identity(6));
    CHECK(apply_endomorphism(g.tau2, g.roots[1]) == g.roots[0]);
    // sigma is the involution fixing roots[0]
    REQUIRE(g.sigma.has_value());
    CHECK(rat_mul(*g.sigma, *g.sigma) == RatMatrix::identity(6));
    CHECK(apply_endomorphism(*g.sigma, g.roots[0]) == g.roots[0]);
    CHECK(apply_endomorphism(*g.sigma, g.roots[1]) == g.roots[2]);
    // sigma tau sigma = tau^2
    CHECK(rat_mul(*g.sigma, rat_mul(g.tau, *g.sigma)) == g.tau2);
    // omega is a primitive cube root of unity fixed by tau
    NFElem w = g.omega();
    CHECK((w * w + w + g.L.one()).is_zero());
    CHECK(apply_endomorphism(g.tau, w) == w);
    NFElem w_swapped = apply_endomorphism(*g.sigma, w);
    CHECK(w_swapped == w * w);
}

TEST_CASE("mult_matrix represents field multiplication") {
    GaloisCubic g = galois_x3_minus_2();
    NFElem th = g.roots[0], u = g.roots[1];
    RatMatrix mt = mult_matrix(th), mu = mult_matrix(u);
    CHECK(rat_apply(mt, u.coords) == (th * u).coords);
    CHECK(rat_mul(mt, mu) == rat_mul(mu, mt));
    // theta^3 = 2 as matrices
    RatMatrix cube = rat_mul(mt, rat_mul(mt, mt));
    RatMatrix two = RatMatrix::identity(6);
    for (int i = 0; i < 6; ++i) two.at(i, i) = 2;
    CHECK(cube == two);
}

TEST_CASE("pair validity depends on the action convention") {
    GaloisCubic g = galois_x3_minus_2();

    PairModule listed = build_rank4_listed(g);
    PairValidation v = validate_pair(listed);
    CHECK(v.ok());
    CHECK(v.kv_dim == 12);
    CHECK(listed.rank() == 4);

    PairModule diag = build_rank4_module(g, PairConvention::diagonal);
    v = validate_pair(diag);
    CHECK(v.ok());
    CHECK(v.kv_dim == 12);

    PairModule twisted = build_rank4_module(g, PairConvention::twisted);
    v = validate_pair(twisted);
    CHECK(v.theta_ok);
    CHECK(v.v_independent);
    CHECK_FALSE(v.generates);  // the graph of tau^2 is K-stable under this action
    CHECK(v.kv_dim == 6);

    PairModule r3t = build_rank3_module(g, PairConvention::twisted);
    v = validate_pair(r3t);
    CHECK(v.ok());
    CHECK(v.kv_dim == 9);
    CHECK(r3t.rank() == 3);

    PairModule r3d = build_rank3_module(g, PairConvention::diagonal);
    v = validate_pair(r3d);
    CHECK_FALSE(v.generates);  // the diagonal copy of K is already K-stable
    CHECK(v.kv_dim == 3);
}

TEST_CASE("relabelling the rank-four module is an isomorphism") {
    GaloisCubic g = galois_x3_minus_2();
    std::string why;
    CHECK(rank4_relabel_is_isomorphism(g, &why));
    CHECK(why.empty());
}

TEST_CASE("displayed summands fail under both conventions") {
    GaloisCubic g = galois_x3_minus_2();

    DisplayedSummandReport d = displayed_summand_check(g, PairConvention::diagonal);
    CHECK(d.ambient_valid);
    CHECK(d.ambient_kv_dim == 12);
    CHECK_FALSE(d.w1_stable);  // theta moves W1 off itself under this action
    CHECK_FALSE(d.w2_stable);
    CHECK(d.sum_direct);
    CHECK(d.v_splits);
    CHECK(d.v1_dim == 3);
    CHECK(d.v2_dim == 3);
    CHECK_FALSE(d.w1_generated);
    CHECK_FALSE(d.w2_generated);
    CHECK_FALSE(d.decomposition_ok());

    DisplayedSummandReport t = displayed_summand_check(g, PairConvention::twisted);
    CHECK_FALSE(t.ambient_valid);  // K.V = V has dimension 6, not 12
    CHECK(t.ambient_kv_dim == 6);
    CHECK(t.w1_stable);  // the displayed spaces are theta-stable here
    CHECK(t.w2_stable);
    CHECK(t.sum_direct);
    CHECK(t.v_splits);
    CHECK(t.v1_dim == 3);
    CHECK(t.v2_dim == 3);
    CHECK_FALSE(t.w1_generated);  // K.(V n W1) = V n W1, dimension 3 not 6
    CHECK_FALSE(t.w2_generated);
    CHECK_FALSE(t.decomposition_ok());
}

TEST_CASE("endomorphism algebras have the expected dimensions") {
    GaloisCubic g = galois_x3_minus_2();
    // two-by-two matrices over a cubic field: dimension 12 over Q
    CHECK(endomorphism_algebra(build_rank4_listed(g)).size() == 12);
    CHECK(endomorphism_algebra(build_rank4_module(g, PairConvention::diagonal)).size() == 12);
    // three isomorphic rank-one summands: three-by-three matrices over Q
    CHECK(endomorphism_algebra(build_rank3_module(g, PairConvention::twisted)).size() == 9);
}

TEST_CASE("rank-four module splits into two certified rank-two summands") {
    GaloisCubic g = galois_x3_minus_2();
    PairModule listed = build_rank4_listed(g);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Decomposition d = decompose(listed, seed);
        REQUIRE(d.summands.size() == 2);
        for (const Summand& s : d.summands) {
            CHECK(s.module.rank() == 2);
            CHECK(s.module.v_dim() == 3);
            CHECK(s.certified_indecomposable);
        }
        CHECK(d.all_certified);
        std::string why;
        CHECK(verify_decomposition(listed, d, &why));
        CHECK(why.empty());
    }
    PairModule diag = build_rank4_module(g, PairConvention::diagonal);
    Decomposition d = decompose(diag, 1);
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[0].module.rank() == 2);
    CHECK(d.summands[1].module.rank() == 2);
    CHECK(d.all_certified);
    CHECK(verify_decomposition(diag, d));
}

TEST_CASE("rank-three module splits into three rank-one summands") {
    GaloisCubic g = galois_x3_minus_2();
    PairModule m = build_rank3_module(g, PairConvention::twisted);
    Decomposition d = decompose(m, 1);
    REQUIRE(d.summands.size() == 3);
    for (const Summand& s : d.summands) {
        CHECK(s.module.rank() == 1);
        CHECK(s.module.w_dim() == 3);
        CHECK(s.module.v_dim() == 1);
        CHECK(s.certified_indecomposable);
    }
    CHECK(d.all_certified);
    CHECK(verify_decomposition(m, d));
}

TEST_CASE("square-discriminant cubic gives an indecomposable rank-two module") {
    // X^3 - 3X - 1 has square discriminant 81, so the splitting field is
    // the cubic field itself and the analogous module cannot split.
    GaloisCubic g = make_galois_cubic(Rat(0), Rat(-3), Rat(-1));
    CHECK(g.L.dim() == 3);
    CHECK_FALSE(g.sigma.has_value());
    PairModule m = build_rank4_listed(g);
    PairValidation v = validate_pair(m);
    CHECK(v.ok());
    CHECK(v.kv_dim == 6);
    CHECK(m.rank() == 2);
    Decomposition d = decompose(m, 1);
    REQUIRE(d.summands.size() == 1);
    CHECK(d.summands[0].module.rank() == 2);
    CHECK(d.summands[0].certified_indecomposable);
    CHECK(verify_decomposition(m, d));
}

TEST_CASE("an explicitly split module is found decomposable") {
    // companion form of X^3 - 2 twice, V = the two unit lines: the
    // obvious direct sum of two rank-one modules
    QPoly f = {Rat(-2), Rat(0), Rat(0), Rat(1)};
    RatMatrix c(3, 3);
    c.at(1, 0) = 1;
    c.at(2, 1) = 1;
    c.at(0, 2) = 2;
    PairModule m;
    m.name = "sum-of-two";
    m.theta_minpoly = f;
    m.theta = RatMatrix(6, 6);
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.theta.at(3 * b + i, 3 * b + j) = c.at(i, j);
    RatVec v1(6, Rat(0)), v2(6, Rat(0));
    v1[0] = 1;
    v2[3] = 1;
    // mix the basis so the split is not given away by the input order
    RatVec mixed1(6), mixed2(6);
    for (int i = 0; i < 6; ++i) {
        mixed1[static_cast<size_t>(i)] = v1[static_cast<size_t>(i)] + v2[static_cast<size_t>(i)];
        mixed2[static_cast<size_t>(i)] = v1[static_cast<size_t>(i)] - v2[static_cast<size_t>(i)];
    }
    m.v_basis = {mixed1, mixed2};
    CHECK(validate_pair(m).ok());
    Decomposition d = decompose(m, 7);
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[0].module.rank() == 1);
    CHECK(d.summands[1].module.rank() == 1);
    CHECK(d.all_certified);
    CHECK(verify_decomposition(m, d));
}
