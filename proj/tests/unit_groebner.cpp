#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mcm/groebner.hpp"

using namespace mcm;

namespace {

std::vector<Poly> parse_all(const NumberField& f, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& s : texts) out.push_back(Poly::parse(f, s));
    return out;
}

}  // namespace

TEST_CASE("reduction against generators") {
    NumberField q = NumberField::rationals();
    auto gens = parse_all(q, {"x^2 - y", "y^2 - 1"});
    Poly f = Poly::parse(q, "x^4");
    // x^4 -> y^2 -> 1
    CHECK(reduce_full(f, gens) == Poly::parse(q, "1"));
    Poly g = Poly::parse(q, "x*y + x");
    CHECK(reduce_full(g, gens) == g);  // already irreducible
    CHECK(reduce_full(Poly::zero(q), gens).is_zero());
}

TEST_CASE("reduced basis is canonical and order independent") {
    NumberField q = NumberField::rationals();
    auto g1 = groebner_basis(parse_all(q, {"x^2 - y", "x*y - 1"}));
    auto g2 = groebner_basis(parse_all(q, {"x*y - 1", "x^2 - y"}));
    CHECK(g1 == g2);
    // scaling the generators does not change the ideal
    auto g3 = groebner_basis(parse_all(q, {"3*x^2 - 3*y", "-2*x*y + 2"}));
    CHECK(g1 == g3);
    // every basis element is monic
    for (const Poly& p : g1) CHECK(p.leading_coeff() == q.one());
}

TEST_CASE("frozen basis of a standard example") {
    NumberField q = NumberField::rationals();
    // (x^2 + y, x*y + x): contains y*(x^2+y) - x*(xy+x) = y^2 - x^2... compute
    auto g = groebner_basis(parse_all(q, {"x^2 + y", "x*y + x"}));
    // check the defining properties rather than a transcribed answer,
    // then freeze the printed form for determinism
    for (const Poly& p : g) CHECK(p.leading_coeff() == q.one());
    CHECK(ideal_member(Poly::parse(q, "x^2 + y"), g));
    CHECK(ideal_member(Poly::parse(q, "x*y + x"), g));
    std::string printed = ideal_to_string(g);
    CHECK(groebner_basis(g) == g);  // idempotent
    CHECK(ideal_to_string(groebner_basis(parse_all(q, {"x*y + x", "x^2 + y"}))) == printed);
}

TEST_CASE("membership and equality") {
    NumberField q = NumberField::rationals();
    auto basis = groebner_basis(parse_all(q, {"x - y"}));
    CHECK(ideal_member(Poly::parse(q, "x^2 - y^2"), basis));
    CHECK(ideal_member(Poly::parse(q, "x^3 - y^3"), basis));
    CHECK_FALSE(ideal_member(Poly::parse(q, "x + y"), basis));
    CHECK(ideal_equal(parse_all(q, {"x - y", "y"}), parse_all(q, {"x", "y"})));
    CHECK_FALSE(ideal_equal(parse_all(q, {"x"}), parse_all(q, {"x", "y"})));
}

TEST_CASE("principal ideal membership distinguishes multiplicity") {
    NumberField q = NumberField::rationals();
    auto square = groebner_basis(parse_all(q, {"(x - y)^2"}));
    CHECK(ideal_member(Poly::parse(q, "(x - y)^2 * x"), square));
    CHECK_FALSE(ideal_member(Poly::parse(q, "x - y"), square));
}

TEST_CASE("quadratic coefficients: small-index membership collapse") {
    NumberField k = NumberField::quadratic(Rat(2));
    // at the smallest parameter the two generators already span (x, y)
    auto basis = groebner_basis(parse_all(k, {"x - y", "xi*y + x"}));
    CHECK(ideal_member(Poly::parse(k, "x"), basis));
    CHECK(ideal_member(Poly::parse(k, "y"), basis));
    // one step up the family this fails: x is not in (x - y, xi*y^2 + x)
    auto basis2 = groebner_basis(parse_all(k, {"x - y", "xi*y^2 + x"}));
    CHECK_FALSE(ideal_member(Poly::parse(k, "x"), basis2));
    CHECK_FALSE(ideal_member(Poly::parse(k, "x^2"), basis2));
    // but x*(xi*x + 1) reduces to the second generator modulo the first
    CHECK(ideal_member(Poly::parse(k, "xi*x^2 + x"), basis2));
}

TEST_CASE("ideal sums") {
    NumberField q = NumberField::rationals();
    auto a = parse_all(q, {"x^2"});
    auto b = parse_all(q, {"y^2"});
    auto sum = ideal_sum(a, b);
    CHECK(ideal_member(Poly::parse(q, "x^2 + y^2"), sum));
    CHECK_FALSE(ideal_member(Poly::parse(q, "x*y"), sum));
    CHECK(ideal_equal(sum, parse_all(q, {"x^2", "y^2"})));
}

TEST_CASE("three variables with t") {
    NumberField q = NumberField::rationals();
    auto basis = groebner_basis(parse_all(q, {"x - t^2", "y - t^3"}));
    // the image of the twisted-cubic relation lies in the ideal
    CHECK(ideal_member(Poly::parse(q, "x^3 - y^2"), basis));
    CHECK_FALSE(ideal_member(Poly::parse(q, "x^2 - y"), basis));
}
