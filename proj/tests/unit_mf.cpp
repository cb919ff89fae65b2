#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcm/groebner.hpp"
#include "mcm/mf.hpp"

using namespace mcm;

namespace {

NumberField quad() { return NumberField::quadratic(Rat(2)); }

std::vector<Poly> gens(const NumberField& f, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& s : texts) out.push_back(Poly::parse(f, s));
    return out;
}

}  // namespace

TEST_CASE("polynomial matrix basics") {
    NumberField q = NumberField::rationals();
    Poly x = Poly::variable(q, 'x');
    Poly y = Poly::variable(q, 'y');
    PolyMatrix m = PolyMatrix::from_rows(q, {{x, y}, {y, x}});
    CHECK(pm_det(m) == x * x - y * y);
    CHECK(pm_rank(m) == 2);
    PolyMatrix sq = pm_mul(m, m);
    CHECK(sq.at(0, 0) == x * x + y * y);
    CHECK(sq.at(0, 1) == Poly::rational(q, Rat(2)) * x * y);
    PolyMatrix d = pm_diag(q, {x, y});
    CHECK(pm_det(d) == x * y);
    // substitution drops rank exactly on the vanishing locus
    Poly t = Poly::variable(q, 't');
    PolyMatrix at_diag = pm_substitute(m, t, t, t);
    CHECK(pm_rank(at_diag) == 1);
}

TEST_CASE("every two-branch factorization multiplies to f times identity") {
    NumberField k = quad();
    for (int n = 0; n <= 5; ++n) {
        auto fam = two_branch_family(k, n);
        CHECK(fam.size() == static_cast<size_t>(2 * n + 2));
        for (const NamedMF& m : fam) {
            MFCheck c = verify_mf(m.f, m.phi, m.psi);
            INFO("n=", n, " ", m.name);
            CHECK(c.ok());
        }
    }
}

TEST_CASE("every three-branch factorization multiplies to f times identity") {
    NumberField k = quad();
    for (int n = 1; n <= 4; ++n) {
        auto fam = three_branch_family(k, n);
        // n square pairs twice, n-1 off pairs twice, six cyclic modules
        CHECK(fam.size() == static_cast<size_t>(2 * n + 2 * (n - 1) + 6));
        for (const NamedMF& m : fam) {
            MFCheck c = verify_mf(m.f, m.phi, m.psi);
            INFO("n=", n, " ", m.name);
            CHECK(c.ok());
        }
    }
}

TEST_CASE("cubic factorization multiplies to f times identity") {
    for (auto coeffs : std::vector<std::array<Rat, 3>>{
             {Rat(0), Rat(0), Rat(-2)}, {Rat(0), Rat(-3), Rat(-1)}, {Rat(1), Rat(-2), Rat(1)}}) {
        auto fam = cubic_family(NumberField::rationals(), coeffs[0], coeffs[1], coeffs[2]);
        REQUIRE(fam.size() == 1);
        CHECK(verify_mf(fam[0].f, fam[0].phi, fam[0].psi).ok());
        CHECK(is_reduced_mf(fam[0].phi));
        CHECK(is_reduced_mf(fam[0].psi));
    }
}

TEST_CASE("reducedness detects unit entries") {
    NumberField k = quad();
    auto fam = two_branch_family(k, 2);  // indices 1..6
    for (const NamedMF& m : fam) {
        bool expect = m.name != "phi_6";  // top index has the constant entry xi^2
        INFO(m.name);
        CHECK(is_reduced_mf(m.phi) == expect);
        CHECK(is_reduced_mf(m.psi) == expect);
    }
    for (const NamedMF& m : three_branch_family(k, 3)) {
        INFO(m.name);
        CHECK(is_reduced_mf(m.phi));
        CHECK(is_reduced_mf(m.psi));
    }
}

TEST_CASE("tampering with an entry breaks the factorization") {
    NumberField k = quad();
    auto fam = three_branch_family(k, 2);
    NamedMF m = fam[0];
    REQUIRE(verify_mf(m.f, m.phi, m.psi).ok());
    PolyMatrix bad = m.phi;
    bad.at(0, 0) = bad.at(0, 0) + Poly::rational(k, Rat(1));
    MFCheck c = verify_mf(m.f, bad, m.psi);
    CHECK_FALSE(c.ok());
    CHECK_FALSE(c.detail.empty());
    // tampering the other factor is caught too
    PolyMatrix bad_psi = m.psi;
    bad_psi.at(1, 1) = bad_psi.at(1, 1) + Poly::variable(k, 'x');
    CHECK_FALSE(verify_mf(m.f, m.phi, bad_psi).ok());
}

TEST_CASE("first fitting ideals of the square pairs") {
    NumberField k = quad();
    for (int n = 1; n <= 3; ++n) {
        auto fam = three_branch_family(k, n);
        for (const NamedMF& m : fam) {
            if (m.name.rfind("alpha_", 0) != 0 && m.name.rfind("beta_", 0) != 0) continue;
            int j = std::stoi(m.name.substr(m.name.find('_') + 1));
            auto i1 = fitting_ideal(m.phi, 1);
            INFO("n=", n, " ", m.name);
            CHECK(ideal_equal(i1, gens(k, {"x", "y^" + std::to_string(j)})));
        }
    }
}

TEST_CASE("second fitting ideals separate the square pairs from the off pairs") {
    NumberField k = quad();
    int n = 2;
    auto fam = three_branch_family(k, n);
    std::string f_text = "(x - y)*(xi^2*y^4 - x^2)";
    std::string branch_pair = "xi^2*y^4 - x^2";
    for (const NamedMF& m : fam) {
        if (m.name.rfind("alpha_", 0) == 0 || m.name.rfind("beta_", 0) == 0) {
            CHECK(ideal_equal(fitting_ideal(m.phi, 2), gens(k, {f_text})));
        } else if (m.name.rfind("phi_", 0) == 0) {
            CHECK(ideal_equal(fitting_ideal(m.phi, 2), gens(k, {branch_pair})));
        } else if (m.name.rfind("psi_", 0) == 0) {
            CHECK(ideal_equal(fitting_ideal(m.phi, 2),
                              gens(k, {"(" + branch_pair + ")*(x - y)^2"})));
        }
    }
}

TEST_CASE("fitting ideals of the two-branch family") {
    NumberField k = quad();
    int n = 2;  // f = x^2 - xi^2 y^6
    auto fam = two_branch_family(k, n);
    for (int j = 1; j <= 2 * n + 2; ++j) {
        const NamedMF& m = fam[static_cast<size_t>(j - 1)];
        int e = std::min(j, 2 * n + 2 - j);
        auto i1 = fitting_ideal(m.phi, 1);
        INFO("j=", j);
        if (e == 0) {
            // constant entry: the module is free and the ideal is everything
            CHECK(ideal_member(Poly::parse(k, "1"), i1));
        } else {
            CHECK(ideal_equal(i1, gens(k, {"x", "y^" + std::to_string(e)})));
        }
        CHECK(ideal_equal(fitting_ideal(m.phi, 2), gens(k, {"x^2 - xi^2*y^6"})));
    }
}

TEST_CASE("fitting ideals distinguish a direct sum from the square pair") {
    NumberField k = quad();
    for (int n = 1; n <= 3; ++n) {
        auto fam = three_branch_family(k, n);
        const NamedMF* alpha_n = nullptr;
        const NamedMF* b = nullptr;
        const NamedMF* c = nullptr;
        for (const NamedMF& m : fam) {
            if (m.name == "alpha_" + std::to_string(n)) alpha_n = &m;
            if (m.name == "B") b = &m;
            if (m.name == "C") c = &m;
        }
        REQUIRE(alpha_n);
        REQUIRE(b);
        REQUIRE(c);
        PolyMatrix sum(k, 2, 2);
        sum.at(0, 0) = b->phi.at(0, 0);
        sum.at(1, 1) = c->phi.at(0, 0);
        // same first fitting ideal ...
        CHECK(ideal_equal(fitting_ideal(sum, 1), fitting_ideal(alpha_n->phi, 1)));
        // ... but different second fitting ideal, so the modules differ
        CHECK_FALSE(ideal_equal(fitting_ideal(sum, 2), fitting_ideal(alpha_n->phi, 2)));
    }
}

TEST_CASE("square pairs with different index have different fitting ideals") {
    NumberField k = quad();
    int n = 4;
    auto fam = three_branch_family(k, n);
    std::vector<const NamedMF*> alphas;
    for (const NamedMF& m : fam)
        if (m.name.rfind("alpha_", 0) == 0) alphas.push_back(&m);
    REQUIRE(alphas.size() == 4);
    for (size_t i = 0; i < alphas.size(); ++i)
        for (size_t j = i + 1; j < alphas.size(); ++j) {
            CHECK_FALSE(
                ideal_equal(fitting_ideal(alphas[i]->phi, 1), fitting_ideal(alphas[j]->phi, 1)));
        }
}

TEST_CASE("one-by-one cyclic factors multiply to f") {
    NumberField k = quad();
    auto fam = three_branch_family(k, 1);
    for (const char* name : {"A", "B", "C", "D", "E", "F"}) {
        const NamedMF* m = nullptr;
        for (const NamedMF& p : fam)
            if (p.name == name) m = &p;
        REQUIRE(m);
        CHECK(verify_mf(m->f, m->phi, m->psi).ok());
        CHECK(pm_det(m->phi) * pm_det(m->psi) == m->f);
    }
}
