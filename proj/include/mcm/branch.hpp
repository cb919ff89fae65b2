#pragma once

#include <string>
#include <vector>

#include "mcm/bigint.hpp"
#include "mcm/catalog.hpp"
#include "mcm/mf.hpp"
#include "mcm/nf.hpp"
#include "mcm/poly.hpp"

namespace mcm {

// One analytic branch of a curve singularity, given by a parametrization
// x = x(t), y = y(t) with coefficients in some field.
struct BranchParam {
    std::string name;
    Poly x_of_t;
    Poly y_of_t;
};

BranchParam make_branch(const Poly& x_of_t, const Poly& y_of_t);

// Branches of x^2 = xi^2 y^{2n+2}:  (± xi t^{n+1}, t).
std::vector<BranchParam> two_branch_points(const NumberField& k, int n);

// Branches of (x - y)(xi^2 y^{2n} - x^2):  (t, t), (± xi t^n, t).
std::vector<BranchParam> three_branch_points(const NumberField& k, int n);

// Branches of a homogeneous cubic with the given slope roots:  (t, s_i t).
std::vector<BranchParam> cubic_branch_points(const NumberField& f,
                                             const std::vector<NFElem>& roots);

// Defining equation and branches for the classical plane-curve families,
// with rational coefficients placed into the given field.
Poly ade_equation(const NumberField& f, RingFamily fam, int n);
std::vector<BranchParam> ade_branch_points(const NumberField& f, RingFamily fam, int n);

// Rank of the cokernel of m at one branch: rows(m) minus the rank of the
// substituted matrix over the field of fractions in t.
int rank_at_branch(const PolyMatrix& m, const BranchParam& branch);

IntVec rank_vector(const PolyMatrix& m, const std::vector<BranchParam>& branches);

}  // namespace mcm
