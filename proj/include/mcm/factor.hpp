#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mcm/hilbert.hpp"
#include "mcm/presentation.hpp"

namespace mcm {

// A factorization of a monoid element into atoms: multiplicity per atom
// index (indices refer to the graded-lex ordering of the Hilbert basis).
struct Factorization {
    std::map<int, Int> mult;  // atom index -> multiplicity > 0
    Int length() const {
        Int s = 0;
        for (const auto& [_, m] : mult) s += m;
        return s;
    }
    bool operator==(const Factorization& o) const { return mult == o.mult; }
    bool operator<(const Factorization& o) const { return mult < o.mult; }
};

struct FactorizationCapExceeded : std::runtime_error {
    FactorizationCapExceeded() : std::runtime_error("factorization enumeration cap exceeded") {}
};

inline constexpr long kFactorizationCap = 1000000;

// Complete enumeration of the factorizations of v over the atoms of p,
// in deterministic order (DFS over non-decreasing atom indices).  Throws
// FactorizationCapExceeded past the safety cap.
std::vector<Factorization> factorizations(const MonoidPresentation& p, const MonoidElement& v,
                                          long cap = kFactorizationCap);

// As above but against an explicit atom list (callers that already hold
// the Hilbert basis, or want factorizations over a sub-generating set).
std::vector<Factorization> factorizations_over(const std::vector<MonoidElement>& atoms,
                                               const MonoidElement& v,
                                               long cap = kFactorizationCap);

// Set of factorization lengths of v (empty iff v has no factorization,
// i.e. lies outside the monoid).  Requires v != 0.
std::set<Int> length_set(const MonoidPresentation& p, const MonoidElement& v);

// max(L) / min(L) over the length set of v; requires v to factor.
Rat elasticity_element(const MonoidPresentation& p, const MonoidElement& v);

// Elasticity of the whole monoid: sup over elements of the element
// elasticity.  Computed exactly from the minimal pairs (u, w) of the
// relation monoid { (u, w) : sum u_i a_i = sum w_j a_j } — the supremum is
// attained on its Hilbert basis — as max |u|/|w| over minimal pairs with
// |u| >= |w| >= 1.  Returns 1 for free (including trivial) monoids.
Rat elasticity_monoid(const MonoidPresentation& p);

// True iff every element has all factorization lengths equal, i.e. the
// elasticity is 1.  Decided by the exact lattice criterion: every integer
// relation among the atoms must be length-balanced, equivalently the
// all-ones functional on atom space lies in the row space of the atom
// matrix.  (Agreement with elasticity_monoid(p) == 1 is a tested
// invariant.)
bool is_half_factorial(const MonoidPresentation& p);

// True iff the monoid is free on its atoms (atoms Z-linearly independent).
bool is_factorial(const MonoidPresentation& p);

}  // namespace mcm
