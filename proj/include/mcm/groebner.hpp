#pragma once

#include <string>
#include <vector>

#include "mcm/poly.hpp"

namespace mcm {

// Full normal form of f against the generators: every term divisible by
// some leading monomial is rewritten until none is.
Poly reduce_full(const Poly& f, const std::vector<Poly>& gens);

// The reduced Groebner basis (grevlex) of the ideal generated by `gens`:
// monic generators, no leading monomial divides another, every tail term
// irreducible; sorted by ascending leading monomial.  This form is
// unique, so two ideals are equal iff their bases compare equal.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens);

// Membership via normal form against a reduced basis.
bool ideal_member(const Poly& f, const std::vector<Poly>& reduced_basis);

bool ideal_equal(const std::vector<Poly>& gens_a, const std::vector<Poly>& gens_b);

// Ideal sum helper: basis of (a) + (b).
std::vector<Poly> ideal_sum(const std::vector<Poly>& a, const std::vector<Poly>& b);

std::string ideal_to_string(const std::vector<Poly>& basis);

}  // namespace mcm
