#pragma once

#include <vector>

#include "mcm/presentation.hpp"

namespace mcm {

// Minimal nonzero solutions of  equations * x = 0, x in N^t  (the atoms of
// the constrained part), computed with the Contejean-Devie directed
// completion search.  Result is sorted in graded lexicographic order.
std::vector<IntVec> minimal_kernel_solutions(const IntMatrix& equations);

// The unique minimal generating set (atoms) of the presented monoid, as
// vectors of full length t + u: constrained atoms padded with zeros plus
// one unit vector per free coordinate.  Graded-lex sorted.
std::vector<MonoidElement> hilbert_basis(const MonoidPresentation& p);

// True iff v lies in the monoid and is an atom (appears in the Hilbert
// basis).  Computes the basis internally; callers holding the basis can
// simply search it.
bool is_atom(const MonoidPresentation& p, const MonoidElement& v);

}  // namespace mcm
