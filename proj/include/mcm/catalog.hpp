#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcm/presentation.hpp"

namespace mcm {

// Singularity families of the one-dimensional hypersurfaces of finite
// Cohen-Macaulay type (and their endomorphism-ring variants, marked by a
// prime suffix).  A and D carry the subscript of the usual ADE labels
// (A5 means x^2 - y^6); A2 and D2 carry the parameter n of their
// two-branch quadratic-extension families; E6/E7/E8/D3 have no parameter.
enum class RingFamily { A, D, E6, E7, E8, A2, D2, D3 };

struct RingType {
    RingFamily family = RingFamily::A;
    int index = 0;  // ADE subscript for A/D; parameter n for A2/D2; unused otherwise
    bool primed = false;

    std::string to_string() const;
    bool operator==(const RingType&) const = default;
};

// Validates the (family, index, primed) combination and applies the
// endomorphism-ring normalizations (A_n)' -> A_{n-2} and
// (A2_n)' -> A2_{n-1}.  Throws std::invalid_argument on invalid input.
RingType make_ring_type(RingFamily f, int index, bool primed);

// Grammar: A5, D6, E7, A2:3, D2:2, D3, optional prime suffix ' (e.g. D6').
RingType parse_ring_type(const std::string& text);

// Number of minimal primes of the complete ring.
int num_minimal_primes(const RingType& t);

// Rank vectors of the indecomposable maximal Cohen-Macaulay modules with
// multiplicities, in a fixed canonical row order.  The primed transform
// removes one copy of the all-ones row (the free module).
struct RankTable {
    int num_primes = 0;
    std::vector<std::pair<IntVec, int>> entries;

    int total_count() const;
};
RankTable rank_table(const RingType& t);

// How the minimal primes of the complete ring are identified over primes
// of the non-complete ring: a partition of {1..s}.  m = s - #groups.
struct GlueSpec {
    std::vector<std::vector<int>> groups;  // 1-based prime indices

    int num_primes() const;
    int m() const { return num_primes() - int(groups.size()); }

    static GlueSpec separate(int s);              // m = 0
    static GlueSpec glue_all(int s);              // one group
    static GlueSpec glue_pair(int s, int a, int b);

    std::string to_string() const;
};

// Normalizes (sorts) the partition and checks it against the family:
// it must partition {1..s}; for three primes, gluing {1,3} alone is
// rejected as equivalent to gluing {1,2} under the symmetry exchanging
// the conjugate second and third primes.  Throws std::invalid_argument.
GlueSpec validate_glue(const RingType& t, const GlueSpec& g);

// The monoid of maximal Cohen-Macaulay modules over a ring whose
// completion has type `t` and whose minimal primes glue per `g`:
// one coordinate per indecomposable (canonical rank-table order), one
// equation per adjacent pair inside a glued group (rank difference must
// vanish).  Modules with zero coefficients in every equation move to the
// free part.  If the remaining constrained monoid is itself free (its
// atoms are linearly independent), the presentation is folded to an
// explicit free monoid on those atoms.
struct CatalogPresentation {
    RingType type;
    GlueSpec glue;
    MonoidPresentation presentation;
    std::vector<std::string> labels;  // one per presentation coordinate
    bool folded = false;
};
CatalogPresentation monoid_presentation(const RingType& t, const GlueSpec& g);

// Hand-entered reference coefficient matrices (ids A1..A6) against which
// the constructed presentations are cross-checked.  `n` is the family
// parameter where the shape depends on it.
enum class RefMatrixId { A1, A2, A3, A4, A5, A6 };
RefMatrixId parse_ref_matrix_id(const std::string& text);
IntMatrix reference_matrix(RefMatrixId id, int n);

// Decides whether two kernel presentations define the same monoid up to
// a permutation of coordinates (atom sets mapped onto each other).  The
// search is pruned by per-coordinate atom-value fingerprints.
struct MatchResult {
    bool match = false;
    // When matched: coordinate j of `a` corresponds to permutation[j] of `b`.
    std::vector<int> permutation;
    std::string mismatch_reason;
};
MatchResult presentations_match(const MonoidPresentation& a, const MonoidPresentation& b);

// Short exact sequences 0 -> left -> middle -> right -> 0 with known rank
// vectors for some modules; rank is additive along each sequence.
struct ARSequence {
    std::string left;
    std::vector<std::pair<std::string, int>> middle;  // (module, multiplicity)
    std::string right;
};
struct ARSystem {
    int num_primes = 0;
    std::map<std::string, IntVec> known;
    std::vector<ARSequence> sequences;
    std::vector<std::string> wanted;  // extra unknowns that must be determined
};
struct ARSolveResult {
    bool solved = false;
    std::map<std::string, IntVec> ranks;  // on success: knowns + solved unknowns
    std::string failure;                  // on failure: reason
    std::vector<std::string> free_modules;  // underdetermined unknowns
};
// Solves rank(left) + rank(right) = rank(middle) coordinatewise over the
// rationals; succeeds only on a unique nonnegative integral solution.
ARSolveResult ar_rank_solve(const ARSystem& sys);

// The six-sequence rank system for the three-prime ring D6 whose solution
// the catalog tabulates.  `corrected_middle` selects the repaired fourth
// sequence (as commonly displayed, its middle term R/P1 + M1 is
// rank-inconsistent with the neighboring sequences; the repaired middle
// R/(P1^P2) + R/(P1^P3) + M1 restores consistency).
ARSystem d6_rank_system(bool corrected_middle = true);

}  // namespace mcm
