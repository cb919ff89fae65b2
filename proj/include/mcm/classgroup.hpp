#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcm/hilbert.hpp"
#include "mcm/presentation.hpp"

namespace mcm {

// Isomorphism invariants of a finitely generated abelian group:
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... , each d_i > 1.
struct AbelianGroupInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const AbelianGroupInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// Does the lattice generated by the Hilbert basis equal the full kernel
// lattice (ker(equations) + Z^u)?  Required for the class-group formula.
bool zbasis_in_monoid_check(const MonoidPresentation& p);

enum class DivisorVerdict { proved, failed, undetermined };

struct DivisorCoordinateReport {
    DivisorVerdict verdict = DivisorVerdict::undetermined;
    // For `proved`: a finite subset of the monoid whose componentwise
    // minimum is the coordinate's unit vector (each member a sum of at
    // most the budgeted number of atoms).
    std::vector<MonoidElement> witnesses;
    // For `failed`: human-readable impossibility certificate.
    std::string reason;
};

struct DivisorTheoryReport {
    std::vector<DivisorCoordinateReport> coordinates;
    bool all_proved() const {
        for (const auto& c : coordinates)
            if (c.verdict != DivisorVerdict::proved) return false;
        return true;
    }
};

// Checks, coordinate by coordinate, that the embedding H -> N^{t+u} is a
// divisor theory: every unit vector must be a componentwise minimum (glb)
// of finitely many monoid elements.  The positive search is exhaustive
// over sums of at most atom_budget atoms; failures are certified by exact
// arguments independent of the budget (see implementation).
DivisorTheoryReport divisor_theory_check(const MonoidPresentation& p, int atom_budget = 3);

struct ClassGroupResult {
    AbelianGroupInvariants group;
    bool zbasis_ok = false;
    bool divisor_theory_ok = false;
    bool justified = false;  // hypotheses hold, or the presentation is free
    std::string note;
};

// Divisor class group under the embedding hypotheses: the subgroup of Z^s
// generated by the columns of `equations` (computed via Smith normal
// form; a subgroup of a free group, hence free of rank = rank(equations)).
// The group is computed even when the hypothesis checks fail, but is then
// flagged as not justified unless `override_checks` is set.  A free
// presentation (no equations) is justified trivially with trivial group.
ClassGroupResult class_group(const MonoidPresentation& p, bool override_checks = false,
                             int atom_budget = 3);

// The divisor classes of the t + u prime divisors of N^{t+u}: column j of
// the equation matrix for constrained coordinates, the zero vector for
// free coordinates.  (Coordinates of the class in the ambient Z^s.)
std::vector<IntVec> prime_divisor_classes(const MonoidPresentation& p);

}  // namespace mcm
