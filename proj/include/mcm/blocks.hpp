#pragma once

#include <vector>

#include "mcm/classgroup.hpp"
#include "mcm/presentation.hpp"

namespace mcm {

// A finite subset of a finitely generated abelian group
// Z^free_rank + Z/m_1 + ... + Z/m_k.  Each class vector lists the
// free-part coordinates first (arbitrary integers) and then one residue
// per torsion modulus.
struct BlockSpec {
    AbelianGroupInvariants group;
    std::vector<IntVec> classes;
};

// BlockSpec with residues reduced into [0, m), duplicates removed and
// classes sorted ascending lexicographically.  Throws on malformed input
// (wrong vector length, modulus < 2).
BlockSpec normalize_block_spec(const BlockSpec& spec);

// The monoid of zero-sum multisets over the classes of a BlockSpec,
// realized as a kernel presentation.  Nonzero classes become constrained
// coordinates; each torsion modulus m contributes one slack coordinate
// with column -m (uniquely determined for every member, so the projection
// that forgets the slacks is an isomorphism onto the zero-sum monoid);
// a zero class becomes the single free coordinate.
struct BlockMonoid {
    BlockSpec spec;  // normalized
    MonoidPresentation presentation;
    int zero_class_index = -1;  // index into spec.classes, or -1
    int slack_count = 0;

    // Presentation coordinates of the zero-sum multiset with the given
    // class multiplicities (indexed by spec.classes).  Throws
    // std::invalid_argument if the multiset does not sum to zero.
    MonoidElement embed(const IntVec& multiplicities) const;
};

BlockMonoid block_monoid(const BlockSpec& spec);

// The class data of a kernel presentation: its divisor class group is the
// subgroup of Z^s generated by the equation columns, free of rank
// rank(equations); classes are expressed in a basis of that subgroup.
struct BlockTransfer {
    BlockMonoid monoid;
    // For each coordinate of the source presentation, the index into
    // monoid.spec.classes of that prime divisor's class (-1 only when
    // include_zero_class was false and the class is zero).
    std::vector<int> coordinate_class;

    // Class multiplicities of the image of a source-monoid element.
    IntVec transfer(const IntVec& v) const;
};

BlockTransfer block_transfer(const MonoidPresentation& p, bool include_zero_class = true);

}  // namespace mcm
