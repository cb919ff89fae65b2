#pragma once

#include <vector>

#include "mcm/intmat.hpp"

namespace mcm {

// A finitely generated reduced monoid presented as
//   H = (ker(equations) cap N^t) + N^u,
// i.e. the first t coordinates are constrained by the integer equation
// system (one equation per row), the trailing u coordinates are free.
struct MonoidPresentation {
    IntMatrix equations;  // s x t
    int free_rank = 0;    // u

    int constrained_dim() const { return equations.cols(); }
    int dim() const { return equations.cols() + free_rank; }

    static MonoidPresentation free_monoid(int rank) {
        MonoidPresentation p;
        p.equations = IntMatrix(0, 0);
        p.free_rank = rank;
        return p;
    }

    bool operator==(const MonoidPresentation& o) const {
        return equations == o.equations && free_rank == o.free_rank;
    }
};

using MonoidElement = IntVec;  // length dim(); nonnegative entries

// Membership: v >= 0 componentwise and the constrained block solves the
// equations.
bool contains(const MonoidPresentation& p, const MonoidElement& v);

}  // namespace mcm
