#include "mcm/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mcm/intmat.hpp"
#include "mcm/qmat.hpp"

namespace mcm {

namespace {

Int mod_reduce(const Int& x, const Int& m) { return x - m * fdiv_q(x, m); }

}  // namespace

BlockSpec normalize_block_spec(const BlockSpec& spec) {
    const int r = spec.group.free_rank;
    const int k = int(spec.group.torsion.size());
    if (r < 0) throw std::invalid_argument("block spec: negative free rank");
    for (const auto& m : spec.group.torsion)
        if (m < 2) throw std::invalid_argument("block spec: torsion modulus must be >= 2");
    std::set<IntVec> seen;
    for (const auto& c : spec.classes) {
        if (int(c.size()) != r + k)
            throw std::invalid_argument("block spec: class vector has wrong length");
        IntVec red = c;
        for (int i = 0; i < k; ++i) red[r + i] = mod_reduce(red[r + i], spec.group.torsion[i]);
        seen.insert(red);
    }
    BlockSpec out;
    out.group = spec.group;
    out.classes.assign(seen.begin(), seen.end());
    return out;
}

BlockMonoid block_monoid(const BlockSpec& raw) {
    BlockMonoid bm;
    bm.spec = normalize_block_spec(raw);
    const int r = bm.spec.group.free_rank;
    const int k = int(bm.spec.group.torsion.size());
    bm.slack_count = k;

    std::vector<int> nonzero;  // indices into spec.classes
    for (size_t i = 0; i < bm.spec.classes.size(); ++i) {
        if (vec_is_zero(bm.spec.classes[i])) bm.zero_class_index = int(i);
        else nonzero.push_back(int(i));
    }
    const int free_rank = bm.zero_class_index >= 0 ? 1 : 0;
    if (nonzero.empty()) {
        bm.presentation = MonoidPresentation::free_monoid(free_rank);
        bm.slack_count = 0;
        return bm;
    }

    IntMatrix eq(r + k, int(nonzero.size()) + k);
    for (int row = 0; row < r + k; ++row) {
        for (size_t j = 0; j < nonzero.size(); ++j)
            eq.at(row, int(j)) = bm.spec.classes[nonzero[j]][row];
        if (row >= r) eq.at(row, int(nonzero.size()) + (row - r)) = -bm.spec.group.torsion[row - r];
    }
    bm.presentation = MonoidPresentation{eq, free_rank};
    return bm;
}

MonoidElement BlockMonoid::embed(const IntVec& multiplicities) const {
    const int r = spec.group.free_rank;
    const int k = int(spec.group.torsion.size());
    if (multiplicities.size() != spec.classes.size())
        throw std::invalid_argument("embed: one multiplicity per class expected");
    for (const auto& m : multiplicities)
        if (m < 0) throw std::invalid_argument("embed: negative multiplicity");

    IntVec total(size_t(r + k), Int(0));
    for (size_t j = 0; j < spec.classes.size(); ++j)
        for (int c = 0; c < r + k; ++c) total[c] += multiplicities[j] * spec.classes[j][c];
    for (int c = 0; c < r; ++c)
        if (total[c] != 0) throw std::invalid_argument("embed: multiset does not sum to zero");

    MonoidElement out;
    for (size_t j = 0; j < spec.classes.size(); ++j)
        if (int(j) != zero_class_index) out.push_back(multiplicities[j]);
    bool trivial_presentation = out.empty();
    for (int i = 0; i < k && !trivial_presentation; ++i) {
        const Int& m = spec.group.torsion[i];
        Int q = fdiv_q(total[r + i], m);
        if (total[r + i] != q * m)
            throw std::invalid_argument("embed: multiset does not sum to zero");
        out.push_back(q);
    }
    if (trivial_presentation) {
        for (int i = 0; i < k; ++i)
            if (total[r + i] != 0) throw std::invalid_argument("embed: multiset does not sum to zero");
    }
    if (zero_class_index >= 0) out.push_back(multiplicities[size_t(zero_class_index)]);
    return out;
}

BlockTransfer block_transfer(const MonoidPresentation& p, bool include_zero_class) {
    const auto& a = p.equations;
    const int s = a.rows(), t = a.cols();

    // Basis of the subgroup of Z^s generated by the equation columns.
    auto hnf = hermite_normal_form(mat_transpose(a));
    std::vector<IntVec> basis;
    for (int i = 0; i < hnf.h.rows(); ++i) {
        if (vec_is_zero(hnf.h.row(i))) continue;
        basis.push_back(hnf.h.row(i));
    }
    const int r = int(basis.size());

    RatMatrix bt(s, r);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < s; ++c) bt.at(c, i) = Rat(basis[i][c]);

    auto in_basis = [&](const IntVec& col) -> IntVec {
        RatVec rhs(col.begin(), col.end());
        auto sol = rat_solve(bt, rhs);
        if (!sol) throw std::logic_error("block transfer: column outside its own lattice");
        IntVec alpha(size_t(r), Int(0));
        for (int i = 0; i < r; ++i) {
            if ((*sol)[i].get_den() != 1)
                throw std::logic_error("block transfer: non-integral class coordinates");
            alpha[i] = (*sol)[i].get_num();
        }
        return alpha;
    };

    std::vector<IntVec> coord_class(size_t(p.dim()), IntVec(size_t(r), Int(0)));
    for (int j = 0; j < t; ++j) in_basis(a.col(j)).swap(coord_class[j]);

    BlockSpec spec;
    spec.group.free_rank = r;
    for (int j = 0; j < p.dim(); ++j)
        if (include_zero_class || !vec_is_zero(coord_class[j]))
            spec.classes.push_back(coord_class[j]);

    BlockTransfer out;
    out.monoid = block_monoid(spec);
    for (int j = 0; j < p.dim(); ++j) {
        if (!include_zero_class && vec_is_zero(coord_class[j])) {
            out.coordinate_class.push_back(-1);
            continue;
        }
        auto it = std::lower_bound(out.monoid.spec.classes.begin(), out.monoid.spec.classes.end(),
                                   coord_class[j]);
        out.coordinate_class.push_back(int(it - out.monoid.spec.classes.begin()));
    }
    return out;
}

IntVec BlockTransfer::transfer(const IntVec& v) const {
    if (v.size() != coordinate_class.size())
        throw std::invalid_argument("transfer: wrong element length");
    IntVec x(monoid.spec.classes.size(), Int(0));
    for (size_t j = 0; j < v.size(); ++j) {
        if (coordinate_class[j] < 0) continue;
        x[size_t(coordinate_class[j])] += v[j];
    }
    return x;
}

}  // namespace mcm
