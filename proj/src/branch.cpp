#include "mcm/branch.hpp"

#include <stdexcept>

namespace mcm {

BranchParam make_branch(const Poly& x_of_t, const Poly& y_of_t) {
    BranchParam b;
    b.name = "(" + x_of_t.to_string() + ", " + y_of_t.to_string() + ")";
    b.x_of_t = x_of_t;
    b.y_of_t = y_of_t;
    return b;
}

std::vector<BranchParam> two_branch_points(const NumberField& k, int n) {
    if (k.dim() < 2) throw std::invalid_argument("two_branch_points: need a quadratic generator");
    Poly t = Poly::variable(k, 't');
    Poly xi = Poly::constant(k.gen1());
    Poly neg = Poly::rational(k, Rat(-1));
    Poly tn1 = poly_pow(t, n + 1);
    return {make_branch(xi * tn1, t), make_branch(neg * xi * tn1, t)};
}

std::vector<BranchParam> three_branch_points(const NumberField& k, int n) {
    if (k.dim() < 2)
        throw std::invalid_argument("three_branch_points: need a quadratic generator");
    Poly t = Poly::variable(k, 't');
    Poly xi = Poly::constant(k.gen1());
    Poly neg = Poly::rational(k, Rat(-1));
    Poly tn = poly_pow(t, n);
    return {make_branch(t, t), make_branch(xi * tn, t), make_branch(neg * xi * tn, t)};
}

std::vector<BranchParam> cubic_branch_points(const NumberField& f,
                                             const std::vector<NFElem>& roots) {
    Poly t = Poly::variable(f, 't');
    std::vector<BranchParam> out;
    for (const NFElem& s : roots) out.push_back(make_branch(t, Poly::constant(s) * t));
    return out;
}

Poly ade_equation(const NumberField& f, RingFamily fam, int n) {
    Poly x = Poly::variable(f, 'x');
    Poly y = Poly::variable(f, 'y');
    switch (fam) {
        case RingFamily::A:
            return x * x - poly_pow(y, n + 1);
        case RingFamily::D:
            return x * x * y - poly_pow(y, n - 1);
        case RingFamily::E6:
            return x * x * x - poly_pow(y, 4);
        case RingFamily::E7:
            return x * x * x - x * y * y * y;
        case RingFamily::E8:
            return x * x * x - poly_pow(y, 5);
        default:
            throw std::invalid_argument(
                "ade_equation: only the plane-curve families A, D, E6, E7, E8");
    }
}

std::vector<BranchParam> ade_branch_points(const NumberField& f, RingFamily fam, int n) {
    Poly t = Poly::variable(f, 't');
    Poly zero = Poly::zero(f);
    Poly neg = Poly::rational(f, Rat(-1));
    switch (fam) {
        case RingFamily::A:
            if (n % 2 == 0) return {make_branch(poly_pow(t, n + 1), t * t)};
            return {make_branch(poly_pow(t, (n + 1) / 2), t),
                    make_branch(neg * poly_pow(t, (n + 1) / 2), t)};
        case RingFamily::D: {
            if (n < 4) throw std::invalid_argument("ade_branch_points: D needs n >= 4");
            std::vector<BranchParam> out{make_branch(t, zero)};
            if (n % 2 == 1) {
                out.push_back(make_branch(poly_pow(t, n - 2), t * t));
            } else {
                int m = (n - 2) / 2;
                out.push_back(make_branch(poly_pow(t, m), t));
                out.push_back(make_branch(neg * poly_pow(t, m), t));
            }
            return out;
        }
        case RingFamily::E6:
            return {make_branch(poly_pow(t, 4), poly_pow(t, 3))};
        case RingFamily::E7:
            return {make_branch(zero, t), make_branch(poly_pow(t, 3), t * t)};
        case RingFamily::E8:
            return {make_branch(poly_pow(t, 5), poly_pow(t, 3))};
        default:
            throw std::invalid_argument(
                "ade_branch_points: only the plane-curve families A, D, E6, E7, E8");
    }
}

int rank_at_branch(const PolyMatrix& m, const BranchParam& branch) {
    const NumberField& f = branch.x_of_t.field();
    Poly t = Poly::variable(f, 't');
    PolyMatrix sub = pm_substitute(m, branch.x_of_t, branch.y_of_t, t);
    return static_cast<int>(m.rows()) - static_cast<int>(pm_rank(sub));
}

IntVec rank_vector(const PolyMatrix& m, const std::vector<BranchParam>& branches) {
    IntVec out;
    for (const BranchParam& b : branches) out.push_back(rank_at_branch(m, b));
    return out;
}

}  // namespace mcm
