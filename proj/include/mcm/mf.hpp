#pragma once

#include <string>
#include <vector>

#include "mcm/bigint.hpp"
#include "mcm/poly.hpp"

namespace mcm {

// Dense matrix with polynomial entries, row-major.
class PolyMatrix {
  public:
    PolyMatrix(const NumberField& field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          entries_(rows * cols, Poly::zero(field)) {}

    static PolyMatrix from_rows(const NumberField& field,
                                const std::vector<std::vector<Poly>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const NumberField& field() const { return field_; }
    Poly& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Poly& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    std::string to_string() const;

  private:
    NumberField field_;
    size_t rows_, cols_;
    std::vector<Poly> entries_;
};

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_diag(const NumberField& field, const std::vector<Poly>& diagonal);
Poly pm_det(const PolyMatrix& m);

// Rank over the fraction field: the largest k with a nonsingular k x k
// submatrix.  Exact; intended for the small matrices that arise here.
size_t pm_rank(const PolyMatrix& m);

// Substitute values for the variables in every entry.
PolyMatrix pm_substitute(const PolyMatrix& m, const Poly& xv, const Poly& yv,
                         const Poly& tv);

struct MFCheck {
    bool phi_psi_ok = false;
    bool psi_phi_ok = false;
    std::string detail;
    bool ok() const { return phi_psi_ok && psi_phi_ok; }
};

// Verify that phi * psi = psi * phi = f * identity.
MFCheck verify_mf(const Poly& f, const PolyMatrix& phi, const PolyMatrix& psi);

// A matrix is reduced when every entry lies in (x, y), i.e. no entry has a
// nonzero constant term; such a pair presents a module with no free summand.
bool is_reduced_mf(const PolyMatrix& m);

// Reduced Groebner basis of the ideal of k x k minors.
std::vector<Poly> fitting_ideal(const PolyMatrix& m, size_t k);

struct NamedMF {
    std::string name;
    Poly f;
    PolyMatrix phi;
    PolyMatrix psi;
    IntVec expected_rank;  // cokernel rank at each branch, in branch order
};

// Factorizations of x^2 - xi^2 y^{2n+2} over a quadratic field with
// generator xi (two branches).  Indices j = 1 .. 2n+2.
std::vector<NamedMF> two_branch_family(const NumberField& k, int n);

// Factorizations of (x - y)(xi^2 y^{2n} - x^2) (three branches): the
// square pairs alpha_j/beta_j (j = 1..n) and phi_i/psi_i (i = 1..n-1),
// then the six cyclic factors paired with their cofactors.
std::vector<NamedMF> three_branch_family(const NumberField& k, int n);

// Factorization of y^3 + a y^2 x + b y x^2 + c x^3 over field f.
std::vector<NamedMF> cubic_family(const NumberField& f, const Rat& a, const Rat& b,
                                  const Rat& c);

}  // namespace mcm
