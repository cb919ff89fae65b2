#pragma once

#include <utility>
#include <vector>

#include "mcm/bigint.hpp"

namespace mcm {

// Dense univariate polynomial over Q; coefficient of X^i at index i.
// Normalized form has no trailing zero coefficients (zero = empty vector).
using QPoly = std::vector<Rat>;

QPoly qp_normalize(QPoly p);
int qp_deg(const QPoly& p);  // -1 for the zero polynomial
bool qp_is_zero(const QPoly& p);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const Rat& c, const QPoly& a);
QPoly qp_monic(const QPoly& a);
// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
bool qp_divides(const QPoly& b, const QPoly& a);
QPoly qp_gcd(QPoly a, QPoly b);  // monic (or zero)
// g = gcd, plus s, t with s*a + t*b = g.
struct QPolyXgcd {
    QPoly g, s, t;
};
QPolyXgcd qp_extended_gcd(const QPoly& a, const QPoly& b);
QPoly qp_derivative(const QPoly& a);
Rat qp_eval(const QPoly& a, const Rat& x);
std::string qp_to_string(const QPoly& a, const std::string& var = "X");

struct QFactor {
    QPoly factor;  // monic irreducible
    int multiplicity = 0;
};

// Complete factorization over Q of a nonzero polynomial, up to the
// leading coefficient.  Factors are monic irreducible, sorted by degree
// and then by coefficient sequence, so the output is deterministic.
std::vector<QFactor> qp_factor(const QPoly& f);

bool qp_is_irreducible(const QPoly& f);

// All rational roots of the polynomial (with multiplicity ignored).
std::vector<Rat> qp_rational_roots(const QPoly& f);

}  // namespace mcm
