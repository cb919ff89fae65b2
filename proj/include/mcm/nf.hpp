#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcm/bigint.hpp"
#include "mcm/qmat.hpp"

namespace mcm {

struct NFElem;

// A small algebraic extension of Q presented as a tower of at most two
// monogenic steps: Q(g1) with g1 of degree d1 over Q, then optionally
// Q(g1)(g2) with g2 of degree d2 over Q(g1).  Elements are coordinate
// vectors over the monomial basis g1^i g2^j (i < d1, j < d2), index
// i + d1*j.  Handles are cheap to copy; two handles denote the same
// field iff their construction data agree.
class NumberField {
public:
    NumberField();  // the rationals

    static NumberField rationals();
    // Q(xi) with xi^2 = q; q must not be a rational square (and not 0).
    static NumberField quadratic(const Rat& q, const std::string& gen = "xi");
    // Q(th) with th a root of X^3 + aX^2 + bX + c, irreducible over Q.
    static NumberField cubic(const Rat& a, const Rat& b, const Rat& c,
                             const std::string& gen = "th");

    // Splitting field of X^3 + aX^2 + bX + c together with its three
    // roots there.  Degree 6 tower when the discriminant is not a
    // rational square, degree 3 (the cubic field itself) when it is.
    struct Splitting;
    static Splitting splitting_field(const Rat& a, const Rat& b, const Rat& c);

    int dim() const;
    int num_generators() const;
    int first_step_degree() const;        // degree of the first tower step
    std::string basis_name(int k) const;  // "" for 1, else "th", "th^2*u", ...
    std::string description() const;

    bool same(const NumberField& o) const;

    NFElem zero() const;
    NFElem one() const;
    NFElem from_rat(const Rat& r) const;
    NFElem gen1() const;  // throws std::logic_error if the field has no generators
    NFElem gen2() const;  // throws std::logic_error unless two tower steps

    // Internal representation access used by the arithmetic layer.
    struct Data;
    const Data& data() const { return *data_; }

private:
    explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

// Element of a NumberField: handle + coordinates (length = field dim).
struct NFElem {
    NumberField field;
    RatVec coords;

    bool is_zero() const;
    bool is_rational() const;  // all non-unit basis coordinates vanish
    Rat rat_value() const;     // requires is_rational()
    std::string to_string() const;
};

struct NumberField::Splitting {
    NumberField field;
    std::vector<NFElem> roots;  // the three roots of the cubic
};

NFElem operator+(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a);
NFElem operator*(const NFElem& a, const NFElem& b);
NFElem operator*(const Rat& r, const NFElem& a);
bool operator==(const NFElem& a, const NFElem& b);
bool operator!=(const NFElem& a, const NFElem& b);

// Multiplicative inverse; throws std::domain_error on zero (and on zero
// divisors, which can only arise from invalid construction data).
NFElem nf_inverse(const NFElem& a);

NFElem nf_pow(const NFElem& a, long e);  // e >= 0

// The Q-algebra endomorphism determined by the given images of the tower
// generators (one image per generator).  Returns its matrix on the
// monomial basis, or nullopt if the images do not satisfy the defining
// relations.  Nonzero endomorphisms of a field are automorphisms.
std::optional<RatMatrix> algebra_endomorphism(const NumberField& f,
                                              const std::vector<NFElem>& images);

NFElem apply_endomorphism(const RatMatrix& m, const NFElem& x);

// True iff r is the square of a rational.
bool is_rational_square(const Rat& r);

}  // namespace mcm
