#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcm/nf.hpp"

namespace mcm {

// Monomial x^ex * y^ey * t^et.
struct Monomial {
    int x = 0, y = 0, t = 0;

    int total() const { return x + y + t; }
    bool operator==(const Monomial&) const = default;
    bool divides(const Monomial& o) const { return x <= o.x && y <= o.y && t <= o.t; }
};

// Graded reverse lexicographic order with x > y > t: higher total degree
// wins; on ties the rightmost variable in which the monomials differ
// decides, with the smaller exponent there ranking higher.
bool grevlex_less(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Sparse polynomial in x, y, t with coefficients in a NumberField.
// Terms are kept combined, nonzero, and sorted in descending grevlex
// order, so equal polynomials have identical representations.
class Poly {
public:
    Poly() = default;  // zero over Q
    explicit Poly(const NumberField& f) : field_(f) {}

    static Poly zero(const NumberField& f) { return Poly(f); }
    static Poly constant(const NFElem& c);
    static Poly rational(const NumberField& f, const Rat& r);
    static Poly variable(const NumberField& f, char v, int e = 1);
    static Poly term(const NFElem& c, int ex, int ey, int et);

    const NumberField& field() const { return field_; }
    const std::vector<std::pair<Monomial, NFElem>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : leading_monomial().total(); }
    const Monomial& leading_monomial() const;
    const NFElem& leading_coeff() const;
    NFElem coefficient(const Monomial& m) const;  // zero if absent
    NFElem constant_term() const { return coefficient(Monomial{}); }
    bool uses_variable(char v) const;

    // Transports the coefficients into `target` (identical field, or all
    // coefficients rational).  Throws std::logic_error otherwise.
    Poly into_field(const NumberField& target) const;

    Poly substitute(const Poly& xv, const Poly& yv, const Poly& tv) const;

    std::string to_string() const;

    // Grammar: sums of products of factors; factors are integers,
    // fractions p/q, parenthesized subexpressions, or the symbols
    // x, y, t and the field generators, each with an optional ^exponent.
    static Poly parse(const NumberField& f, const std::string& text);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const NFElem& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void normalize(std::vector<std::pair<Monomial, NFElem>> raw);

    NumberField field_;
    std::vector<std::pair<Monomial, NFElem>> terms_;
};

Poly poly_pow(const Poly& p, int e);

}  // namespace mcm
