#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcm/nf.hpp"
#include "mcm/qmat.hpp"
#include "mcm/qpoly.hpp"

namespace mcm {

// A cubic X^3 + aX^2 + bX + c together with its splitting field L, the
// three roots there, and the symmetries of L: the order-three map tau
// cycling roots[0] -> roots[1] -> roots[2] -> roots[0], and (when L has
// degree six) the involution sigma fixing roots[0] and swapping the
// other two roots.
struct GaloisCubic {
    NumberField L;
    std::vector<NFElem> roots;
    RatMatrix tau;
    RatMatrix tau2;                  // tau applied twice
    std::optional<RatMatrix> sigma;  // degree-six case only
    Rat a, b, c;

    QPoly minpoly() const { return {c, b, a, Rat(1)}; }
    // 1, theta, theta^2 with theta = roots[0]: a basis of the cubic
    // subfield K inside L.
    std::vector<NFElem> k_power_basis() const;
    // roots[1] / roots[0]; a primitive cube root of unity when L has
    // degree six.  Throws otherwise.
    NFElem omega() const;
};

GaloisCubic make_galois_cubic(const Rat& a, const Rat& b, const Rat& c);

// Matrix of multiplication by s on the monomial basis of its field.
RatMatrix mult_matrix(const NFElem& s);

// How the coefficient field K = Q(theta) acts on the first component of
// the two-component modules below (the second component always carries
// the plain action):
//   diagonal — s acts as multiplication by s,
//   twisted  — s acts as multiplication by tau^2(s).
enum class PairConvention { diagonal, twisted };

std::string convention_name(PairConvention c);

// Module over the Artinian pair Q -> K (K the cubic field): a finite
// dimensional Q-space W carrying a K-structure given by the action of
// theta (a matrix satisfying the cubic), together with a Q-subspace V
// that must generate W over K.  The rank is dim_K W.
struct PairModule {
    std::string name;
    QPoly theta_minpoly;  // monic cubic
    RatMatrix theta;      // action of theta on W
    std::vector<RatVec> v_basis;
    // candidate V-subspaces worth trying first when splitting
    std::vector<std::vector<RatVec>> split_hints;

    int w_dim() const { return theta.rows(); }
    int v_dim() const { return static_cast<int>(v_basis.size()); }
    int rank() const { return w_dim() / qp_deg(theta_minpoly); }
};

struct PairValidation {
    bool theta_ok = false;       // theta satisfies the (irreducible) cubic
    bool v_independent = false;  // the listed V-basis is independent
    bool generates = false;      // K.V = W
    int kv_dim = 0;              // dim of K.V
    std::string detail;
    bool ok() const { return theta_ok && v_independent && generates; }
};
PairValidation validate_pair(const PairModule& m);

// The rank-four module in the form it is usually written down: W = L + L,
// V the diagonal copy of L, and s acting as (tau(s)x, sy).
PairModule build_rank4_listed(const GaloisCubic& g);

// The relabelled form: same W, V the graph {(tau^2(x), x) : x in L},
// with the K-action chosen by the convention.
PairModule build_rank4_module(const GaloisCubic& g, PairConvention conv);

// The rank-three companion: W = L + K, V = {(u, u) : u in K}, K acting on
// the L-component by the convention and on the K-component plainly.
PairModule build_rank3_module(const GaloisCubic& g, PairConvention conv);

// Checks that (x, y) -> (tau^2(x), y) is an isomorphism from the listed
// rank-four module onto the diagonal-convention relabelled form.
bool rank4_relabel_is_isomorphism(const GaloisCubic& g, std::string* why = nullptr);

// Exact checks on the two explicitly displayed candidate summands
//   W1 = {(tau^2(x) + tau^2(y) w^2, x + y w) : x, y in K}
//   W2 = {(tau^2(x) w + tau^2(y), x w + y w^2) : x, y in K}
// (w a primitive cube root of unity) inside the relabelled rank-four
// module, under the given action convention.
struct DisplayedSummandReport {
    PairConvention convention = PairConvention::diagonal;
    bool ambient_valid = false;  // the rank-four module itself satisfies K.V = W
    int ambient_kv_dim = 0;
    bool w1_stable = false;      // theta W1 <= W1
    bool w2_stable = false;
    bool sum_direct = false;     // W = W1 + W2 with dims 6 + 6
    bool v_splits = false;       // V = (V n W1) + (V n W2)
    int v1_dim = 0, v2_dim = 0;  // dims of V n W1, V n W2
    bool w1_generated = false;   // K.(V n W1) = W1
    bool w2_generated = false;
    // all requirements for a decomposition into modules over the pair
    bool decomposition_ok() const {
        return ambient_valid && w1_stable && w2_stable && sum_direct && v_splits &&
               w1_generated && w2_generated;
    }
};
DisplayedSummandReport displayed_summand_check(const GaloisCubic& g, PairConvention conv);

// Basis of { A : A theta = theta A and A V <= V }, the endomorphisms of
// the pair module.
std::vector<RatMatrix> endomorphism_algebra(const PairModule& m);

struct Summand {
    PairModule module;     // in its own coordinates
    RatMatrix embedding;   // columns give its W-basis inside the parent W
    bool certified_indecomposable = false;
};

struct Decomposition {
    std::vector<Summand> summands;
    bool all_certified = false;
};

// Splits m into indecomposable summands where the search succeeds; every
// returned split is verified exactly.  Summands the search cannot split
// further are certified indecomposable when the endomorphism ring is
// shown to be local (always possible for rank one).
Decomposition decompose(const PairModule& m, uint64_t seed);

bool verify_decomposition(const PairModule& m, const Decomposition& d, std::string* why = nullptr);

}  // namespace mcm
