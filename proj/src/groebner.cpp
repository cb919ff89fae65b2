#include "mcm/groebner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mcm/nf.hpp"

namespace mcm {

namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) return f;
    NFElem lc = f.leading_coeff();
    return nf_inverse(lc) * f;
}

// One term of f that is divisible by LM(g) for some generator g, preferring
// the leading term.  Returns the index of the generator, or nullopt.
std::optional<size_t> find_divisor(const Monomial& m, const std::vector<Poly>& gens) {
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_zero() && gens[i].leading_monomial().divides(m)) return i;
    }
    return std::nullopt;
}

Poly spoly(const Poly& f, const Poly& g) {
    Monomial mf = f.leading_monomial();
    Monomial mg = g.leading_monomial();
    Monomial l = mono_lcm(mf, mg);
    Monomial df = mono_div(l, mf);
    Monomial dg = mono_div(l, mg);
    Poly tf = Poly::term(nf_inverse(f.leading_coeff()), df.x, df.y, df.t);
    Poly tg = Poly::term(nf_inverse(g.leading_coeff()), dg.x, dg.y, dg.t);
    return tf * f - tg * g;
}

bool coprime_leading(const Poly& f, const Poly& g) {
    Monomial a = f.leading_monomial();
    Monomial b = g.leading_monomial();
    return (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0) && (a.t == 0 || b.t == 0);
}

}  // namespace

Poly reduce_full(const Poly& f, const std::vector<Poly>& gens) {
    Poly rem = Poly::zero(f.field());
    Poly work = f;
    while (!work.is_zero()) {
        Monomial m = work.leading_monomial();
        auto idx = find_divisor(m, gens);
        if (idx) {
            const Poly& g = gens[*idx];
            NFElem c = work.leading_coeff() * nf_inverse(g.leading_coeff());
            Monomial d = mono_div(m, g.leading_monomial());
            work = work - Poly::term(c, d.x, d.y, d.t) * g;
        } else {
            Poly lead = Poly::term(work.leading_coeff(), m.x, m.y, m.t);
            rem = rem + lead;
            work = work - lead;
        }
    }
    return rem;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens) {
    if (gens.empty()) return {};
    const NumberField& field = gens.front().field();
    std::vector<Poly> basis;
    for (const Poly& g : gens) {
        if (!g.field().same(field))
            throw std::invalid_argument("groebner_basis: generators over different fields");
        if (!g.is_zero()) basis.push_back(make_monic(g));
    }
    if (basis.empty()) return {};

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (coprime_leading(basis[i], basis[j])) continue;
        Poly s = reduce_full(spoly(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        s = make_monic(s);
        size_t k = basis.size();
        basis.push_back(s);
        for (size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
    }

    // Minimalise: drop generators whose leading monomial is divisible by
    // another generator's.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Monomial mi = basis[i].leading_monomial();
            Monomial mj = basis[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                // On equal leading monomials keep the earlier element.
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails so the basis is fully reduced and therefore unique.
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(make_monic(r));
    }

    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

bool ideal_member(const Poly& f, const std::vector<Poly>& reduced_basis) {
    if (f.is_zero()) return true;
    if (reduced_basis.empty()) return false;
    return reduce_full(f, reduced_basis).is_zero();
}

bool ideal_equal(const std::vector<Poly>& gens_a, const std::vector<Poly>& gens_b) {
    std::vector<Poly> a = groebner_basis(gens_a);
    std::vector<Poly> b = groebner_basis(gens_b);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::vector<Poly> ideal_sum(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> gens = a;
    gens.insert(gens.end(), b.begin(), b.end());
    return groebner_basis(gens);
}

std::string ideal_to_string(const std::vector<Poly>& basis) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < basis.size(); ++i) {
        if (i) os << ", ";
        os << basis[i].to_string();
    }
    os << ")";
    return os.str();
}

}  // namespace mcm
