#include "mcm/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace mcm {

QPoly qp_normalize(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

bool qp_is_zero(const QPoly& p) { return p.empty(); }

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qp_normalize(std::move(r));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qp_normalize(std::move(r));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return qp_normalize(std::move(r));
}

QPoly qp_scale(const Rat& c, const QPoly& a) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly qp_monic(const QPoly& a) {
    if (a.empty()) return a;
    return qp_scale(Rat(1) / a.back(), a);
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::invalid_argument("qp_divmod: division by zero polynomial");
    QPoly rem = a;
    if (a.size() < b.size()) return {{}, rem};
    QPoly quot(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= qp_deg(b); --i) {
        if (rem[i] == 0) continue;
        Rat c = rem[i] / lead;
        quot[i - qp_deg(b)] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[i - qp_deg(b) + j] -= c * b[j];
    }
    return {qp_normalize(std::move(quot)), qp_normalize(std::move(rem))};
}

bool qp_divides(const QPoly& b, const QPoly& a) {
    if (b.empty()) return a.empty();
    return qp_divmod(a, b).second.empty();
}

QPoly qp_gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

QPolyXgcd qp_extended_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = {Rat(1)}, s1 = {};
    QPoly t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Rat inv = Rat(1) / r0.back();
        r0 = qp_scale(inv, r0);
        s0 = qp_scale(inv, s0);
        t0 = qp_scale(inv, t0);
    }
    return {r0, s0, t0};
}

QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * a[i];
    return qp_normalize(std::move(r));
}

Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat v(0);
    for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

std::string qp_to_string(const QPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        Rat c = a[i];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1) && i > 0;
        if (!unit) out << c.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

// ---------- integer polynomial layer (used by the factorization engine) ----------

using ZPoly = std::vector<Int>;  // coefficient of X^i at index i, trimmed

ZPoly z_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int z_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division by a monic divisor; returns quotient iff remainder is zero.
bool z_divide_monic(const ZPoly& a, const ZPoly& b, ZPoly* quot_out) {
    if (b.empty() || b.back() != 1) throw std::logic_error("z_divide_monic: divisor must be monic");
    ZPoly rem = a;
    if (a.size() < b.size()) return a.empty();
    ZPoly quot(a.size() - b.size() + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= z_deg(b); --i) {
        Int c = rem[i];
        if (c == 0) continue;
        quot[i - z_deg(b)] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[i - z_deg(b) + j] -= c * b[j];
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    if (quot_out) *quot_out = z_trim(std::move(quot));
    return true;
}

// ---------- arithmetic mod a prime p (coefficients kept in [0, p)) ----------

Int md(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

ZPoly m_norm(ZPoly a, const Int& p) {
    for (auto& c : a) c = md(c, p);
    return z_trim(std::move(a));
}

ZPoly m_mul(const ZPoly& a, const ZPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return m_norm(std::move(r), p);
}

ZPoly m_sub(const ZPoly& a, const ZPoly& b, const Int& p) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return m_norm(std::move(r), p);
}

ZPoly m_add(const ZPoly& a, const ZPoly& b, const Int& p) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return m_norm(std::move(r), p);
}

Int m_inv(const Int& a, const Int& p) {
    Int g, s;
    mpz_class t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), md(a, p).get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw std::logic_error("m_inv: not invertible");
    return md(s, p);
}

ZPoly m_monic(const ZPoly& a, const Int& p) {
    if (a.empty()) return a;
    Int inv = m_inv(a.back(), p);
    ZPoly r = a;
    for (auto& c : r) c = md(c * inv, p);
    return z_trim(std::move(r));
}

std::pair<ZPoly, ZPoly> m_divmod(const ZPoly& a, const ZPoly& b, const Int& p) {
    if (b.empty()) throw std::invalid_argument("m_divmod: zero divisor");
    ZPoly rem = a;
    if (a.size() < b.size()) return {{}, rem};
    ZPoly quot(a.size() - b.size() + 1, Int(0));
    Int lead_inv = m_inv(b.back(), p);
    for (int i = static_cast<int>(rem.size()) - 1; i >= z_deg(b); --i) {
        Int c = md(rem[i] * lead_inv, p);
        if (c == 0) { rem[i] = 0; continue; }
        quot[i - z_deg(b)] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[i - z_deg(b) + j] = md(rem[i - z_deg(b) + j] - c * b[j], p);
    }
    return {z_trim(std::move(quot)), m_norm(std::move(rem), p)};
}

ZPoly m_rem(const ZPoly& a, const ZPoly& b, const Int& p) { return m_divmod(a, b, p).second; }

ZPoly m_gcd(ZPoly a, ZPoly b, const Int& p) {
    a = m_norm(std::move(a), p);
    b = m_norm(std::move(b), p);
    while (!b.empty()) {
        ZPoly r = m_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return m_monic(a, p);
}

// g = gcd(a,b) monic, with s*a + t*b = g (mod p).
void m_xgcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& g, ZPoly& s, ZPoly& t) {
    ZPoly r0 = m_norm(a, p), r1 = m_norm(b, p);
    ZPoly s0 = {Int(1)}, s1 = {};
    ZPoly t0 = {}, t1 = {Int(1)};
    while (!r1.empty()) {
        auto [q, r] = m_divmod(r0, r1, p);
        ZPoly s2 = m_sub(s0, m_mul(q, s1, p), p);
        ZPoly t2 = m_sub(t0, m_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Int inv = m_inv(r0.back(), p);
        auto scale = [&](ZPoly& v) { for (auto& c : v) c = md(c * inv, p); v = z_trim(std::move(v)); };
        scale(r0); scale(s0); scale(t0);
    }
    g = std::move(r0); s = std::move(s0); t = std::move(t0);
}

ZPoly m_powmod(const ZPoly& base, const Int& e, const ZPoly& f, const Int& p) {
    ZPoly result = {Int(1)};
    ZPoly b = m_rem(base, f, p);
    Int n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = m_rem(m_mul(result, b, p), f, p);
        b = m_rem(m_mul(b, b, p), f, p);
        n >>= 1;
    }
    return result;
}

// ---------- factorization mod p of a squarefree monic polynomial ----------

struct SplitRng {
    uint64_t state;
    explicit SplitRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f = product of distinct
// irreducibles all of degree d.
void m_equal_degree(const ZPoly& f, int d, const Int& p, SplitRng& rng, std::vector<ZPoly>& out) {
    int n = z_deg(f);
    if (n == d) { out.push_back(m_monic(f, p)); return; }
    Int exponent;
    mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        ZPoly a(static_cast<size_t>(n), Int(0));
        for (auto& c : a) c = Int(static_cast<unsigned long>(rng.next() % 1000003ULL)) % p;
        a = m_norm(std::move(a), p);
        if (z_deg(a) < 1) continue;
        ZPoly g = m_gcd(f, a, p);
        if (z_deg(g) > 0 && z_deg(g) < n) {
            m_equal_degree(g, d, p, rng, out);
            m_equal_degree(m_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        ZPoly b = m_powmod(a, exponent, f, p);
        b = m_sub(b, {Int(1)}, p);
        g = m_gcd(f, b, p);
        if (z_deg(g) > 0 && z_deg(g) < n) {
            m_equal_degree(g, d, p, rng, out);
            m_equal_degree(m_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization; f squarefree monic mod p.
std::vector<ZPoly> m_factor_squarefree(ZPoly f, const Int& p) {
    std::vector<ZPoly> out;
    SplitRng rng(0x5DEECE66DULL);
    ZPoly x = {Int(0), Int(1)};
    ZPoly h = x;
    int d = 0;
    while (z_deg(f) > 0) {
        ++d;
        if (2 * d > z_deg(f)) { out.push_back(m_monic(f, p)); break; }
        h = m_powmod(h, p, f, p);  // h = x^(p^d) mod f
        ZPoly g = m_gcd(f, m_sub(h, x, p), p);
        if (z_deg(g) > 0) {
            m_equal_degree(g, d, p, rng, out);
            f = m_divmod(f, g, p).first;
            h = m_rem(h, f, p);
        }
    }
    return out;
}

// ---------- Hensel lifting ----------

Int sym(const Int& a, const Int& m) {
    Int r = md(a, m);
    if (r * 2 > m) r -= m;
    return r;
}

ZPoly sym_norm(ZPoly a, const Int& m) {
    for (auto& c : a) c = sym(c, m);
    return z_trim(std::move(a));
}

// One quadratic Hensel step: given f = g*h (mod m) and s*g + t*h = 1 (mod m),
// with f, g, h monic, updates everything to hold mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = sym_norm(m_sub(f, m_mul(g, h, m2), m2), m2);
    auto [q, r] = m_divmod(m_mul(s, e, m2), h, m2);
    ZPoly g1 = m_add(g, m_add(m_mul(t, e, m2), m_mul(q, g, m2), m2), m2);
    ZPoly h1 = m_add(h, r, m2);
    ZPoly b = m_sub(m_add(m_mul(s, g1, m2), m_mul(t, h1, m2), m2), {Int(1)}, m2);
    auto [c, d0] = m_divmod(m_mul(s, b, m2), h1, m2);
    ZPoly s1 = m_sub(s, d0, m2);
    ZPoly t1 = m_sub(t, m_add(m_mul(t, b, m2), m_mul(c, g1, m2), m2), m2);
    g = std::move(g1); h = std::move(h1); s = std::move(s1); t = std::move(t1);
}

// Lifts the factorization f = prod(factors) (mod p) to modulus >= target.
// f and the factors are monic; the result entries are monic mod `modulus`.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& factors, const Int& p,
                                    const Int& target, Int& modulus) {
    if (factors.size() == 1) {
        Int m = p;
        while (m < target) m *= m;
        modulus = m;
        return {m_norm(f, m)};
    }
    size_t half = factors.size() / 2;
    ZPoly g = {Int(1)}, h = {Int(1)};
    for (size_t i = 0; i < half; ++i) g = m_mul(g, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) h = m_mul(h, factors[i], p);
    ZPoly one, s, t;
    m_xgcd(g, h, p, one, s, t);
    if (z_deg(one) != 0) throw std::logic_error("hensel_lift_tree: factors not coprime mod p");
    Int m = p;
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    modulus = m;
    std::vector<ZPoly> left_in(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<ZPoly> right_in(factors.begin() + static_cast<long>(half), factors.end());
    Int dummy;
    auto left = hensel_lift_tree(m_norm(g, m), left_in, p, m, dummy);
    auto right = hensel_lift_tree(m_norm(h, m), right_in, p, m, dummy);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// ---------- Zassenhaus: factor a squarefree monic integer polynomial ----------

std::vector<ZPoly> factor_squarefree_monic_integer(const ZPoly& f) {
    int n = z_deg(f);
    if (n <= 0) return {};
    if (n == 1) return {f};

    static const long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                                   43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                                   101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    // first prime where f stays squarefree
    Int p(0);
    for (long cand : kPrimes) {
        Int q(cand);
        ZPoly fp = m_norm(f, q);
        if (z_deg(fp) != n) continue;
        ZPoly d(static_cast<size_t>(n), Int(0));
        for (int i = 1; i <= n; ++i) d[static_cast<size_t>(i - 1)] = f[static_cast<size_t>(i)] * i;
        ZPoly dp = m_norm(std::move(d), q);
        if (z_deg(m_gcd(fp, dp, q)) == 0) { p = q; break; }
    }
    if (p == 0) throw std::logic_error("factor_squarefree_monic_integer: no suitable prime found");

    std::vector<ZPoly> modular = m_factor_squarefree(m_norm(f, p), p);
    std::sort(modular.begin(), modular.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    if (modular.size() == 1) return {f};

    // Landau-Mignotte style bound: any factor of f has coefficients bounded by
    // 2^n * (euclidean norm of f); lift until the modulus exceeds twice that.
    Int norm2(0);
    for (const Int& c : f) norm2 += c * c;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    if (bound * bound < norm2) bound += 1;
    Int two_pow(1);
    two_pow <<= static_cast<unsigned>(n);
    Int target = 2 * two_pow * bound + 1;

    Int modulus = p;
    while (modulus < target) modulus *= modulus;
    std::vector<ZPoly> lifted = hensel_lift_tree(m_norm(f, modulus), modular, p, target, modulus);

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<ZPoly> pool = lifted;
    ZPoly remaining = f;
    size_t max_take = pool.size();
    for (size_t take = 1; take <= max_take && 2 * take <= pool.size();) {
        bool found = false;
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand = {Int(1)};
            for (size_t i : idx) cand = m_mul(cand, pool[i], modulus);
            cand = sym_norm(std::move(cand), modulus);
            ZPoly quot;
            if (!cand.empty() && cand.back() == 1 && z_divide_monic(remaining, cand, &quot)) {
                result.push_back(cand);
                remaining = quot;
                std::vector<ZPoly> next_pool;
                for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) { ++k; continue; }
                    next_pool.push_back(pool[i]);
                }
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next combination
            size_t i = take;
            while (i-- > 0) {
                if (idx[i] + (take - i) < pool.size()) {
                    ++idx[i];
                    for (size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++take;
    }
    if (z_deg(remaining) > 0) result.push_back(remaining);
    return result;
}

}  // namespace

std::vector<QFactor> qp_factor(const QPoly& f_in) {
    QPoly f = qp_normalize(f_in);
    if (f.empty()) throw std::invalid_argument("qp_factor: zero polynomial");
    std::vector<QFactor> out;
    if (qp_deg(f) == 0) return out;
    f = qp_monic(f);

    // distinct irreducibles come from the squarefree part; multiplicities by
    // trial division of the original polynomial
    QPoly sqf = qp_divmod(f, qp_gcd(f, qp_derivative(f))).first;

    // clear denominators via x -> y/c so the polynomial becomes monic integer
    Int c(1);
    for (const Rat& a : sqf) c = c / int_gcd(c, a.get_den()) * a.get_den();
    int d = qp_deg(sqf);
    ZPoly g(static_cast<size_t>(d) + 1);
    Int cpow(1);
    for (int i = d; i >= 0; --i) {
        Rat scaled = sqf[static_cast<size_t>(i)] * Rat(cpow);
        if (scaled.get_den() != 1) throw std::logic_error("qp_factor: denominator clearing failed");
        g[static_cast<size_t>(i)] = scaled.get_num();
        cpow *= c;
    }

    std::vector<ZPoly> zfactors = factor_squarefree_monic_integer(z_trim(std::move(g)));

    std::vector<QPoly> irreducibles;
    for (const ZPoly& zf : zfactors) {
        // undo the substitution: factor(x) = c^(-deg) * zf(c x), then monic-ize
        QPoly q(zf.size());
        Rat pw(1);
        for (size_t i = 0; i < zf.size(); ++i) {
            q[i] = Rat(zf[i]) * pw;
            pw *= Rat(c);
        }
        irreducibles.push_back(qp_monic(qp_normalize(std::move(q))));
    }
    std::sort(irreducibles.begin(), irreducibles.end(), [](const QPoly& a, const QPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    for (const QPoly& q : irreducibles) {
        int mult = 0;
        QPoly rest = f;
        for (;;) {
            auto [quot, rem] = qp_divmod(rest, q);
            if (!rem.empty()) break;
            ++mult;
            rest = quot;
        }
        out.push_back({q, mult});
    }
    return out;
}

bool qp_is_irreducible(const QPoly& f) {
    QPoly g = qp_normalize(f);
    if (qp_deg(g) < 1) return false;
    auto fs = qp_factor(g);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<Rat> qp_rational_roots(const QPoly& f) {
    std::vector<Rat> roots;
    for (const auto& fac : qp_factor(f))
        if (qp_deg(fac.factor) == 1) roots.push_back(-fac.factor[0]);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace mcm
