#include "mcm/nf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mcm {

struct NumberField::Data {
    int d1 = 1, d2 = 1;
    std::string g1, g2;
    // g1^d1 = sum_i mp1[i] g1^i  (size d1; empty when d1 == 1)
    RatVec mp1;
    // g2^d2 = sum_j mp2[j] g2^j with coefficients in Q(g1) (each RatVec of
    // size d1; empty when d2 == 1)
    std::vector<RatVec> mp2;
    std::string key;   // structural identity
    std::string desc;  // human-readable description

    int dim() const { return d1 * d2; }
};

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::string rat_str(const Rat& r) {
    return r.get_str();
}

// ---- arithmetic in the first tower step: polynomials in g1 mod mp1 ----

RatVec k1_mul(const NumberField::Data& d, const RatVec& a, const RatVec& b) {
    const int n = d.d1;
    RatVec tmp(size_t(2 * n - 1), Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) tmp[size_t(i + j)] += a[i] * b[j];
    }
    for (int e = 2 * n - 2; e >= n; --e) {
        if (tmp[size_t(e)] == 0) continue;
        Rat c = tmp[size_t(e)];
        tmp[size_t(e)] = 0;
        for (int i = 0; i < n; ++i) tmp[size_t(e - n + i)] += c * d.mp1[i];
    }
    tmp.resize(size_t(n));
    return tmp;
}

RatVec k1_scale(const RatVec& a, const Rat& c) {
    RatVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

// ---- full-field arithmetic: vectors of K1 coefficients in g2 ----

std::vector<RatVec> unpack(const NumberField::Data& d, const RatVec& c) {
    std::vector<RatVec> out(size_t(d.d2), RatVec(size_t(d.d1), Rat(0)));
    for (int j = 0; j < d.d2; ++j)
        for (int i = 0; i < d.d1; ++i) out[size_t(j)][size_t(i)] = c[size_t(i + d.d1 * j)];
    return out;
}

RatVec pack(const NumberField::Data& d, const std::vector<RatVec>& v) {
    RatVec out(size_t(d.dim()), Rat(0));
    for (int j = 0; j < d.d2; ++j)
        for (int i = 0; i < d.d1; ++i) out[size_t(i + d.d1 * j)] = v[size_t(j)][size_t(i)];
    return out;
}

RatVec field_mul(const NumberField::Data& d, const RatVec& a, const RatVec& b) {
    if (d.d2 == 1) return k1_mul(d, a, b);
    auto av = unpack(d, a), bv = unpack(d, b);
    const int m = d.d2;
    std::vector<RatVec> tmp(size_t(2 * m - 1), RatVec(size_t(d.d1), Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            RatVec prod = k1_mul(d, av[size_t(i)], bv[size_t(j)]);
            for (int t = 0; t < d.d1; ++t) tmp[size_t(i + j)][size_t(t)] += prod[size_t(t)];
        }
    for (int e = 2 * m - 2; e >= m; --e) {
        bool zero = std::all_of(tmp[size_t(e)].begin(), tmp[size_t(e)].end(),
                                [](const Rat& x) { return x == 0; });
        if (zero) continue;
        RatVec c = tmp[size_t(e)];
        std::fill(tmp[size_t(e)].begin(), tmp[size_t(e)].end(), Rat(0));
        for (int j = 0; j < m; ++j) {
            RatVec add = k1_mul(d, c, d.mp2[size_t(j)]);
            for (int t = 0; t < d.d1; ++t) tmp[size_t(e - m + j)][size_t(t)] += add[size_t(t)];
        }
    }
    tmp.resize(size_t(m));
    return pack(d, tmp);
}

bool rational_root_exists(const Rat& a, const Rat& b, const Rat& c) {
    // Roots of X^3 + aX^2 + bX + c.  Clear denominators to
    // A X^3 + B X^2 + C X + D with integer coefficients, then try the
    // finitely many candidates p/q with p | D, q | A.
    Int lcm = a.get_den();
    lcm = lcm * b.get_den() / int_gcd(lcm, b.get_den());
    lcm = lcm * c.get_den() / int_gcd(lcm, c.get_den());
    Int A = lcm;
    Int B = Rat(a * lcm).get_num();
    Int C = Rat(b * lcm).get_num();
    Int D = Rat(c * lcm).get_num();
    if (D == 0) return true;  // root 0
    Int aD = int_abs(D), aA = int_abs(A);
    if (aD > 1000000000000L || aA > 1000000000000L)
        bad("cubic coefficients too large for the rational-root check");
    auto divisors = [](const Int& x) {
        std::vector<Int> out;
        for (Int i = 1; i * i <= x; ++i)
            if (x % i == 0) {
                out.push_back(i);
                out.push_back(x / i);
            }
        return out;
    };
    for (const Int& p : divisors(aD))
        for (const Int& q : divisors(aA))
            for (int sign : {1, -1}) {
                Rat x(p * sign, q);
                x.canonicalize();
                if (((x + a) * x + b) * x + c == 0) return true;
            }
    return false;
}

}  // namespace

bool is_rational_square(const Rat& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

NumberField::NumberField() : NumberField(rationals().data_) {}

NumberField NumberField::rationals() {
    auto d = std::make_shared<Data>();
    d->key = "Q";
    d->desc = "Q";
    return NumberField(std::move(d));
}

NumberField NumberField::quadratic(const Rat& q, const std::string& gen) {
    if (q == 0 || is_rational_square(q))
        bad("quadratic extension needs a non-square: " + rat_str(q) + " is a rational square");
    auto d = std::make_shared<Data>();
    d->d1 = 2;
    d->g1 = gen;
    d->mp1 = {q, Rat(0)};  // g^2 = q
    d->key = "Q(" + gen + "^2=" + rat_str(q) + ")";
    d->desc = "Q(" + gen + ") with " + gen + "^2 = " + rat_str(q);
    return NumberField(std::move(d));
}

NumberField NumberField::cubic(const Rat& a, const Rat& b, const Rat& c, const std::string& gen) {
    if (rational_root_exists(a, b, c))
        bad("cubic X^3 + " + rat_str(a) + " X^2 + " + rat_str(b) + " X + " + rat_str(c) +
            " has a rational root, so it does not define a cubic field");
    auto d = std::make_shared<Data>();
    d->d1 = 3;
    d->g1 = gen;
    d->mp1 = {-c, -b, -a};  // g^3 = -a g^2 - b g - c
    d->key = "Q(" + gen + ":" + rat_str(a) + "," + rat_str(b) + "," + rat_str(c) + ")";
    d->desc = "Q(" + gen + ") with " + gen + "^3 + " + rat_str(a) + "*" + gen + "^2 + " +
              rat_str(b) + "*" + gen + " + " + rat_str(c) + " = 0";
    return NumberField(std::move(d));
}

NumberField::Splitting NumberField::splitting_field(const Rat& a, const Rat& b, const Rat& c) {
    NumberField k = cubic(a, b, c);
    Rat disc = Rat(18) * a * b * c - Rat(4) * a * a * a * c + a * a * b * b -
               Rat(4) * b * b * b - Rat(27) * c * c;
    Splitting out;
    if (is_rational_square(disc)) {
        // Galois cubic: the two remaining roots already live in Q(th),
        // via r2,3 = ((-a - th) +- sqrt(disc)/f'(th)) / 2.
        out.field = k;
        NFElem th = k.gen1();
        NFElem fp = Rat(3) * (th * th) + Rat(2) * a * th + k.from_rat(b);
        Rat sq(int_sqrt_exact(disc.get_num()), int_sqrt_exact(disc.get_den()));
        NFElem half = k.from_rat(Rat(1, 2));
        NFElem base = k.from_rat(-a) - th;
        NFElem delta = k.from_rat(sq) * nf_inverse(fp);
        out.roots = {th, half * (base + delta), half * (base - delta)};
    } else {
        auto d = std::make_shared<Data>();
        d->d1 = 3;
        d->g1 = "th";
        d->mp1 = {-c, -b, -a};
        d->d2 = 2;
        d->g2 = "u";
        // Dividing X^3+aX^2+bX+c by (X - th) leaves X^2 + pX + q with
        // p = a + th and q = b + a th + th^2; so u^2 = -p u - q.
        d->mp2 = {RatVec{-b, -a, Rat(-1)}, RatVec{-a, Rat(-1), Rat(0)}};
        d->key = "Q(th,u:" + rat_str(a) + "," + rat_str(b) + "," + rat_str(c) + ")";
        d->desc = "splitting field of X^3 + " + rat_str(a) + " X^2 + " + rat_str(b) + " X + " +
                  rat_str(c) + " (degree 6)";
        NumberField l{std::shared_ptr<const Data>(std::move(d))};
        NFElem th = l.gen1(), u = l.gen2();
        out.field = l;
        out.roots = {th, u, l.from_rat(-a) - th - u};
    }
    return out;
}

int NumberField::dim() const { return data_->dim(); }

int NumberField::num_generators() const { return (data_->d1 > 1 ? 1 : 0) + (data_->d2 > 1 ? 1 : 0); }

int NumberField::first_step_degree() const { return data_->d1; }

std::string NumberField::basis_name(int k) const {
    const Data& d = *data_;
    int i = k % d.d1, j = k / d.d1;
    std::string s;
    auto app = [&](const std::string& g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += g;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app(d.g1, i);
    app(d.g2, j);
    return s;
}

std::string NumberField::description() const { return data_->desc; }

bool NumberField::same(const NumberField& o) const { return data_->key == o.data_->key; }

NFElem NumberField::zero() const { return {*this, RatVec(size_t(dim()), Rat(0))}; }

NFElem NumberField::one() const { return from_rat(Rat(1)); }

NFElem NumberField::from_rat(const Rat& r) const {
    NFElem e = zero();
    e.coords[0] = r;
    return e;
}

NFElem NumberField::gen1() const {
    if (data_->d1 == 1) throw std::logic_error("field has no generator");
    NFElem e = zero();
    e.coords[1] = 1;
    return e;
}

NFElem NumberField::gen2() const {
    if (data_->d2 == 1) throw std::logic_error("field has no second tower step");
    NFElem e = zero();
    e.coords[size_t(data_->d1)] = 1;
    return e;
}

bool NFElem::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& x) { return x == 0; });
}

bool NFElem::is_rational() const {
    for (size_t k = 1; k < coords.size(); ++k)
        if (coords[k] != 0) return false;
    return true;
}

Rat NFElem::rat_value() const {
    if (!is_rational()) throw std::logic_error("element is not rational");
    return coords[0];
}

std::string NFElem::to_string() const {
    std::string s;
    for (int k = 0; k < field.dim(); ++k) {
        const Rat& c = coords[size_t(k)];
        if (c == 0) continue;
        std::string name = field.basis_name(k);
        std::string mag;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (name.empty())
            mag = ac.get_str();
        else if (ac == 1)
            mag = name;
        else
            mag = ac.get_str() + "*" + name;
        if (s.empty())
            s = (c < 0 ? "-" : "") + mag;
        else
            s += (c < 0 ? " - " : " + ") + mag;
    }
    return s.empty() ? "0" : s;
}

namespace {

void check_same(const NFElem& a, const NFElem& b) {
    if (!a.field.same(b.field)) throw std::logic_error("mixed number fields in arithmetic");
}

}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    NFElem r = a;
    for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    NFElem r = a;
    for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= b.coords[k];
    return r;
}

NFElem operator-(const NFElem& a) {
    NFElem r = a;
    for (auto& x : r.coords) x = -x;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    return {a.field, field_mul(a.field.data(), a.coords, b.coords)};
}

NFElem operator*(const Rat& r, const NFElem& a) {
    NFElem out = a;
    for (auto& x : out.coords) x *= r;
    return out;
}

bool operator==(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    return a.coords == b.coords;
}

bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

NFElem nf_inverse(const NFElem& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    const int n = a.field.dim();
    RatMatrix m(n, n);
    for (int k = 0; k < n; ++k) {
        RatVec basis(size_t(n), Rat(0));
        basis[size_t(k)] = 1;
        RatVec col = field_mul(a.field.data(), a.coords, basis);
        for (int i = 0; i < n; ++i) m.at(i, k) = col[size_t(i)];
    }
    RatVec e1(size_t(n), Rat(0));
    e1[0] = 1;
    auto sol = rat_solve(m, e1);
    if (!sol) throw std::domain_error("element is a zero divisor (invalid field data)");
    return {a.field, *sol};
}

NFElem nf_pow(const NFElem& a, long e) {
    if (e < 0) throw std::invalid_argument("nf_pow needs e >= 0");
    NFElem r = a.field.one(), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<RatMatrix> algebra_endomorphism(const NumberField& f,
                                              const std::vector<NFElem>& images) {
    const NumberField::Data& d = f.data();
    if (int(images.size()) != f.num_generators())
        throw std::invalid_argument("one image per tower generator required");
    for (const auto& im : images)
        if (!im.field.same(f)) throw std::logic_error("generator image lies in a different field");

    NFElem u = d.d1 > 1 ? images[0] : f.one();
    NFElem v = d.d2 > 1 ? images[size_t(d.d1 > 1 ? 1 : 0)] : f.one();

    if (d.d1 > 1) {
        NFElem rel = nf_pow(u, d.d1);
        for (int i = 0; i < d.d1; ++i) rel = rel - d.mp1[size_t(i)] * nf_pow(u, i);
        if (!rel.is_zero()) return std::nullopt;
    }
    if (d.d2 > 1) {
        NFElem rel = nf_pow(v, d.d2);
        for (int j = 0; j < d.d2; ++j) {
            // The stored coefficient is a polynomial in g1; map it through
            // g1 -> u before evaluating the relation.
            NFElem coeff = f.zero();
            for (int i = 0; i < d.d1; ++i) coeff = coeff + d.mp2[size_t(j)][size_t(i)] * nf_pow(u, i);
            rel = rel - coeff * nf_pow(v, j);
        }
        if (!rel.is_zero()) return std::nullopt;
    }

    const int n = f.dim();
    RatMatrix m(n, n);
    for (int k = 0; k < n; ++k) {
        int i = k % d.d1, j = k / d.d1;
        NFElem img = nf_pow(u, i) * nf_pow(v, j);
        for (int r = 0; r < n; ++r) m.at(r, k) = img.coords[size_t(r)];
    }
    return m;
}

NFElem apply_endomorphism(const RatMatrix& m, const NFElem& x) {
    return {x.field, rat_apply(m, x.coords)};
}

}  // namespace mcm
