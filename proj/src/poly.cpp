#include "mcm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace mcm {

bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    // Rightmost differing variable decides; larger exponent there loses.
    if (a.t != b.t) return a.t > b.t;
    if (a.y != b.y) return a.y > b.y;
    return a.x < b.x;  // all equal -> false
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.t + b.t};
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::logic_error("monomial division undefined");
    return {a.x - b.x, a.y - b.y, a.t - b.t};
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.t, b.t)};
}

namespace {

std::string mono_str(const Monomial& m) {
    std::string s;
    auto app = [&](char v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app('x', m.x);
    app('y', m.y);
    app('t', m.t);
    return s;
}

void check_field(const Poly& a, const Poly& b) {
    if (!a.field().same(b.field())) throw std::logic_error("mixed coefficient fields");
}

}  // namespace

void Poly::normalize(std::vector<std::pair<Monomial, NFElem>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return grevlex_less(b.first, a.first); });
    terms_.clear();
    for (auto& [m, c] : raw) {
        if (!terms_.empty() && terms_.back().first == m)
            terms_.back().second = terms_.back().second + c;
        else
            terms_.emplace_back(m, std::move(c));
        if (!terms_.empty() && terms_.back().second.is_zero()) terms_.pop_back();
    }
}

Poly Poly::constant(const NFElem& c) {
    Poly p(c.field);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

Poly Poly::rational(const NumberField& f, const Rat& r) { return constant(f.from_rat(r)); }

Poly Poly::variable(const NumberField& f, char v, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) return rational(f, 1);
    Monomial m;
    switch (v) {
        case 'x': m.x = e; break;
        case 'y': m.y = e; break;
        case 't': m.t = e; break;
        default: throw std::invalid_argument("unknown variable");
    }
    Poly p(f);
    p.terms_.emplace_back(m, f.one());
    return p;
}

Poly Poly::term(const NFElem& c, int ex, int ey, int et) {
    if (ex < 0 || ey < 0 || et < 0) throw std::invalid_argument("negative exponent");
    Poly p(c.field);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{ex, ey, et}, c);
    return p;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.front().first;
}

const NFElem& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return terms_.front().second;
}

NFElem Poly::coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return field_.zero();
}

bool Poly::uses_variable(char v) const {
    for (const auto& [m, c] : terms_) {
        if (v == 'x' && m.x > 0) return true;
        if (v == 'y' && m.y > 0) return true;
        if (v == 't' && m.t > 0) return true;
    }
    return false;
}

Poly Poly::into_field(const NumberField& target) const {
    if (field_.same(target)) {
        Poly p = *this;
        p.field_ = target;
        return p;
    }
    Poly p(target);
    std::vector<std::pair<Monomial, NFElem>> raw;
    for (const auto& [m, c] : terms_) {
        if (!c.is_rational())
            throw std::logic_error("cannot transport non-rational coefficient between fields");
        raw.emplace_back(m, target.from_rat(c.rat_value()));
    }
    p.normalize(std::move(raw));
    return p;
}

Poly Poly::substitute(const Poly& xv, const Poly& yv, const Poly& tv) const {
    check_field(xv, yv);
    check_field(yv, tv);
    const NumberField& target = xv.field();
    Poly acc(target);
    for (const auto& [m, c] : terms_) {
        NFElem cc = field_.same(target)
                        ? c
                        : (c.is_rational()
                               ? target.from_rat(c.rat_value())
                               : throw std::logic_error("cannot transport coefficient"));
        Poly term = Poly::constant(cc) * poly_pow(xv, m.x) * poly_pow(yv, m.y) * poly_pow(tv, m.t);
        acc = acc + term;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string mono = mono_str(m);
        bool first = s.empty();
        if (c.is_rational()) {
            Rat r = c.rat_value();
            Rat mag = r < 0 ? Rat(-r) : r;
            std::string body;
            if (mono.empty())
                body = mag.get_str();
            else if (mag == 1)
                body = mono;
            else
                body = mag.get_str() + "*" + mono;
            if (first)
                s = (r < 0 ? "-" : "") + body;
            else
                s += (r < 0 ? " - " : " + ") + body;
        } else {
            std::string body = "(" + c.to_string() + ")";
            if (!mono.empty()) body += "*" + mono;
            s += first ? body : " + " + body;
        }
    }
    return s;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_field(a, b);
    Poly p(a.field_);
    auto raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    p.normalize(std::move(raw));
    return p;
}

Poly operator-(const Poly& a) {
    Poly p = a;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    check_field(a, b);
    Poly p(a.field_);
    std::vector<std::pair<Monomial, NFElem>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) raw.emplace_back(mono_mul(ma, mb), ca * cb);
    p.normalize(std::move(raw));
    return p;
}

Poly operator*(const NFElem& c, const Poly& a) { return Poly::constant(c) * a; }

bool operator==(const Poly& a, const Poly& b) {
    check_field(a, b);
    return a.terms_ == b.terms_;
}

Poly poly_pow(const Poly& p, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly r = Poly::rational(p.field(), 1);
    Poly base = p;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const NumberField& f;
    const std::string& s;
    size_t pos = 0;

    // Symbols recognized as atoms: the three variables plus the field
    // generator names, longest first so that e.g. "th" wins over "t".
    std::vector<std::pair<std::string, Poly>> symbols;

    Parser(const NumberField& field, const std::string& text) : f(field), s(text) {
        symbols.emplace_back("x", Poly::variable(f, 'x'));
        symbols.emplace_back("y", Poly::variable(f, 'y'));
        symbols.emplace_back("t", Poly::variable(f, 't'));
        if (f.num_generators() >= 1) symbols.emplace_back(f.basis_name(1), Poly::constant(f.gen1()));
        if (f.num_generators() >= 2) {
            int second = f.first_step_degree();  // basis index of the second generator
            symbols.emplace_back(f.basis_name(second), Poly::constant(f.gen2()));
        }
        std::sort(symbols.begin(), symbols.end(),
                  [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + msg + " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return Int(s.substr(start, pos - start));
    }

    Poly parse_base() {
        skip_ws();
        if (eat('(')) {
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (peek_digit()) {
            Int num = parse_uint();
            if (eat('/')) {
                Int den = parse_uint();
                if (den == 0) fail("division by zero");
                Rat r(num, den);
                r.canonicalize();
                return Poly::rational(f, r);
            }
            return Poly::rational(f, Rat(num));
        }
        for (const auto& [name, val] : symbols) {
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                return val;
            }
        }
        fail("expected a number, variable, or generator");
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (eat('^')) {
            Int e = parse_uint();
            if (e > 64) fail("exponent too large");
            return poly_pow(base, int(e.get_si()));
        }
        return base;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                p = p * parse_factor();
            else
                break;
        }
        return p;
    }

    Poly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = parse_term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (eat('+'))
                p = p + parse_term();
            else if (eat('-'))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

}  // namespace

Poly Poly::parse(const NumberField& f, const std::string& text) {
    Parser p(f, text);
    return p.run();
}

}  // namespace mcm
