#include "tatelab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tatelab/linalg.hpp"

namespace tatelab {

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Monomial Monomial::var(int i, int pow) {
    Monomial m;
    m.e[i] = pow;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = e[i] + o.e[i];
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = e[i] - d.e[i];
        if (m.e[i] < 0) throw MathError("monomial quotient with negative exponent");
    }
    return m;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> prec) {
    MonomialOrder o;
    o.precedence = std::move(prec);
    return o;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
        int d = a.e[*it] - b.e[*it];
        if (d != 0) return d > 0;  // larger exponent at the least position loses
    }
    return false;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool Poly::is_homogeneous(int* deg) const {
    if (terms.empty()) return true;
    int d = terms.begin()->first.degree();
    for (const auto& [m, c] : terms)
        if (m.degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r;
    for (const auto& [m0, v] : terms) r.terms.emplace(m0 * m, v);
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending degree, then storage order, for readability
    std::vector<const std::pair<const Monomial, Scalar>*> ts;
    for (const auto& t : terms) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return a->first.degree() > b->first.degree();
    });
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        if (first && cs[0] == '-') os << "-";
        std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
        bool wrote = false;
        if (mag != "1" || m.degree() == 0) {
            os << mag;
            wrote = true;
        }
        for (size_t i = 0; i < names.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (wrote) os << "*";
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

void MarkedBasis::validate_marks(const MonomialOrder& ord) const {
    for (const auto& [g, mark] : gens) {
        if (g.is_zero()) throw MathError("zero generator in marked basis");
        if (leading_term(g, ord) != mark)
            throw MathError("marked monomial is not the leading term");
    }
}

bool MarkedBasis::all_monomial() const {
    for (const auto& [g, mark] : gens)
        if (g.terms.size() != 1) return false;
    return true;
}

Monomial leading_term(const Poly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw MathError("leading term of the zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms)
        if (!best || ord.less(*best, m)) best = &m;
    return *best;
}

Poly normal_form(Poly f, const MarkedBasis& G, const MonomialOrder& ord) {
    while (true) {
        const Monomial* target = nullptr;
        const std::pair<Poly, Monomial>* gen = nullptr;
        for (const auto& [m, c] : f.terms) {
            if (target && !ord.less(*target, m)) continue;
            for (const auto& g : G.gens) {
                if (g.second.divides(m)) {
                    target = &m;
                    gen = &g;
                    break;
                }
            }
        }
        if (!target) return f;
        Scalar c = f.terms.at(*target);
        Scalar lc = gen->first.terms.at(gen->second);
        f -= gen->first.shifted(target->quotient_by(gen->second)).scaled(c / lc);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur.e[var] = rem;
            out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[var] = k;
            self(self, var + 1, rem - k);
        }
        cur.e[var] = 0;
    };
    if (nvars <= 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<long> hilbert_function_monomial_quotient(const MarkedBasis& J, int nvars,
                                                     int maxdeg) {
    if (!J.all_monomial()) throw MathError("Hilbert function requires monomial generators");
    std::vector<long> hf;
    for (int d = 0; d <= maxdeg; ++d) {
        long n = 0;
        for (const Monomial& m : monomials_of_degree(nvars, d)) {
            bool in_ideal = false;
            for (const auto& [g, mark] : J.gens)
                if (mark.divides(m)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) ++n;
        }
        hf.push_back(n);
    }
    return hf;
}

GroebnerEvidence groebner_check_by_hilbert(const MarkedBasis& I, int nvars, int maxdeg,
                                           const FieldConfig& cfg) {
    GroebnerEvidence ev;
    ev.ok = true;
    for (int d = 0; d <= maxdeg; ++d) {
        std::vector<Monomial> mons = monomials_of_degree(nvars, d);
        std::map<Monomial, int> idx;
        for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = static_cast<int>(i);

        long standard = 0;
        for (const Monomial& m : mons) {
            bool led = false;
            for (const auto& [g, mark] : I.gens)
                if (mark.divides(m)) {
                    led = true;
                    break;
                }
            if (!led) ++standard;
        }
        ev.standard_counts.push_back(standard);

        // span of degree-d multiples of the generators
        std::vector<SVec> rows;
        for (const auto& [g, mark] : I.gens) {
            int gd = 0;
            if (!g.is_homogeneous(&gd)) throw MathError("inhomogeneous ideal generator");
            if (gd > d) continue;
            for (const Monomial& c : monomials_of_degree(nvars, d - gd)) {
                Poly gc = g.shifted(c);
                SVec row;
                for (const auto& [m, v] : gc.terms) row.emplace_back(idx.at(m), v);
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
        }
        SparseMat mat(static_cast<int>(rows.size()), static_cast<int>(mons.size()));
        mat.rows = std::move(rows);
        long qdim = static_cast<long>(mons.size()) - rank(mat);
        ev.quotient_dims.push_back(qdim);
        if (qdim != standard && ev.ok) {
            ev.ok = false;
            ev.first_mismatch = d;
        }
    }
    return ev;
}

MarkedBasis QuotientPresentation::marked() const {
    MarkedBasis mb;
    for (const Poly& g : rels) mb.gens.emplace_back(g, leading_term(g, order));
    mb.validate_marks(order);
    return mb;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;
    const FieldConfig& cfg;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ConfigError("parse error at position " + std::to_string(pos) + " in \"" + s +
                          "\": " + what);
    }

    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Poly constant(const Scalar& c) {
        Poly p;
        p.add_term(Monomial::one(), c);
        return p;
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                return constant(cfg.from_mpq(mpq_class(num, den)));
            }
            return constant(cfg.from_long(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "alpha") return constant(cfg.alpha());
            for (size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == name) {
                    Poly p;
                    p.add_term(Monomial::var(static_cast<int>(i)), cfg.one());
                    return p;
                }
            }
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected character");
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            Poly p;
            p.add_term(Monomial::one(), cfg.one());
            for (long i = 0; i < e; ++i) p = p * base;
            return p;
        }
        return base;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Poly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = term();
        if (neg) p = p.scaled(-cfg.one());
        while (true) {
            skip();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
            bool minus = s[pos] == '-';
            ++pos;
            Poly t = term();
            if (minus)
                p -= t;
            else
                p += t;
        }
        return p;
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Poly parse_poly(const std::string& expr, const std::vector<std::string>& vars,
                const FieldConfig& cfg) {
    Parser p{expr, 0, vars, cfg};
    Poly out = p.expr();
    p.skip();
    if (p.pos != expr.size()) p.fail("trailing input");
    return out;
}

QuotientPresentation parse_presentation(const std::string& text, const FieldConfig& cfg) {
    QuotientPresentation pres;
    std::vector<std::string> rel_lines;
    std::string order_spec;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        std::string val = colon == std::string::npos ? "" : line.substr(colon + 1);
        if (key.empty()) {
            if (!split_ws(line).empty()) throw ConfigError("unrecognized line: " + line);
            continue;
        }
        if (key == "vars")
            pres.vars = split_ws(val);
        else if (key == "order")
            order_spec = val;
        else if (key == "rel")
            rel_lines.push_back(val);
        else
            throw ConfigError("unknown presentation key '" + key + "'");
    }
    if (pres.vars.empty()) throw ConfigError("presentation has no vars line");
    if (pres.nvars() > kMaxVars)
        throw ConfigError("at most " + std::to_string(kMaxVars) + " variables supported");

    std::vector<std::string> otoks = split_ws(order_spec);
    std::vector<int> prec;
    if (otoks.empty()) {
        for (int i = 0; i < pres.nvars(); ++i) prec.push_back(i);
    } else {
        if (otoks[0] != "grevlex")
            throw ConfigError("unsupported order kind '" + (otoks.empty() ? "" : otoks[0]) + "'");
        std::string chain;
        for (size_t i = 1; i < otoks.size(); ++i) chain += otoks[i];
        std::vector<std::string> names;
        std::string cur;
        for (char c : chain) {
            if (c == '>') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) names.push_back(cur);
        for (const std::string& n : names) {
            auto it = std::find(pres.vars.begin(), pres.vars.end(), n);
            if (it == pres.vars.end())
                throw ConfigError("order names unknown variable '" + n + "'");
            prec.push_back(static_cast<int>(it - pres.vars.begin()));
        }
        if (static_cast<int>(prec.size()) != pres.nvars())
            throw ConfigError("order must list every variable exactly once");
    }
    pres.order = MonomialOrder::grevlex(prec);
    pres.order_text = order_spec;

    for (const std::string& r : rel_lines) {
        Poly g = parse_poly(r, pres.vars, cfg);
        if (g.is_zero()) throw ConfigError("zero relation: " + r);
        if (!g.is_homogeneous()) throw ConfigError("inhomogeneous relation: " + r);
        pres.rels.push_back(std::move(g));
    }
    return pres;
}

std::string preset_presentation_text(const std::string& name) {
    if (name == "gorenstein-cd6") {
        return "vars: T U V X Y Z\n"
               "order: grevlex Z>U>Y>X>T>V\n"
               "rel: Z^2\n"
               "rel: U*Z - T*X - alpha*U*V\n"
               "rel: U^2\n"
               "rel: Y*Z + V*Y\n"
               "rel: U*Y\n"
               "rel: Y^2 - T*X - (alpha-1)*U*V\n"
               "rel: X*Z + alpha*V*X\n"
               "rel: U*X\n"
               "rel: X*Y\n"
               "rel: X^2 - T*X - T*V\n"
               "rel: T*Z + T*Y + alpha*V*X\n"
               "rel: T*U\n"
               "rel: T*Y - V*X + T*V\n"
               "rel: T^2 + (alpha+1)*U*V - V*Y\n"
               "rel: V^2\n";
    }
    throw ConfigError("unknown ring preset '" + name + "'");
}

}  // namespace tatelab
