#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tatelab/poly.hpp"

using namespace tatelab;

namespace {

FieldConfig cfg() {
    FieldConfig c;
    c.alpha_q = 2;
    return c;
}

QuotientPresentation preset(const FieldConfig& c) {
    return parse_presentation(preset_presentation_text("gorenstein-cd6"), c);
}

Poly P(const QuotientPresentation& pres, const std::string& expr, const FieldConfig& c) {
    return parse_poly(expr, pres.vars, c);
}

}  // namespace

TEST_CASE("monomial basics") {
    Monomial t = Monomial::var(0), v = Monomial::var(2), tv = t * v;
    CHECK(tv.degree() == 2);
    CHECK(t.divides(tv));
    CHECK_FALSE(tv.divides(t));
    CHECK(tv.quotient_by(t) == v);
    CHECK(Monomial::one().degree() == 0);
    CHECK(Monomial::var(3, 2).degree() == 2);
}

TEST_CASE("grevlex order on the preset precedence") {
    auto c = cfg();
    auto pres = preset(c);
    const MonomialOrder& ord = pres.order;
    // degree dominates
    CHECK(ord.less(Monomial::var(0), Monomial::var(0) * Monomial::var(2)));
    // leading terms of sample relations under the preset order
    CHECK(leading_term(P(pres, "U*Z - T*X - alpha*U*V", c), ord) ==
          Monomial::var(1) * Monomial::var(5));
    CHECK(leading_term(P(pres, "X^2 - T*X - T*V", c), ord) == Monomial::var(3, 2));
    CHECK(leading_term(P(pres, "V", c), ord) == Monomial::var(2));
}

TEST_CASE("polynomial arithmetic and parsing") {
    auto c = cfg();
    auto pres = preset(c);
    Poly f = P(pres, "(T + U)^2", c);
    Poly g = P(pres, "T^2 + 2*T*U + U^2", c);
    CHECK(f == g);
    CHECK(P(pres, "alpha*T - 2*T", c).is_zero());
    CHECK(P(pres, "1/2 * T + 1/2 * T", c) == P(pres, "T", c));
    int d = 0;
    CHECK(f.is_homogeneous(&d));
    CHECK(d == 2);
    CHECK_FALSE(P(pres, "T + T*U", c).is_homogeneous());
    CHECK_THROWS(P(pres, "W + 1", c));  // unknown symbol
}

TEST_CASE("normal forms against the marked preset basis") {
    auto c = cfg();
    auto pres = preset(c);
    MarkedBasis G = pres.marked();
    const MonomialOrder& ord = pres.order;
    CHECK_NOTHROW(G.validate_marks(ord));
    // UZ reduces to TX + alpha*UV
    CHECK(normal_form(P(pres, "U*Z", c), G, ord) == P(pres, "T*X + 2*U*V", c));
    // standard monomials are fixed
    CHECK(normal_form(P(pres, "T*V", c), G, ord) == P(pres, "T*V", c));
    // degree-3 collapse into the one-dimensional socle or zero
    CHECK(normal_form(P(pres, "T^2*V", c), G, ord).is_zero());
    Poly s = normal_form(P(pres, "T*V*X", c), G, ord);
    CHECK_FALSE(s.is_zero());
    // idempotence and multiplicativity of reduction
    for (const std::string& e : {"U*Z*X", "Z^2", "T*U*V + X*Y", "(T+V)*(X+Z)"}) {
        Poly f = P(pres, e, c);
        Poly nf = normal_form(f, G, ord);
        CHECK(normal_form(nf, G, ord) == nf);
    }
    Poly a = P(pres, "T + U + V", c), b = P(pres, "X + Y + Z", c);
    CHECK(normal_form(a * b, G, ord) ==
          normal_form(normal_form(a, G, ord) * normal_form(b, G, ord), G, ord));
}

TEST_CASE("hilbert function of monomial quotients") {
    // the initial ideal of the preset: counts must give 1,6,6,1,0,...
    auto c = cfg();
    auto pres = preset(c);
    MarkedBasis leads;
    for (const auto& [g, m] : pres.marked().gens) {
        Poly mono;
        mono.add_term(m, c.one());
        leads.gens.push_back({mono, m});
    }
    auto hf = hilbert_function_monomial_quotient(leads, 6, 5);
    CHECK(hf == std::vector<long>{1, 6, 6, 1, 0, 0});

    MarkedBasis empty;
    auto free_hf = hilbert_function_monomial_quotient(empty, 6, 2);
    CHECK(free_hf == std::vector<long>{1, 6, 21});

    MarkedBasis all_quadrics;
    for (const Monomial& m : monomials_of_degree(6, 2)) {
        Poly mono;
        mono.add_term(m, c.one());
        all_quadrics.gens.push_back({mono, m});
    }
    auto cut = hilbert_function_monomial_quotient(all_quadrics, 6, 3);
    CHECK(cut == std::vector<long>{1, 6, 0, 0});
}

TEST_CASE("initial-ideal certificate accepts the preset and rejects a truncation") {
    auto c = cfg();
    auto pres = preset(c);
    GroebnerEvidence ev = groebner_check_by_hilbert(pres.marked(), 6, 6, c);
    CHECK(ev.ok);
    CHECK(ev.first_mismatch == -1);
    CHECK(ev.standard_counts == ev.quotient_dims);
    CHECK(ev.quotient_dims[0] == 1);
    CHECK(ev.quotient_dims[1] == 6);
    CHECK(ev.quotient_dims[2] == 6);
    CHECK(ev.quotient_dims[3] == 1);

    MarkedBasis trunc = pres.marked();
    trunc.gens.pop_back();
    GroebnerEvidence bad = groebner_check_by_hilbert(trunc, 6, 6, c);
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_mismatch >= 3);  // 14 independent quadrics still agree in degree 2
    CHECK(bad.standard_counts[2] == 7);
    CHECK(bad.quotient_dims[2] == 7);
}

TEST_CASE("initial-ideal certificate rejects marks that miss an S-polynomial") {
    auto c = cfg();
    // (T^2 - UV, TV) contains UV^2, which no mark divides
    MarkedBasis G;
    Poly f, g;
    f.add_term(Monomial::var(0, 2), c.one());
    f.add_term(Monomial::var(1) * Monomial::var(2), -c.one());
    g.add_term(Monomial::var(0) * Monomial::var(2), c.one());
    G.gens.push_back({f, Monomial::var(0, 2)});
    G.gens.push_back({g, Monomial::var(0) * Monomial::var(2)});
    GroebnerEvidence ev = groebner_check_by_hilbert(G, 6, 4, c);
    CHECK_FALSE(ev.ok);
    CHECK(ev.first_mismatch == 3);
    CHECK(ev.standard_counts[3] == 45);
    CHECK(ev.quotient_dims[3] == 44);
}

TEST_CASE("the fourteen standard monomials") {
    auto c = cfg();
    auto pres = preset(c);
    std::vector<Monomial> std_monos;
    for (int d = 0; d <= 3; ++d)
        for (const Monomial& m : monomials_of_degree(6, d)) {
            bool divisible = false;
            for (const auto& [g, lead] : pres.marked().gens)
                if (lead.divides(m)) divisible = true;
            if (!divisible) std_monos.push_back(m);
        }
    CHECK(std_monos.size() == 14);
    auto has = [&](std::initializer_list<int> vars) {
        Monomial m;
        for (int v : vars) m = m * Monomial::var(v);
        return std::find(std_monos.begin(), std_monos.end(), m) != std_monos.end();
    };
    CHECK(has({}));                        // 1
    for (int i = 0; i < 6; ++i) CHECK(has({i}));
    CHECK(has({0, 2}));  // tv
    CHECK(has({1, 2}));  // uv
    CHECK(has({2, 3}));  // vx
    CHECK(has({2, 4}));  // vy
    CHECK(has({2, 5}));  // vz
    CHECK(has({0, 3}));  // tx
    CHECK(has({0, 2, 3}));  // tvx spans the socle degree
}

TEST_CASE("preset text parses with fifteen quadratic relations") {
    auto c = cfg();
    auto pres = preset(c);
    CHECK(pres.vars == std::vector<std::string>{"T", "U", "V", "X", "Y", "Z"});
    CHECK(pres.rels.size() == 15);
    for (const Poly& f : pres.rels) {
        int d = 0;
        CHECK(f.is_homogeneous(&d));
        CHECK(d == 2);
    }
    CHECK_THROWS(preset_presentation_text("no-such-preset"));
}
