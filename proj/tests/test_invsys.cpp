#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tatelab/invsys.hpp"

using namespace tatelab;

namespace {

FieldConfig rat_cfg() {
    FieldConfig c;
    c.alpha_q = 2;
    return c;
}

const std::vector<std::string> kVars{"T", "U", "V", "X", "Y", "Z"};

Poly P(const std::string& expr, const FieldConfig& c) { return parse_poly(expr, kVars, c); }

MarkedBasis preset_marked(const FieldConfig& c) {
    return parse_presentation(preset_presentation_text("gorenstein-cd6"), c).marked();
}

}  // namespace

TEST_CASE("contraction basics") {
    auto c = rat_cfg();
    DPElement F = apolar_form(c);
    CHECK(F.degree() == 3);
    // Z^2 has no divided-power partner of positive coefficient in F
    CHECK(contract(P("Z^2", c), F).is_zero());
    // contracting by the socle representative recovers the pairing value
    DPElement top = contract(P("T*V*X", c), F);
    REQUIRE_FALSE(top.is_zero());
    CHECK(top.terms.size() == 1);
    CHECK(top.terms.begin()->first == Monomial::one());
    CHECK(top.terms.begin()->second == c.from_long(6));
}

TEST_CASE("contraction is an action: (GH) o e = G o (H o e)") {
    auto c = rat_cfg();
    DPElement F = apolar_form(c);
    std::vector<std::string> gs{"T", "V + X", "T*V - Y*Z", "U + 2*Z", "X*Y"};
    for (const auto& g : gs)
        for (const auto& h : gs) {
            Poly G = P(g, c), H = P(h, c);
            CHECK(contract(G * H, F) == contract(G, contract(H, F)));
        }
}

TEST_CASE("every preset generator annihilates the apolar form") {
    auto c = rat_cfg();
    DPElement F = apolar_form(c);
    for (const auto& [g, mark] : preset_marked(c).gens) CHECK(contract(g, F).is_zero());
}

TEST_CASE("annihilator dimensions per degree") {
    auto c = rat_cfg();
    DPElement F = apolar_form(c);
    CHECK(annihilator_dim(F, 0, c).dim == 0);   // constants act invertibly
    CHECK(annihilator_dim(F, 1, c).dim == 0);   // 6 - 6
    CHECK(annihilator_dim(F, 2, c).dim == 15);  // 21 - 6
    CHECK(annihilator_dim(F, 3, c).dim == 55);  // 56 - 1
    CHECK(annihilator_dim(F, 4, c).dim == 126); // everything in degree 4
}

TEST_CASE("apolarity certificate accepts the preset pair") {
    auto c = rat_cfg();
    ApolarityEvidence ev = verify_apolarity(preset_marked(c), apolar_form(c), c);
    CHECK(ev.ok);
    CHECK(ev.generators_annihilate);
    CHECK(ev.first_bad_generator == -1);
    CHECK(ev.quotient_hf == std::vector<long>{1, 6, 6, 1, 0});
    CHECK(ev.hilbert_match);
    CHECK(ev.degreewise_equal);
}

TEST_CASE("apolarity certificate rejects an enlarged ideal") {
    auto c = rat_cfg();
    MarkedBasis I = preset_marked(c);
    // adjoin a standard quadric: the ideal grows past the annihilator
    Poly extra = P("T*V", c);
    I.gens.push_back({extra, Monomial::var(0) * Monomial::var(2)});
    ApolarityEvidence ev = verify_apolarity(I, apolar_form(c), c);
    CHECK_FALSE(ev.ok);
    CHECK_FALSE(ev.generators_annihilate);
}

TEST_CASE("apolarity certificate rejects the wrong form") {
    auto c = rat_cfg();
    DPElement wrong = parse_dp_form("tT^3", c);
    ApolarityEvidence ev = verify_apolarity(preset_marked(c), wrong, c);
    CHECK_FALSE(ev.ok);
}

TEST_CASE("divided-power conversion multiplies by exponent factorials") {
    auto c = rat_cfg();
    Poly f = P("T^3 + T*V*X", c);
    DPElement e = dp_from_poly(f);
    CHECK(e.terms.at(Monomial::var(0, 3)) == c.from_long(6));
    CHECK(e.terms.at(Monomial::var(0) * Monomial::var(2) * Monomial::var(3)) == c.one());
}

TEST_CASE("small characteristics are refused") {
    for (long p : {2L, 3L}) {
        FieldConfig fp;
        fp.mode = FieldMode::Prime;
        fp.p = p;
        fp.alpha_q = 5;
        CHECK_THROWS_AS(require_invsys_field(fp), ConfigError);
    }
    FieldConfig ok;
    ok.alpha_q = 2;
    CHECK_NOTHROW(require_invsys_field(ok));
    FieldConfig big;
    big.mode = FieldMode::Prime;
    big.p = 32003;
    big.alpha_q = 2;
    CHECK_NOTHROW(require_invsys_field(big));
}
