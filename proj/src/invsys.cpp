#include "tatelab/invsys.hpp"

#include <algorithm>

namespace tatelab {

void DPElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int DPElement::degree() const {
    if (terms.empty()) throw MathError("degree of the zero dual element");
    int d = terms.begin()->first.degree();
    for (const auto& [m, c] : terms)
        if (m.degree() != d) throw MathError("inhomogeneous dual element");
    return d;
}

void require_invsys_field(const FieldConfig& cfg) {
    if (cfg.mode == FieldMode::Prime && (cfg.p == 2 || cfg.p == 3))
        throw ConfigError("inverse-system computations need 2 and 3 invertible; "
                          "characteristic " + std::to_string(cfg.p) + " refused");
}

DPElement dp_from_poly(const Poly& f) {
    DPElement e;
    for (const auto& [m, c] : f.terms) {
        long fact = 1;
        for (int i = 0; i < kMaxVars; ++i)
            for (int j = 2; j <= m.e[i]; ++j) fact *= j;
        Scalar fs = c.mode() == FieldMode::Prime ? Scalar::fp(fact, c.modulus())
                                                 : Scalar::rat(fact);
        e.add_term(m, c * fs);
    }
    return e;
}

DPElement contract(const Poly& g, const DPElement& e) {
    DPElement out;
    for (const auto& [gm, gc] : g.terms) {
        for (const auto& [em, ec] : e.terms) {
            if (!gm.divides(em)) continue;
            out.add_term(em.quotient_by(gm), gc * ec);
        }
    }
    return out;
}

DPElement parse_dp_form(const std::string& expr, const FieldConfig& cfg) {
    require_invsys_field(cfg);
    static const std::vector<std::string> dual_vars = {"tT", "tU", "tV", "tX", "tY", "tZ"};
    return dp_from_poly(parse_poly(expr, dual_vars, cfg));
}

DPElement apolar_form(const FieldConfig& cfg) {
    return parse_dp_form(
        "-3*tZ*tY^2 + tX^3 - 3*tZ*tT^2 + 3*tY*tT^2 + 6*tZ*tU*tV + 3*tY^2*tV"
        " + 3*tX^2*tV + 6*tX*tT*tV - 3*alpha*tZ*(tX+tT)^2",
        cfg);
}

AnnihilatorSlice annihilator_dim(const DPElement& F, int d, const FieldConfig& cfg) {
    require_invsys_field(cfg);
    int fdeg = F.degree();
    std::vector<Monomial> pd = monomials_of_degree(kMaxVars, d);
    AnnihilatorSlice out;
    if (d > fdeg) {
        out.dim = static_cast<long>(pd.size());
        for (size_t i = 0; i < pd.size(); ++i)
            out.basis.push_back(svec_unit(static_cast<int>(i), cfg.one()));
        return out;
    }
    std::vector<Monomial> target = monomials_of_degree(kMaxVars, fdeg - d);
    std::map<Monomial, int> tidx;
    for (size_t i = 0; i < target.size(); ++i) tidx[target[i]] = static_cast<int>(i);

    // kernel of the transpose-free formulation: rows = target coords,
    // columns = P_d monomials
    SparseMat m(static_cast<int>(target.size()), static_cast<int>(pd.size()));
    for (size_t j = 0; j < pd.size(); ++j) {
        Poly g;
        g.add_term(pd[j], cfg.one());
        DPElement gF = contract(g, F);
        for (const auto& [tm, c] : gF.terms) m.add(tidx.at(tm), static_cast<int>(j), c);
    }
    out.basis = kernel_basis(m, cfg.one());
    out.dim = static_cast<long>(out.basis.size());
    return out;
}

ApolarityEvidence verify_apolarity(const MarkedBasis& I, const DPElement& F,
                                   const FieldConfig& cfg) {
    require_invsys_field(cfg);
    ApolarityEvidence ev;
    ev.generators_annihilate = true;
    for (size_t i = 0; i < I.gens.size(); ++i) {
        if (!contract(I.gens[i].first, F).is_zero()) {
            ev.generators_annihilate = false;
            ev.first_bad_generator = static_cast<int>(i);
            break;
        }
    }

    int fdeg = F.degree();
    ev.degreewise_equal = true;
    for (int d = 0; d <= fdeg + 1; ++d) {
        std::vector<Monomial> pd = monomials_of_degree(kMaxVars, d);
        std::map<Monomial, int> idx;
        for (size_t i = 0; i < pd.size(); ++i) idx[pd[i]] = static_cast<int>(i);

        long ann = annihilator_dim(F, d, cfg).dim;
        ev.annihilator_dims.push_back(ann);
        ev.quotient_hf.push_back(static_cast<long>(pd.size()) - ann);

        std::vector<SVec> rows;
        for (const auto& [g, mark] : I.gens) {
            int gd = 0;
            if (!g.is_homogeneous(&gd)) throw MathError("inhomogeneous ideal generator");
            if (gd > d) continue;
            for (const Monomial& c : monomials_of_degree(kMaxVars, d - gd)) {
                Poly gc = g.shifted(c);
                SVec row;
                for (const auto& [m, v] : gc.terms) row.emplace_back(idx.at(m), v);
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
        }
        SparseMat mat(static_cast<int>(rows.size()), static_cast<int>(pd.size()));
        mat.rows = std::move(rows);
        long idim = rank(mat);
        ev.ideal_dims.push_back(idim);
        if (d <= fdeg && idim != ann) ev.degreewise_equal = false;
    }

    std::vector<long> expected = {1, 6, 6, 1, 0};
    ev.hilbert_match =
        ev.quotient_hf.size() == expected.size() &&
        std::equal(expected.begin(), expected.end(), ev.quotient_hf.begin());
    ev.ok = ev.generators_annihilate && ev.hilbert_match && ev.degreewise_equal;
    return ev;
}

}  // namespace tatelab
