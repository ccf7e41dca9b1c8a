#include "tatelab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tatelab {

void AlgebraElement::check_same(const AlgebraElement& o) const {
    if (alg_ != o.alg_) throw MathError("elements of different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same(o);
    return AlgebraElement(alg_, svec_axpy(c_, alg_->field().one(), o.c_));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same(o);
    return AlgebraElement(alg_, svec_axpy(c_, -alg_->field().one(), o.c_));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(o);
    return AlgebraElement(alg_, alg_->multiply(c_, o.c_));
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    SVec c = c_;
    svec_scale(c, s);
    return AlgebraElement(alg_, std::move(c));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::string AlgebraElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : c_) {
        std::string cs = v.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        if (first && cs[0] == '-') os << "-";
        std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
        const Monomial& m = alg_->basis()[i];
        if (mag != "1" || m.degree() == 0) os << mag << (m.degree() ? "*" : "");
        bool wrote = false;
        for (size_t j = 0; j < alg_->var_names().size(); ++j) {
            if (m.e[j] == 0) continue;
            if (wrote) os << "*";
            std::string n = alg_->var_names()[j];
            std::transform(n.begin(), n.end(), n.begin(),
                           [](unsigned char ch) { return std::tolower(ch); });
            os << n;
            if (m.e[j] > 1) os << "^" << m.e[j];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

GradedAlgebra GradedAlgebra::build(const QuotientPresentation& pres, const FieldConfig& cfg,
                                   int degree_cap) {
    GradedAlgebra A;
    A.cfg_ = cfg;
    A.pres_ = pres;
    A.marked_ = pres.marked();
    int n = pres.nvars();

    // standard monomials degree by degree; Artinian iff the count hits zero
    int top = -1;
    std::vector<std::vector<Monomial>> std_by_deg;
    for (int d = 0; d <= degree_cap + 1; ++d) {
        std::vector<Monomial> std_d;
        for (const Monomial& m : monomials_of_degree(n, d)) {
            bool led = false;
            for (const auto& [g, mark] : A.marked_.gens)
                if (mark.divides(m)) {
                    led = true;
                    break;
                }
            if (!led) std_d.push_back(m);
        }
        if (std_d.empty()) {
            top = d - 1;
            break;
        }
        std_by_deg.push_back(std::move(std_d));
    }
    if (top < 0)
        throw MathError("quotient is not Artinian within degree " +
                        std::to_string(degree_cap));
    A.top_degree_ = top;

    GroebnerEvidence ev = groebner_check_by_hilbert(A.marked_, n, top + 1, cfg);
    if (!ev.ok)
        throw MathError("marked leads do not generate the initial ideal: "
                        "standard-monomial count " +
                        std::to_string(ev.standard_counts[ev.first_mismatch]) +
                        " != quotient dimension " +
                        std::to_string(ev.quotient_dims[ev.first_mismatch]) +
                        " in degree " + std::to_string(ev.first_mismatch));

    for (const auto& level : std_by_deg)
        for (const Monomial& m : level) {
            A.index_[m] = static_cast<int>(A.basis_.size());
            A.basis_.push_back(m);
        }
    A.unit_index_ = A.index_.at(Monomial::one());

    int dim = A.dim();
    A.sc_.assign(dim, std::vector<SVec>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            Poly p;
            p.add_term(A.basis_[i] * A.basis_[j], cfg.one());
            SVec v = A.coords(normal_form(p, A.marked_, pres.order));
            int dij = A.basis_[i].degree() + A.basis_[j].degree();
            for (const auto& [b, c] : v)
                if (A.basis_[b].degree() != dij)
                    throw MathError("structure constant violates the grading");
            A.sc_[i][j] = v;
            A.sc_[j][i] = std::move(v);
        }
    }
    A.mult_.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        SparseMat m(dim, dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [b, c] : A.sc_[i][j]) m.add(b, j, c);
        A.mult_.push_back(std::move(m));
    }
    return A;
}

SVec GradedAlgebra::coords(const Poly& reduced) const {
    SVec v;
    for (const auto& [m, c] : reduced.terms) {
        auto it = index_.find(m);
        if (it == index_.end()) throw MathError("non-standard monomial in reduced form");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::vector<long> GradedAlgebra::hilbert_function() const {
    std::vector<long> hf(top_degree_ + 1, 0);
    for (const Monomial& m : basis_) ++hf[m.degree()];
    return hf;
}

AlgebraElement GradedAlgebra::one() const { return basis_element(unit_index_); }

AlgebraElement GradedAlgebra::basis_element(int i) const {
    return AlgebraElement(this, svec_unit(i, cfg_.one()));
}

AlgebraElement GradedAlgebra::generator(int i) const {
    Poly p;
    p.add_term(Monomial::var(i), cfg_.one());
    return from_poly(p);
}

AlgebraElement GradedAlgebra::from_poly(const Poly& f) const {
    return AlgebraElement(this, coords(normal_form(f, marked_, pres_.order)));
}

AlgebraElement GradedAlgebra::parse(const std::string& expr) const {
    return from_poly(parse_poly(expr, pres_.vars, cfg_));
}

SVec GradedAlgebra::multiply(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) out = svec_axpy(out, ci * cj, sc_[i][j]);
    return out;
}

SparseMat GradedAlgebra::left_mult_element(const SVec& a) const {
    SparseMat m(dim(), dim());
    for (const auto& [i, c] : a)
        for (int r = 0; r < dim(); ++r)
            for (const auto& [col, v] : mult_[i].rows[r]) m.add(r, col, c * v);
    return m;
}

bool GradedAlgebra::check_associativity() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SVec& ij = sc_[i][j];
            for (int l = 0; l < n; ++l) {
                SVec left;  // (i*j)*l
                for (const auto& [m, c] : ij) left = svec_axpy(left, c, sc_[m][l]);
                SVec right;  // i*(j*l)
                for (const auto& [m, c] : sc_[j][l]) right = svec_axpy(right, c, sc_[i][m]);
                if (left != right) return false;
            }
        }
    return true;
}

std::vector<SVec> GradedAlgebra::socle() const {
    int n = dim();
    SparseMat stacked(n * nvars(), n);
    for (int g = 0; g < nvars(); ++g) {
        SparseMat mg = left_mult_element(generator(g).coeffs());
        for (int r = 0; r < n; ++r) stacked.rows[g * n + r] = std::move(mg.rows[r]);
    }
    return kernel_basis(stacked, cfg_.one());
}

int GradedAlgebra::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace tatelab
