/* Finite-dimensional graded commutative algebras presented as quotients
 * of a polynomial ring, materialized through structure constants. */
#ifndef TATELAB_ALGEBRA_HPP
#define TATELAB_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "tatelab/linalg.hpp"
#include "tatelab/poly.hpp"

namespace tatelab {

class GradedAlgebra;

class AlgebraElement {
public:
    AlgebraElement(const GradedAlgebra* alg, SVec coeffs)
        : alg_(alg), c_(std::move(coeffs)) {}

    const SVec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& s) const;
    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

private:
    const GradedAlgebra* alg_;
    SVec c_;

    void check_same(const AlgebraElement& o) const;
    friend class GradedAlgebra;
};

/* Immutable after build(); all queries are pure. */
class GradedAlgebra {
public:
    /* Certifies the marked basis by the Hilbert-function comparison, then
     * tabulates every structure constant via normal forms.  Throws
     * MathError naming the first mismatched degree on certification
     * failure, or if the quotient is not Artinian within degree_cap. */
    static GradedAlgebra build(const QuotientPresentation& pres, const FieldConfig& cfg,
                               int degree_cap = 20);

    int dim() const { return static_cast<int>(basis_.size()); }
    int top_degree() const { return top_degree_; }
    const FieldConfig& field() const { return cfg_; }
    const std::vector<std::string>& var_names() const { return pres_.vars; }
    int nvars() const { return static_cast<int>(pres_.vars.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }
    int basis_degree(int i) const { return basis_[i].degree(); }
    std::vector<long> hilbert_function() const;

    int unit_index() const { return unit_index_; }
    AlgebraElement one() const;
    AlgebraElement zero() const { return AlgebraElement(this, {}); }
    AlgebraElement basis_element(int i) const;
    /* Residue class of variable i (an arbitrary algebra element in
     * general, not necessarily a basis monomial). */
    AlgebraElement generator(int i) const;
    AlgebraElement from_poly(const Poly& f) const;
    AlgebraElement parse(const std::string& expr) const;

    const SVec& product(int i, int j) const { return sc_[i][j]; }
    SVec multiply(const SVec& a, const SVec& b) const;

    /* dim x dim matrix of left multiplication by basis element i. */
    const SparseMat& left_mult(int i) const { return mult_[i]; }
    SparseMat left_mult_element(const SVec& a) const;

    /* Exhaustive (a*b)*c == a*(b*c) sweep over all basis triples. */
    bool check_associativity() const;

    /* Basis of { a : a*v = 0 for every variable class v }. */
    std::vector<SVec> socle() const;
    bool is_gorenstein() const { return socle().size() == 1; }

    const QuotientPresentation& presentation() const { return pres_; }
    const MarkedBasis& marked_basis() const { return marked_; }
    int basis_index(const Monomial& m) const;  // -1 if not standard

private:
    GradedAlgebra() = default;

    FieldConfig cfg_;
    QuotientPresentation pres_;
    MarkedBasis marked_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int> index_;
    int unit_index_ = -1;
    int top_degree_ = 0;
    std::vector<std::vector<SVec>> sc_;  // sc_[i][j] = coords of basis_i*basis_j
    std::vector<SparseMat> mult_;

    SVec coords(const Poly& reduced) const;
};

}  // namespace tatelab

#endif
