/* Multivariate polynomials with a graded reverse-lexicographic order,
 * marked-basis normal forms, and Hilbert-function computations. */
#ifndef TATELAB_POLY_HPP
#define TATELAB_POLY_HPP

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tatelab/scalar.hpp"

namespace tatelab {

inline constexpr int kMaxVars = 6;

/* Exponent tuple; unused trailing slots stay zero. */
struct Monomial {
    std::array<int, kMaxVars> e{};

    int degree() const;
    static Monomial one() { return {}; }
    static Monomial var(int i, int pow = 1);

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;        // this | o
    Monomial quotient_by(const Monomial& d) const;  // this / d

    auto operator<=>(const Monomial&) const = default;  // storage order only
};

/* Graded revlex for a given variable precedence (highest first).  On equal
 * degree the monomial with the smaller exponent at the last differing
 * position of the precedence sequence is the larger one. */
struct MonomialOrder {
    std::vector<int> precedence;

    static MonomialOrder grevlex(std::vector<int> prec);
    bool less(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    std::map<Monomial, Scalar> terms;  // storage order; no zero coefficients

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Scalar& c);
    bool is_homogeneous(int* deg = nullptr) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    Poly shifted(const Monomial& m) const;  // multiply by a monomial
    bool operator==(const Poly& o) const { return terms == o.terms; }

    std::string str(const std::vector<std::string>& names) const;
};

/* Generators with their marked leading monomials. */
struct MarkedBasis {
    std::vector<std::pair<Poly, Monomial>> gens;

    void validate_marks(const MonomialOrder& ord) const;  // throws MathError
    bool all_monomial() const;
};

Monomial leading_term(const Poly& f, const MonomialOrder& ord);

/* Reduce the ord-largest reducible term first; deterministic. */
Poly normal_form(Poly f, const MarkedBasis& G, const MonomialOrder& ord);

std::vector<Monomial> monomials_of_degree(int nvars, int d);

/* Entry d = number of degree-d monomials divisible by no generator of J. */
std::vector<long> hilbert_function_monomial_quotient(const MarkedBasis& J, int nvars,
                                                     int maxdeg);

struct GroebnerEvidence {
    bool ok = false;
    int first_mismatch = -1;           // degree of first disagreement, or -1
    std::vector<long> standard_counts;  // monomials outside the marked leads
    std::vector<long> quotient_dims;    // dim (P/I)_d by row reduction
};

/* Certifies that the marked leads generate the initial ideal by comparing
 * the standard-monomial count against dim (P/I)_d for every d <= maxdeg. */
GroebnerEvidence groebner_check_by_hilbert(const MarkedBasis& I, int nvars, int maxdeg,
                                           const FieldConfig& cfg);

struct QuotientPresentation {
    std::vector<std::string> vars;
    MonomialOrder order;
    std::string order_text;
    std::vector<Poly> rels;

    int nvars() const { return static_cast<int>(vars.size()); }
    MarkedBasis marked() const;  // marks = leading terms under `order`
};

/* Expression grammar: + - * ^ and parentheses over integer or a/b
 * literals, the symbol `alpha`, and the declared variable names. */
Poly parse_poly(const std::string& expr, const std::vector<std::string>& vars,
                const FieldConfig& cfg);

/* Text format: `vars: T U V X Y Z`, `order: grevlex Z>U>Y>X>T>V`, one
 * `rel: ...` line per generator; `#` starts a comment line. */
QuotientPresentation parse_presentation(const std::string& text, const FieldConfig& cfg);

/* Built-in ring presentations; currently `gorenstein-cd6`. */
std::string preset_presentation_text(const std::string& name);

}  // namespace tatelab

#endif
