/* Divided-power dual algebra in six variables, contraction by
 * polynomials, and the Macaulay inverse-system Gorenstein certificate. */
#ifndef TATELAB_INVSYS_HPP
#define TATELAB_INVSYS_HPP

#include <string>
#include <vector>

#include "tatelab/linalg.hpp"
#include "tatelab/poly.hpp"

namespace tatelab {

/* Element of the graded dual, written in the divided-power basis
 * T^[m_T]...Z^[m_Z]; same exponent-tuple machinery as Poly but with the
 * contraction action instead of multiplication. */
struct DPElement {
    std::map<Monomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Scalar& c);
    bool operator==(const DPElement& o) const { return terms == o.terms; }
    int degree() const;  // common degree; throws if inhomogeneous or zero
};

/* Refuses characteristic 2 and 3, where the divided-power conversion
 * coefficients (up to 3!) are not invertible. */
void require_invsys_field(const FieldConfig& cfg);

/* Ordinary polynomial in the dual variables -> divided-power basis
 * (coefficient of each monomial is multiplied by the product of the
 * factorials of its exponents). */
DPElement dp_from_poly(const Poly& f);

/* Bilinear extension of (T^M) o T^[N] = T^[N-M] when M <= N, else 0. */
DPElement contract(const Poly& g, const DPElement& e);

/* The cubic form whose annihilator recovers the preset ring's ideal;
 * variables named tT,tU,tV,tX,tY,tZ in the defining expression. */
DPElement apolar_form(const FieldConfig& cfg);
DPElement parse_dp_form(const std::string& expr, const FieldConfig& cfg);

struct AnnihilatorSlice {
    long dim = 0;
    std::vector<SVec> basis;             // coordinates in monomials_of_degree(6, d)
};

/* Kernel of the contraction map P_d -> D_{deg F - d}. */
AnnihilatorSlice annihilator_dim(const DPElement& F, int d, const FieldConfig& cfg);

struct ApolarityEvidence {
    bool ok = false;
    bool generators_annihilate = false;
    int first_bad_generator = -1;
    std::vector<long> quotient_hf;       // dim (P/I_F)_d for d = 0..4
    std::vector<long> ideal_dims;        // dim I_d from the marked basis
    std::vector<long> annihilator_dims;  // dim (I_F)_d
    bool hilbert_match = false;
    bool degreewise_equal = false;       // I_d == (I_F)_d for d <= 3
};

/* Certifies I = Ann(F) in degrees <= 3: every generator contracts F to
 * zero and the two degreewise dimensions agree, forcing the quotient
 * Hilbert function (1,6,6,1). */
ApolarityEvidence verify_apolarity(const MarkedBasis& I, const DPElement& F,
                                   const FieldConfig& cfg);

}  // namespace tatelab

#endif
