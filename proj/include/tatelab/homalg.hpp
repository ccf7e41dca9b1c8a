/* Free modules and homogeneous matrices over a graded Artinian algebra,
 * complexes, minimal free resolutions, complete resolutions, Ext/Tor and
 * Tate (co)homology, Betti and Bass numbers. */
#ifndef TATELAB_HOMALG_HPP
#define TATELAB_HOMALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatelab/algebra.hpp"

namespace tatelab {

struct FreeModule {
    std::vector<int> twists;  // internal degree of each generator
    int rank() const { return static_cast<int>(twists.size()); }
};

/* Homogeneous matrix of algebra elements: column c maps the source
 * generator of degree twists_src[c] into the target; entry (r,c) is
 * homogeneous of degree twists_src[c] - twists_tgt[r] or zero. */
struct RMatrix {
    FreeModule tgt, src;
    std::vector<std::vector<SVec>> ent;  // ent[r][c], algebra coordinates

    static RMatrix zero(FreeModule tgt, FreeModule src);
    void validate(const GradedAlgebra& A) const;  // throws on inhomogeneity
    RMatrix dual(const GradedAlgebra& A) const;   // transpose, negated twists
    RMatrix compose(const GradedAlgebra& A, const RMatrix& g) const;  // this o g
    bool is_zero() const;
    bool entries_in_radical(const GradedAlgebra& A) const;
};

/* Finite-dimensional graded module: k-basis degrees plus one action
 * matrix per algebra generator. */
class FpModule {
public:
    const GradedAlgebra* A = nullptr;
    std::vector<int> deg;
    std::vector<SparseMat> act;                    // one per variable
    std::optional<std::vector<int>> free_twists;   // set for standard free layout
    std::optional<RMatrix> presentation;

    int dim() const { return static_cast<int>(deg.size()); }
    bool is_zero() const { return deg.empty(); }

    /* Action of the class of an algebra basis monomial (cached). */
    const SparseMat& basis_action(int b) const;
    SparseMat element_action(const SVec& a) const;
    SVec apply_element(const SVec& a, const SVec& v) const;

    std::map<int, std::vector<int>> slices() const;  // degree -> basis indices

    /* Checks grading of the actions, pairwise commutation, and that every
     * defining relation of the algebra acts as zero.  Intended for small
     * modules; cost grows with dim^3. */
    void verify() const;

private:
    mutable std::vector<SparseMat> basis_act_;  // lazy cache
};

FpModule free_module(const GradedAlgebra& A, std::vector<int> twists);
FpModule module_k(const GradedAlgebra& A);
/* R / (submodule generated by the given homogeneous elements). */
FpModule quotient_by_elements(const GradedAlgebra& A, const std::vector<SVec>& elems);

struct SubmoduleResult {
    FpModule mod;
    std::vector<SVec> embed;  // chosen k-basis, in ambient coordinates
};
/* R-span of homogeneous seed vectors inside an ambient module. */
SubmoduleResult submodule(const FpModule& amb, const std::vector<SVec>& seeds);
FpModule quotient_module(const FpModule& amb, const std::vector<SVec>& seeds);

FpModule coker_module(const GradedAlgebra& A, const RMatrix& pres);
SubmoduleResult kernel_module(const GradedAlgebra& A, const RMatrix& d);

FpModule matlis_dual(const FpModule& X);

struct HomModule {
    FpModule mod;
    std::vector<SparseMat> maps;  // basis element i as a dim(Y) x dim(X) matrix
};
HomModule hom_module(const FpModule& X, const FpModule& Y);
/* Hom_R(X, R), via hom_module against the rank-one free module. */
HomModule r_dual(const FpModule& X);

/* Degree layout of a free module's k-basis: index (c, b) -> c*dimR + b. */
std::vector<int> free_kdegrees(const FreeModule& F, const GradedAlgebra& A);

/* Per-internal-degree kernel of the k-linear map induced by d, vectors in
 * source k-basis coordinates. */
std::map<int, std::vector<SVec>> graded_kernel(const GradedAlgebra& A, const RMatrix& d);

/* Minimal free resolution F_n -> ... -> F_0 -> M -> 0 with the full
 * k-basis of ker d_n retained so that Ext/Tor are available at index n. */
struct Resolution {
    const GradedAlgebra* A = nullptr;
    FpModule module;
    std::vector<FreeModule> F;              // 0..n
    std::vector<RMatrix> d;                 // d[i]: F_i -> F_{i-1}; d[0] unused
    std::vector<SVec> aug;                  // images of F_0 generators in module coords
    std::map<int, std::vector<SVec>> top_kernel;  // ker d_n per degree (ker aug if n=0)

    int depth() const { return static_cast<int>(F.size()) - 1; }
    std::vector<long> betti() const;
    std::vector<std::vector<int>> generator_degrees() const;
    bool is_linear() const;  // every F_i generated in degree i + twist of F_0?
};

Resolution min_free_resolution(const FpModule& M, int n);

/* Chain complex of free modules C_lo..C_hi with d_i: C_i -> C_{i-1}. */
struct Complex {
    const GradedAlgebra* A = nullptr;
    int lo = 0;
    std::vector<FreeModule> mods;   // C_lo .. C_hi
    std::vector<RMatrix> ds;        // ds[i-lo]: C_i -> C_{i-1}, defined for i > lo

    int hi() const { return lo + static_cast<int>(mods.size()) - 1; }
    const FreeModule& at(int i) const { return mods[i - lo]; }
    const RMatrix& d(int i) const;  // i in (lo, hi]

    bool check_d2() const;
    bool check_minimal() const;
    Complex dualized() const;
    long kernel_dim(int i) const;   // dim_k Ker d_i, i in (lo, hi]
    long image_dim(int i) const;    // dim_k Im d_i, i in (lo, hi]
    long homology_dim(int i) const;  // i in (lo, hi)
};

/* The explicit doubly infinite resolution: d_i = [[v,y],[a^{1-i} x,z]] for
 * i <= 0 on rank-2 modules, d_1 = [[v,y,0],[x,z,tv]], continued by minimal
 * resolution steps for i >= 2.  Requires the six-variable preset algebra. */
RMatrix family_d(int i, const GradedAlgebra& A);
Complex build_complete_resolution(int neg, int pos, const GradedAlgebra& A);

/* Complete resolution of an arbitrary module over the (self-injective)
 * algebra: forward resolution of X spliced at 0 with the dual of a forward
 * resolution of Hom_R(X,R). */
Complex splice_complete_resolution(const FpModule& X, int neg, int pos);

/* dim_k Ext^i_R(M,Y) and Tor_i^R(M,Y) from a resolution of M; valid for
 * 0 <= i <= depth (index depth uses the retained kernel), else throws. */
long ext_dim(const Resolution& res, const FpModule& Y, int i);
long tor_dim(const Resolution& res, const FpModule& Y, int i);

/* Tate (co)homology from a complete resolution T of M:
 * ext at i needs d_i and d_{i+1}; tor at i likewise. */
long tate_ext_dim(const Complex& T, const FpModule& Y, int i);
long tate_tor_dim(const Complex& T, const FpModule& Y, int i);

/* Degrees of a homogeneous minimal generating set of the R-stable graded
 * subspace `pieces` (degree -> k-basis) of `amb`, ascending.  The length
 * is the minimal number of generators. */
std::vector<int> minimal_generator_degrees(const std::map<int, std::vector<SVec>>& pieces,
                                           const FpModule& amb);

/* Coefficients of (2+t)/(1-t-t^2): 2, 3, 5, 8, ... */
std::vector<long> fib_lower_bound(int n);

/* Named modules over the preset algebra: R, k, M, N, Nq (uses q), E,
 * CokerD1, Mstar. */
FpModule preset_module(const std::string& name, const GradedAlgebra& A, int q = 1);

/* Length-two module, deterministic per seed: k^2, or R/(V + m^2) for a
 * sampled 5-dimensional subspace V of the span of the variables. */
FpModule random_length2_module(const GradedAlgebra& A, unsigned long long seed);

}  // namespace tatelab

#endif
