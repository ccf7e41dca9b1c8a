#include "tatelab/homalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace tatelab {

namespace {

int kindex(int c, int b, int dimA) { return c * dimA + b; }

SparseMat identity(int n, const Scalar& one) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i] = {{i, one}};
    return m;
}

bool mats_equal(const SparseMat& a, const SparseMat& b) {
    return a.nrows == b.nrows && a.ncols == b.ncols && a.rows == b.rows;
}

/* One-pass reduction against RREF rows (inter-reduced). */
SVec reduce_vs_echelon(SVec v, const Echelon& ech,
                       const std::unordered_map<int, int>& pivot_row) {
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& [c, val] : v) {
        auto it = pivot_row.find(c);
        if (it != pivot_row.end()) hits.emplace_back(it->second, val);
    }
    for (const auto& [i, val] : hits) v = svec_axpy(v, -val, ech.rows[i]);
    return v;
}

}  // namespace

// ---------------------------------------------------------------- RMatrix

RMatrix RMatrix::zero(FreeModule tgt, FreeModule src) {
    RMatrix m;
    m.tgt = std::move(tgt);
    m.src = std::move(src);
    m.ent.assign(m.tgt.rank(), std::vector<SVec>(m.src.rank()));
    return m;
}

void RMatrix::validate(const GradedAlgebra& A) const {
    for (int r = 0; r < tgt.rank(); ++r)
        for (int c = 0; c < src.rank(); ++c) {
            int d = src.twists[c] - tgt.twists[r];
            for (const auto& [b, coeff] : ent[r][c])
                if (A.basis_degree(b) != d)
                    throw MathError("inhomogeneous matrix entry at (" + std::to_string(r) +
                                    "," + std::to_string(c) + ")");
        }
}

RMatrix RMatrix::dual(const GradedAlgebra& A) const {
    (void)A;
    RMatrix m;
    m.tgt.twists.reserve(src.rank());
    for (int t : src.twists) m.tgt.twists.push_back(-t);
    m.src.twists.reserve(tgt.rank());
    for (int t : tgt.twists) m.src.twists.push_back(-t);
    m.ent.assign(m.tgt.rank(), std::vector<SVec>(m.src.rank()));
    for (int r = 0; r < tgt.rank(); ++r)
        for (int c = 0; c < src.rank(); ++c) m.ent[c][r] = ent[r][c];
    return m;
}

RMatrix RMatrix::compose(const GradedAlgebra& A, const RMatrix& g) const {
    if (src.rank() != g.tgt.rank()) throw MathError("composition rank mismatch");
    RMatrix out = RMatrix::zero(tgt, g.src);
    for (int r = 0; r < tgt.rank(); ++r)
        for (int c = 0; c < g.src.rank(); ++c) {
            SVec acc;
            for (int m = 0; m < src.rank(); ++m) {
                if (ent[r][m].empty() || g.ent[m][c].empty()) continue;
                acc = svec_axpy(acc, A.field().one(), A.multiply(ent[r][m], g.ent[m][c]));
            }
            out.ent[r][c] = std::move(acc);
        }
    return out;
}

bool RMatrix::is_zero() const {
    for (const auto& row : ent)
        for (const auto& e : row)
            if (!e.empty()) return false;
    return true;
}

bool RMatrix::entries_in_radical(const GradedAlgebra& A) const {
    for (const auto& row : ent)
        for (const auto& e : row)
            for (const auto& [b, coeff] : e)
                if (A.basis_degree(b) == 0) return false;
    return true;
}

// ---------------------------------------------------------------- FpModule

const SparseMat& FpModule::basis_action(int b) const {
    if (basis_act_.empty()) {
        basis_act_.resize(A->dim());
        for (int i = 0; i < A->dim(); ++i) basis_act_[i].nrows = -1;  // unset marker
    }
    if (basis_act_[b].nrows >= 0) return basis_act_[b];
    SparseMat m = identity(dim(), A->field().one());
    const Monomial& mono = A->basis()[b];
    for (int v = 0; v < A->nvars(); ++v)
        for (int e = 0; e < mono.e[v]; ++e) m = matmul(act[v], m);
    basis_act_[b] = std::move(m);
    return basis_act_[b];
}

SparseMat FpModule::element_action(const SVec& a) const {
    SparseMat out(dim(), dim());
    for (const auto& [b, coeff] : a) {
        const SparseMat& mb = basis_action(b);
        for (int r = 0; r < dim(); ++r)
            if (!mb.rows[r].empty()) {
                SVec scaled = mb.rows[r];
                svec_scale(scaled, coeff);
                out.rows[r] = svec_axpy(out.rows[r], A->field().one(), scaled);
            }
    }
    return out;
}

SVec FpModule::apply_element(const SVec& a, const SVec& v) const {
    SVec out;
    for (const auto& [b, coeff] : a)
        out = svec_axpy(out, coeff, basis_action(b).apply(v, A->field().zero()));
    return out;
}

std::map<int, std::vector<int>> FpModule::slices() const {
    std::map<int, std::vector<int>> s;
    for (int i = 0; i < dim(); ++i) s[deg[i]].push_back(i);
    return s;
}

void FpModule::verify() const {
    int n = dim();
    for (int v = 0; v < A->nvars(); ++v) {
        if (act[v].nrows != n || act[v].ncols != n) throw MathError("action size mismatch");
        for (int r = 0; r < n; ++r)
            for (const auto& [c, val] : act[v].rows[r])
                if (deg[r] != deg[c] + 1) throw MathError("action violates the grading");
    }
    for (int v = 0; v < A->nvars(); ++v)
        for (int w = v + 1; w < A->nvars(); ++w)
            if (!mats_equal(matmul(act[v], act[w]), matmul(act[w], act[v])))
                throw MathError("actions do not commute");
    // every defining relation must act as zero
    for (const Poly& rel : A->presentation().rels) {
        SparseMat acc(n, n);
        for (const auto& [mono, coeff] : rel.terms) {
            SparseMat m = identity(n, A->field().one());
            for (int v = 0; v < A->nvars(); ++v)
                for (int e = 0; e < mono.e[v]; ++e) m = matmul(act[v], m);
            for (int r = 0; r < n; ++r) {
                SVec scaled = m.rows[r];
                svec_scale(scaled, coeff);
                acc.rows[r] = svec_axpy(acc.rows[r], A->field().one(), scaled);
            }
        }
        for (const auto& row : acc.rows)
            if (!row.empty()) throw MathError("a defining relation acts nontrivially");
    }
}

FpModule free_module(const GradedAlgebra& A, std::vector<int> twists) {
    FpModule m;
    m.A = &A;
    int dimA = A.dim();
    int rank = static_cast<int>(twists.size());
    m.deg.resize(rank * dimA);
    for (int c = 0; c < rank; ++c)
        for (int b = 0; b < dimA; ++b) m.deg[kindex(c, b, dimA)] = twists[c] + A.basis_degree(b);
    m.act.resize(A.nvars());
    for (int v = 0; v < A.nvars(); ++v) {
        SparseMat gm = A.left_mult_element(A.generator(v).coeffs());
        SparseMat blk(rank * dimA, rank * dimA);
        for (int c = 0; c < rank; ++c)
            for (int b = 0; b < dimA; ++b)
                for (const auto& [b2, val] : gm.rows[b])
                    blk.rows[kindex(c, b, dimA)].emplace_back(kindex(c, b2, dimA), val);
        // rows currently indexed (c,b) -> entries (c,b2): already sorted per row
        m.act[v] = std::move(blk);
    }
    m.free_twists = std::move(twists);
    return m;
}

FpModule module_k(const GradedAlgebra& A) {
    FpModule m;
    m.A = &A;
    m.deg = {0};
    m.act.assign(A.nvars(), SparseMat(1, 1));
    return m;
}

std::vector<int> free_kdegrees(const FreeModule& F, const GradedAlgebra& A) {
    std::vector<int> d(F.rank() * A.dim());
    for (int c = 0; c < F.rank(); ++c)
        for (int b = 0; b < A.dim(); ++b)
            d[kindex(c, b, A.dim())] = F.twists[c] + A.basis_degree(b);
    return d;
}

// ------------------------------------------------- submodules and quotients

namespace {

int svec_degree(const SVec& v, const std::vector<int>& deg) {
    if (v.empty()) throw MathError("degree of zero vector");
    int d = deg[v[0].first];
    for (const auto& [i, c] : v)
        if (deg[i] != d) throw MathError("inhomogeneous vector");
    return d;
}

/* Degreewise inter-reduced spanning rows of the R-submodule generated by
 * the seeds. */
std::map<int, Basis> span_closure(const FpModule& amb, const std::vector<SVec>& seeds) {
    std::map<int, Basis> span;
    std::map<int, std::vector<SVec>> by_deg;
    int dmin = 0, dmax = 0;
    bool first = true;
    for (const SVec& s : seeds) {
        if (s.empty()) continue;
        int d = svec_degree(s, amb.deg);
        by_deg[d].push_back(s);
        if (first || d < dmin) dmin = d;
        first = false;
    }
    if (first) return span;
    for (int i = 0; i < amb.dim(); ++i) dmax = std::max(dmax, amb.deg[i]);
    for (int d = dmin; d <= dmax; ++d) {
        Basis b(amb.dim());
        auto prev = span.find(d - 1);
        if (prev != span.end())
            for (const SVec& w : prev->second.rows())
                for (int v = 0; v < amb.A->nvars(); ++v)
                    b.insert(amb.act[v].apply(w, amb.A->field().zero()));
        auto it = by_deg.find(d);
        if (it != by_deg.end())
            for (const SVec& s : it->second) b.insert(s);
        if (b.rank() > 0) span.emplace(d, std::move(b));
    }
    return span;
}

}  // namespace

SubmoduleResult submodule(const FpModule& amb, const std::vector<SVec>& seeds) {
    auto span = span_closure(amb, seeds);
    SubmoduleResult out;
    out.mod.A = amb.A;
    std::map<int, std::pair<int, int>> range;  // degree -> [first,last) index in embed
    for (const auto& [d, b] : span) {
        int first = static_cast<int>(out.embed.size());
        for (const SVec& w : b.rows()) {
            out.embed.push_back(w);
            out.mod.deg.push_back(d);
        }
        range[d] = {first, static_cast<int>(out.embed.size())};
    }
    int n = static_cast<int>(out.embed.size());
    // column solvers per degree for expressing action images in the basis
    std::map<int, ColumnSolver> solvers;
    for (const auto& [d, r] : range) {
        std::vector<SVec> cols(out.embed.begin() + r.first, out.embed.begin() + r.second);
        solvers.emplace(d, ColumnSolver(cols, amb.dim()));
    }
    out.mod.act.assign(amb.A->nvars(), SparseMat(n, n));
    for (int v = 0; v < amb.A->nvars(); ++v) {
        std::vector<SVec> cols(n);  // column i = coords of act_v(e_i)
        for (int i = 0; i < n; ++i) {
            SVec img = amb.act[v].apply(out.embed[i], amb.A->field().zero());
            if (img.empty()) continue;
            int d = out.mod.deg[i] + 1;
            auto it = solvers.find(d);
            if (it == solvers.end()) throw MathError("submodule closure is not closed");
            auto x = it->second.solve(img);
            if (!x) throw MathError("submodule closure is not closed");
            for (auto& [j, c] : *x) cols[i].emplace_back(range[d].first + j, c);
        }
        for (int i = 0; i < n; ++i)
            for (const auto& [j, c] : cols[i]) out.mod.act[v].add(j, i, c);
    }
    return out;
}

FpModule quotient_module(const FpModule& amb, const std::vector<SVec>& seeds) {
    auto span = span_closure(amb, seeds);
    std::vector<char> pivot(amb.dim(), 0);
    for (const auto& [d, b] : span)
        for (const SVec& w : b.rows()) pivot[w[0].first] = 1;
    FpModule q;
    q.A = amb.A;
    std::vector<int> keep;  // ambient index of each quotient basis vector
    std::vector<int> qidx(amb.dim(), -1);
    for (int i = 0; i < amb.dim(); ++i) {
        if (pivot[i]) continue;
        qidx[i] = static_cast<int>(keep.size());
        keep.push_back(i);
        q.deg.push_back(amb.deg[i]);
    }
    int n = static_cast<int>(keep.size());
    q.act.assign(amb.A->nvars(), SparseMat(n, n));
    for (int v = 0; v < amb.A->nvars(); ++v) {
        for (int i = 0; i < n; ++i) {
            SVec img = amb.act[v].apply(svec_unit(keep[i], amb.A->field().one()),
                                        amb.A->field().zero());
            if (img.empty()) continue;
            auto it = span.find(q.deg[i] + 1);
            if (it != span.end()) img = it->second.reduce(std::move(img));
            for (const auto& [a, c] : img) {
                if (qidx[a] < 0) throw MathError("quotient reduction left a pivot entry");
                q.act[v].add(qidx[a], i, c);
            }
        }
    }
    return q;
}

FpModule quotient_by_elements(const GradedAlgebra& A, const std::vector<SVec>& elems) {
    FpModule R = free_module(A, {0});
    FpModule q = quotient_module(R, elems);
    return q;
}

FpModule coker_module(const GradedAlgebra& A, const RMatrix& pres) {
    pres.validate(A);
    FpModule amb = free_module(A, pres.tgt.twists);
    std::vector<SVec> cols;
    for (int c = 0; c < pres.src.rank(); ++c) {
        SVec v;
        for (int r = 0; r < pres.tgt.rank(); ++r)
            for (const auto& [b, coeff] : pres.ent[r][c])
                v.emplace_back(kindex(r, b, A.dim()), coeff);
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (!v.empty()) cols.push_back(std::move(v));
    }
    FpModule q = quotient_module(amb, cols);
    q.presentation = pres;
    return q;
}

SubmoduleResult kernel_module(const GradedAlgebra& A, const RMatrix& d) {
    auto ker = graded_kernel(A, d);
    FpModule amb = free_module(A, d.src.twists);
    std::vector<SVec> seeds;
    for (const auto& [deg, vs] : ker)
        for (const SVec& v : vs) seeds.push_back(v);
    return submodule(amb, seeds);
}

FpModule matlis_dual(const FpModule& X) {
    FpModule m;
    m.A = X.A;
    m.deg.reserve(X.dim());
    for (int d : X.deg) m.deg.push_back(-d);
    m.act.reserve(X.act.size());
    for (const SparseMat& a : X.act) m.act.push_back(a.transpose());
    return m;
}

// ---------------------------------------------------------------- Hom

HomModule hom_module(const FpModule& X, const FpModule& Y) {
    HomModule out;
    out.mod.A = X.A;
    out.mod.act.assign(X.A->nvars(), SparseMat(0, 0));
    if (X.is_zero() || Y.is_zero()) return out;
    const Scalar zero = X.A->field().zero();
    int dx = X.dim(), dy = Y.dim();

    std::set<int> degs;
    for (int j = 0; j < dy; ++j)
        for (int i = 0; i < dx; ++i) degs.insert(Y.deg[j] - X.deg[i]);

    struct Level {
        std::vector<std::pair<int, int>> pairs;  // (j, i)
        std::vector<SVec> phis;                  // vectorized j*dx+i coordinates
        int first = 0;                           // index of first phi in out basis
    };
    std::map<int, Level> levels;

    for (int d : degs) {
        Level lv;
        std::map<std::pair<int, int>, int> pidx;
        for (int j = 0; j < dy; ++j)
            for (int i = 0; i < dx; ++i)
                if (Y.deg[j] - X.deg[i] == d) {
                    pidx[{j, i}] = static_cast<int>(lv.pairs.size());
                    lv.pairs.emplace_back(j, i);
                }
        // constraints phi(v x_i) = v phi(x_i), one block per variable
        std::vector<SVec> rows;
        for (int v = 0; v < X.A->nvars(); ++v) {
            for (int i = 0; i < dx; ++i) {
                for (int j = 0; j < dy; ++j) {
                    if (Y.deg[j] - X.deg[i] != d + 1) continue;
                    SVec row;
                    for (int i2 = 0; i2 < dx; ++i2) {
                        Scalar a = svec_get(X.act[v].rows[i2], i, zero);
                        if (a.is_zero()) continue;
                        auto it = pidx.find({j, i2});
                        if (it != pidx.end()) row = svec_axpy(row, a, svec_unit(it->second, X.A->field().one()));
                    }
                    for (const auto& [j2, a] : Y.act[v].rows[j]) {
                        auto it = pidx.find({j2, i});
                        if (it != pidx.end())
                            row = svec_axpy(row, -a, svec_unit(it->second, X.A->field().one()));
                    }
                    if (!row.empty()) rows.push_back(std::move(row));
                }
            }
        }
        SparseMat cons(static_cast<int>(rows.size()), static_cast<int>(lv.pairs.size()));
        cons.rows = std::move(rows);
        std::vector<SVec> local = kernel_basis(cons, X.A->field().one());
        lv.first = static_cast<int>(out.mod.deg.size());
        for (const SVec& sol : local) {
            SVec vec;
            SparseMat mp(dy, dx);
            for (const auto& [p, c] : sol) {
                auto [j, i] = lv.pairs[p];
                vec.emplace_back(j * dx + i, c);
                mp.add(j, i, c);
            }
            std::sort(vec.begin(), vec.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            lv.phis.push_back(std::move(vec));
            out.maps.push_back(std::move(mp));
            out.mod.deg.push_back(d);
        }
        if (!lv.phis.empty()) levels.emplace(d, std::move(lv));
    }

    int n = static_cast<int>(out.mod.deg.size());
    std::map<int, ColumnSolver> solvers;
    for (const auto& [d, lv] : levels)
        solvers.emplace(d, ColumnSolver(lv.phis, dy * dx));
    for (int v = 0; v < X.A->nvars(); ++v) {
        out.mod.act[v] = SparseMat(n, n);
        for (const auto& [d, lv] : levels) {
            auto next = levels.find(d + 1);
            for (size_t k = 0; k < lv.phis.size(); ++k) {
                SparseMat img = matmul(Y.act[v], out.maps[lv.first + k]);
                SVec vec;
                for (int j = 0; j < dy; ++j)
                    for (const auto& [i, c] : img.rows[j]) vec.emplace_back(j * dx + i, c);
                std::sort(vec.begin(), vec.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (vec.empty()) continue;
                if (next == levels.end()) throw MathError("hom action leaves the graded basis");
                auto x = solvers.at(d + 1).solve(vec);
                if (!x) throw MathError("hom action not expressible in the hom basis");
                for (const auto& [j, c] : *x)
                    out.mod.act[v].add(next->second.first + j, lv.first + static_cast<int>(k), c);
            }
        }
    }
    return out;
}

HomModule r_dual(const FpModule& X) {
    FpModule R = free_module(*X.A, {0});
    return hom_module(X, R);
}

// ------------------------------------------------------------- kernels

std::map<int, std::vector<SVec>> graded_kernel(const GradedAlgebra& A, const RMatrix& d) {
    int dimA = A.dim();
    std::vector<int> sdeg = free_kdegrees(d.src, A);
    std::vector<int> tdeg = free_kdegrees(d.tgt, A);
    std::map<int, std::vector<int>> scols, trows;
    for (size_t i = 0; i < sdeg.size(); ++i) scols[sdeg[i]].push_back(static_cast<int>(i));
    for (size_t i = 0; i < tdeg.size(); ++i) trows[tdeg[i]].push_back(static_cast<int>(i));

    std::map<int, std::vector<SVec>> out;
    for (const auto& [e, cols] : scols) {
        std::map<int, int> rlocal;
        auto tr = trows.find(e);
        int nrows = 0;
        if (tr != trows.end()) {
            for (int g : tr->second) rlocal[g] = nrows++;
        }
        SparseMat eq(nrows, static_cast<int>(cols.size()));
        for (size_t jc = 0; jc < cols.size(); ++jc) {
            int g = cols[jc];
            int c = g / dimA, b = g % dimA;
            for (int r = 0; r < d.tgt.rank(); ++r) {
                const SVec& a = d.ent[r][c];
                if (a.empty()) continue;
                SVec prod = A.multiply(a, svec_unit(b, A.field().one()));
                for (const auto& [b2, coeff] : prod)
                    eq.add(rlocal.at(kindex(r, b2, dimA)), static_cast<int>(jc), coeff);
            }
        }
        std::vector<SVec> local = kernel_basis(eq, A.field().one());
        std::vector<SVec>& dest = out[e];
        for (const SVec& lv : local) {
            SVec v;
            for (const auto& [j, c] : lv) v.emplace_back(cols[j], c);
            std::sort(v.begin(), v.end(),
                      [](const auto& a2, const auto& b2) { return a2.first < b2.first; });
            dest.push_back(std::move(v));
        }
        if (dest.empty()) out.erase(e);
    }
    return out;
}

namespace {

/* Rows of m * K_{d-1} in module coordinates, the degree-d span of the
 * previous graded piece. */
SparseMat action_rows(const std::vector<SVec>& prev, const FpModule& amb) {
    const Scalar zero = amb.A->field().zero();
    std::vector<SVec> rows;
    for (int v = 0; v < amb.A->nvars(); ++v)
        for (const SVec& w : prev) {
            SVec r = amb.act[v].apply(w, zero);
            if (!r.empty()) rows.push_back(std::move(r));
        }
    SparseMat m(static_cast<int>(rows.size()), amb.dim());
    m.rows = std::move(rows);
    return m;
}

/* Homogeneous minimal generators of the submodule spanned degreewise by
 * `pieces` inside `amb` (pieces must be R-stable: act maps each level into
 * the span of the next).  Per degree d, the rows of m * K_{d-1} are
 * echelonized (stopping early once they span all of K_d); candidates from
 * the basis of K_d that stay independent of the echelon and of each other
 * are the new generators. */
void minimal_generators(const std::map<int, std::vector<SVec>>& pieces, const FpModule& amb,
                        std::vector<SVec>& gens, std::vector<int>& degs) {
    for (const auto& [d, vecs] : pieces) {
        int target = static_cast<int>(vecs.size());  // vecs is a basis of the piece
        Echelon ech;
        auto prev = pieces.find(d - 1);
        if (prev != pieces.end())
            ech = eliminate(action_rows(prev->second, amb), true, target);
        if (ech.rank() >= target) continue;  // m * K_{d-1} spans K_d
        std::unordered_map<int, int> pivots;
        for (int i = 0; i < ech.rank(); ++i) pivots[ech.pivot_col[i]] = i;
        // survivors are inter-reduced in a secondary echelon
        std::vector<SVec> extra;
        std::unordered_map<int, int> xpivots;
        for (const SVec& w : vecs) {
            SVec r = w;
            // ech is fully reduced: one sweep over the original entries suffices
            for (const auto& [c, val] : w) {
                auto it = pivots.find(c);
                if (it != pivots.end()) r = svec_axpy(r, -val, ech.rows[it->second]);
            }
            while (!r.empty()) {
                auto it = xpivots.find(r[0].first);
                if (it == xpivots.end()) break;
                r = svec_axpy(r, -r[0].second, extra[it->second]);
            }
            if (r.empty()) continue;
            svec_scale(r, r[0].second.inv());
            xpivots[r[0].first] = static_cast<int>(extra.size());
            extra.push_back(std::move(r));
            gens.push_back(w);
            degs.push_back(d);
        }
    }
}

RMatrix lift_to_rmatrix(const FreeModule& tgt, const std::vector<SVec>& gens,
                        const std::vector<int>& degs, const GradedAlgebra& A) {
    RMatrix d = RMatrix::zero(tgt, FreeModule{degs});
    int dimA = A.dim();
    for (size_t j = 0; j < gens.size(); ++j)
        for (const auto& [g, coeff] : gens[j]) {
            int c = g / dimA, b = g % dimA;
            d.ent[c][j] = svec_axpy(d.ent[c][j], coeff, svec_unit(b, A.field().one()));
        }
    return d;
}

}  // namespace

// ------------------------------------------------------------- Resolution

std::vector<long> Resolution::betti() const {
    std::vector<long> b;
    for (const FreeModule& f : F) b.push_back(f.rank());
    return b;
}

std::vector<std::vector<int>> Resolution::generator_degrees() const {
    std::vector<std::vector<int>> g;
    for (const FreeModule& f : F) g.push_back(f.twists);
    return g;
}

bool Resolution::is_linear() const {
    if (F.empty() || F[0].twists.empty()) return true;
    int t0 = F[0].twists[0];
    for (size_t i = 0; i < F.size(); ++i)
        for (int t : F[i].twists)
            if (t != t0 + static_cast<int>(i)) return false;
    return true;
}

Resolution min_free_resolution(const FpModule& M, int n) {
    Resolution res;
    res.A = M.A;
    res.module = M;
    const GradedAlgebra& A = *M.A;

    // generators of M itself: unit vectors modulo m*M, degree by degree
    std::map<int, std::vector<SVec>> mpieces;
    for (int i = 0; i < M.dim(); ++i)
        mpieces[M.deg[i]].push_back(svec_unit(i, A.field().one()));
    std::vector<SVec> gens;
    std::vector<int> degs;
    minimal_generators(mpieces, M, gens, degs);
    res.F.push_back(FreeModule{degs});
    res.aug = gens;
    res.d.push_back(RMatrix::zero(FreeModule{}, FreeModule{}));  // placeholder at index 0

    // kernel of the augmentation F_0 -> M
    std::vector<int> fdeg = free_kdegrees(res.F[0], A);
    std::map<int, std::vector<int>> scols;
    for (size_t i = 0; i < fdeg.size(); ++i) scols[fdeg[i]].push_back(static_cast<int>(i));
    std::map<int, std::vector<int>> mrows;
    for (int i = 0; i < M.dim(); ++i) mrows[M.deg[i]].push_back(i);
    std::map<int, std::vector<SVec>> K;
    for (const auto& [e, cols] : scols) {
        std::map<int, int> rlocal;
        int nrows = 0;
        auto mr = mrows.find(e);
        if (mr != mrows.end())
            for (int i : mr->second) rlocal[i] = nrows++;
        SparseMat eq(nrows, static_cast<int>(cols.size()));
        for (size_t jc = 0; jc < cols.size(); ++jc) {
            int c = cols[jc] / A.dim(), b = cols[jc] % A.dim();
            SVec img = M.basis_action(b).apply(res.aug[c], A.field().zero());
            for (const auto& [i, coeff] : img) eq.add(rlocal.at(i), static_cast<int>(jc), coeff);
        }
        std::vector<SVec> local = kernel_basis(eq, A.field().one());
        std::vector<SVec>& dest = K[e];
        for (const SVec& lv : local) {
            SVec v;
            for (const auto& [j, c] : lv) v.emplace_back(cols[j], c);
            std::sort(v.begin(), v.end(),
                      [](const auto& a2, const auto& b2) { return a2.first < b2.first; });
            dest.push_back(std::move(v));
        }
        if (dest.empty()) K.erase(e);
    }

    for (int i = 1; i <= n; ++i) {
        FpModule amb = free_module(A, res.F[i - 1].twists);
        std::vector<SVec> g2;
        std::vector<int> d2;
        minimal_generators(K, amb, g2, d2);
        RMatrix di = lift_to_rmatrix(res.F[i - 1], g2, d2, A);
        res.F.push_back(di.src);
        K = graded_kernel(A, di);
        res.d.push_back(std::move(di));
    }
    res.top_kernel = std::move(K);
    return res;
}

// ------------------------------------------------------------- Complex

const RMatrix& Complex::d(int i) const {
    if (i <= lo || i > hi()) throw MathError("differential index out of range");
    return ds[i - lo];
}

bool Complex::check_d2() const {
    for (int i = lo + 2; i <= hi(); ++i)
        if (!d(i - 1).compose(*A, d(i)).is_zero()) return false;
    return true;
}

bool Complex::check_minimal() const {
    for (int i = lo + 1; i <= hi(); ++i)
        if (!d(i).entries_in_radical(*A)) return false;
    return true;
}

Complex Complex::dualized() const {
    Complex out;
    out.A = A;
    out.lo = -hi();
    out.mods.resize(mods.size());
    out.ds.resize(mods.size());
    for (int i = lo; i <= hi(); ++i) {
        FreeModule f;
        for (int t : at(i).twists) f.twists.push_back(-t);
        out.mods[-i - out.lo] = std::move(f);
    }
    for (int i = out.lo + 1; i <= out.hi(); ++i) out.ds[i - out.lo] = d(1 - i).dual(*A);
    return out;
}

namespace {

/* cols and rank of every internal-degree slice of the map d. */
std::map<int, std::pair<long, long>> slice_profile(const GradedAlgebra& A, const RMatrix& d) {
    std::map<int, std::pair<long, long>> out;  // degree -> (cols, rank)
    int dimA = A.dim();
    std::vector<int> sdeg = free_kdegrees(d.src, A);
    std::vector<int> tdeg = free_kdegrees(d.tgt, A);
    std::map<int, std::vector<int>> scols, trows;
    for (size_t i = 0; i < sdeg.size(); ++i) scols[sdeg[i]].push_back(static_cast<int>(i));
    for (size_t i = 0; i < tdeg.size(); ++i) trows[tdeg[i]].push_back(static_cast<int>(i));
    for (const auto& [e, cols] : scols) {
        std::map<int, int> rlocal;
        int nrows = 0;
        auto tr = trows.find(e);
        if (tr != trows.end())
            for (int g : tr->second) rlocal[g] = nrows++;
        SparseMat eq(nrows, static_cast<int>(cols.size()));
        for (size_t jc = 0; jc < cols.size(); ++jc) {
            int c = cols[jc] / dimA, b = cols[jc] % dimA;
            for (int r = 0; r < d.tgt.rank(); ++r) {
                const SVec& a = d.ent[r][c];
                if (a.empty()) continue;
                SVec prod = A.multiply(a, svec_unit(b, A.field().one()));
                for (const auto& [b2, coeff] : prod)
                    eq.add(rlocal.at(kindex(r, b2, dimA)), static_cast<int>(jc), coeff);
            }
        }
        out[e] = {static_cast<long>(cols.size()), rank(eq)};
    }
    return out;
}

}  // namespace

long Complex::kernel_dim(int i) const {
    long k = 0;
    for (const auto& [e, cr] : slice_profile(*A, d(i))) k += cr.first - cr.second;
    return k;
}

long Complex::image_dim(int i) const {
    long k = 0;
    for (const auto& [e, cr] : slice_profile(*A, d(i))) k += cr.second;
    return k;
}

long Complex::homology_dim(int i) const {
    if (i <= lo || i >= hi()) throw MathError("homology spot outside the computed range");
    return kernel_dim(i) - image_dim(i + 1);
}

// ----------------------------------------------- the explicit resolution

RMatrix family_d(int i, const GradedAlgebra& A) {
    if (i > 1) throw MathError("explicit differential defined for index <= 1");
    auto el = [&](const std::string& s) { return A.parse(s).coeffs(); };
    if (i == 1) {
        RMatrix d = RMatrix::zero(FreeModule{{0, 0}}, FreeModule{{1, 1, 2}});
        d.ent[0][0] = el("V");
        d.ent[0][1] = el("Y");
        d.ent[1][0] = el("X");
        d.ent[1][1] = el("Z");
        d.ent[1][2] = el("T*V");
        return d;
    }
    RMatrix d = RMatrix::zero(FreeModule{{i - 1, i - 1}}, FreeModule{{i, i}});
    d.ent[0][0] = el("V");
    d.ent[0][1] = el("Y");
    SVec x = el("X");
    svec_scale(x, A.field().alpha_power(i));
    d.ent[1][0] = std::move(x);
    d.ent[1][1] = el("Z");
    return d;
}

Complex build_complete_resolution(int neg, int pos, const GradedAlgebra& A) {
    if (neg < 0 || pos < 1) throw ConfigError("complete resolution range needs neg >= 0, pos >= 1");
    Complex C;
    C.A = &A;
    C.lo = -neg;
    C.mods.resize(neg + pos + 1);
    C.ds.resize(neg + pos + 1);
    for (int i = -neg; i <= 0; ++i) C.mods[i + neg] = FreeModule{{i, i}};
    C.mods[1 + neg] = FreeModule{{1, 1, 2}};
    for (int i = -neg + 1; i <= 1; ++i) C.ds[i + neg] = family_d(i, A);
    if (pos >= 2) {
        std::map<int, std::vector<SVec>> K = graded_kernel(A, C.ds[1 + neg]);
        for (int i = 2; i <= pos; ++i) {
            FpModule amb = free_module(A, C.mods[i - 1 + neg].twists);
            std::vector<SVec> gens;
            std::vector<int> degs;
            minimal_generators(K, amb, gens, degs);
            RMatrix di = lift_to_rmatrix(C.mods[i - 1 + neg], gens, degs, A);
            C.mods[i + neg] = di.src;
            if (i < pos) K = graded_kernel(A, di);
            C.ds[i + neg] = std::move(di);
        }
    }
    for (int i = C.lo + 1; i <= C.hi(); ++i) C.ds[i + neg].validate(A);
    return C;
}

Complex splice_complete_resolution(const FpModule& X, int neg, int pos) {
    const GradedAlgebra& A = *X.A;
    Resolution fwd = min_free_resolution(X, pos);
    Complex T;
    T.A = &A;
    T.lo = -neg;
    T.mods.resize(neg + pos + 1);
    T.ds.resize(neg + pos + 1);
    for (int i = 0; i <= pos; ++i) {
        T.mods[i + neg] = fwd.F[i];
        if (i >= 1) T.ds[i + neg] = fwd.d[i];
    }
    if (neg == 0) return T;

    HomModule dualX = r_dual(X);
    Resolution bwd = min_free_resolution(dualX.mod, neg - 1);
    for (int j = 1; j <= neg; ++j) {
        FreeModule f;
        for (int t : bwd.F[j - 1].twists) f.twists.push_back(-t);
        T.mods[-j + neg] = std::move(f);
    }
    for (int i = -neg + 1; i <= -1; ++i) T.ds[i + neg] = bwd.d[-i].dual(A);

    // d_0: F_0 -> (G_0)*, entry (r,c) = psi_r(m_c) in R
    RMatrix d0 = RMatrix::zero(T.mods[-1 + neg], T.mods[0 + neg]);
    for (int r = 0; r < d0.tgt.rank(); ++r) {
        // psi_r as a dim(R) x dim(X) matrix
        SparseMat psi(A.dim(), X.dim());
        for (const auto& [k, c] : bwd.aug[r])
            for (int row = 0; row < A.dim(); ++row)
                for (const auto& [col, v] : dualX.maps[k].rows[row]) psi.add(row, col, c * v);
        for (int c = 0; c < d0.src.rank(); ++c)
            d0.ent[r][c] = psi.apply(fwd.aug[c], A.field().zero());
    }
    d0.validate(A);
    T.ds[0 + neg] = std::move(d0);
    return T;
}

// ------------------------------------------------------------- Ext / Tor

namespace {

std::vector<std::pair<int, int>> hom_pairs(const FreeModule& F, const FpModule& Y, int e) {
    std::vector<std::pair<int, int>> p;  // (c, j)
    for (int c = 0; c < F.rank(); ++c)
        for (int j = 0; j < Y.dim(); ++j)
            if (Y.deg[j] - F.twists[c] == e) p.emplace_back(c, j);
    return p;
}

/* Matrix of phi -> phi o d on degree-e pieces: rows over Hom(d.src, Y)_e,
 * cols over Hom(d.tgt, Y)_e. */
SparseMat hom_diff(const RMatrix& d, const FpModule& Y, int e) {
    auto rows = hom_pairs(d.src, Y, e);
    auto cols = hom_pairs(d.tgt, Y, e);
    std::map<std::pair<int, int>, int> ridx, cidx;
    for (size_t i = 0; i < rows.size(); ++i) ridx[rows[i]] = static_cast<int>(i);
    for (size_t i = 0; i < cols.size(); ++i) cidx[cols[i]] = static_cast<int>(i);
    SparseMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int cp = 0; cp < d.src.rank(); ++cp)
        for (int r = 0; r < d.tgt.rank(); ++r) {
            const SVec& a = d.ent[r][cp];
            if (a.empty()) continue;
            for (const auto& [b, coeff] : a) {
                const SparseMat& ab = Y.basis_action(b);
                for (int j2 = 0; j2 < Y.dim(); ++j2) {
                    auto rit = ridx.find({cp, j2});
                    if (rit == ridx.end()) continue;
                    for (const auto& [j, v] : ab.rows[j2]) {
                        auto cit = cidx.find({r, j});
                        if (cit != cidx.end()) m.add(rit->second, cit->second, coeff * v);
                    }
                }
            }
        }
    return m;
}

std::vector<std::pair<int, int>> tensor_pairs(const FreeModule& F, const FpModule& Y, int e) {
    std::vector<std::pair<int, int>> p;  // (c, j)
    for (int c = 0; c < F.rank(); ++c)
        for (int j = 0; j < Y.dim(); ++j)
            if (F.twists[c] + Y.deg[j] == e) p.emplace_back(c, j);
    return p;
}

/* Matrix of (d tensor 1) on degree-e pieces: rows over d.src tensor Y,
 * cols... rows are the source, as row vectors fed to eliminate. */
SparseMat tensor_diff(const RMatrix& d, const FpModule& Y, int e) {
    auto srcp = tensor_pairs(d.src, Y, e);
    auto tgtp = tensor_pairs(d.tgt, Y, e);
    std::map<std::pair<int, int>, int> tidx;
    for (size_t i = 0; i < tgtp.size(); ++i) tidx[tgtp[i]] = static_cast<int>(i);
    SparseMat m(static_cast<int>(srcp.size()), static_cast<int>(tgtp.size()));
    for (size_t s = 0; s < srcp.size(); ++s) {
        auto [c, j] = srcp[s];
        for (int r = 0; r < d.tgt.rank(); ++r) {
            const SVec& a = d.ent[r][c];
            if (a.empty()) continue;
            for (const auto& [b, coeff] : a) {
                const SparseMat& ab = Y.basis_action(b);
                // e_c tensor y_j -> e_r tensor (b . y_j)
                for (int j2 = 0; j2 < Y.dim(); ++j2) {
                    Scalar v = svec_get(ab.rows[j2], j, Y.A->field().zero());
                    if (v.is_zero()) continue;
                    auto it = tidx.find({r, j2});
                    if (it != tidx.end()) m.add(static_cast<int>(s), it->second, coeff * v);
                }
            }
        }
    }
    return m;
}

std::set<int> hom_degs(const FreeModule& F, const FpModule& Y) {
    std::set<int> s;
    for (int c = 0; c < F.rank(); ++c)
        for (int j = 0; j < Y.dim(); ++j) s.insert(Y.deg[j] - F.twists[c]);
    return s;
}

std::set<int> tensor_degs(const FreeModule& F, const FpModule& Y) {
    std::set<int> s;
    for (int c = 0; c < F.rank(); ++c)
        for (int j = 0; j < Y.dim(); ++j) s.insert(F.twists[c] + Y.deg[j]);
    return s;
}

/* Conditions cutting out { phi in Hom(F_n, Y)_e : phi(ker d_n) = 0 },
 * returned as a matrix whose rank is dim Hom_e minus dim of the cut. */
SparseMat kernel_conditions(const std::map<int, std::vector<SVec>>& K, const FreeModule& F,
                            const FpModule& Y, int e, const GradedAlgebra& A) {
    auto cols = hom_pairs(F, Y, e);
    std::map<std::pair<int, int>, int> cidx;
    for (size_t i = 0; i < cols.size(); ++i) cidx[cols[i]] = static_cast<int>(i);
    auto yslices = Y.slices();
    std::vector<SVec> rows;
    for (const auto& [dv, vecs] : K) {
        auto ys = yslices.find(dv + e);
        if (ys == yslices.end()) continue;
        for (const SVec& v : vecs) {
            // one condition per Y-coordinate l of phi(v)
            std::map<int, SVec> cond;  // l -> row
            for (const auto& [g, coeff] : v) {
                int c = g / A.dim(), b = g % A.dim();
                const SparseMat& ab = Y.basis_action(b);
                for (int l = 0; l < Y.dim(); ++l)
                    for (const auto& [j, val] : ab.rows[l]) {
                        auto it = cidx.find({c, j});
                        if (it != cidx.end())
                            cond[l] = svec_axpy(cond[l], coeff * val,
                                                svec_unit(it->second, A.field().one()));
                    }
            }
            for (auto& [l, row] : cond)
                if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    SparseMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    m.rows = std::move(rows);
    return m;
}

/* Rows spanning Im(d_{n+1} tensor 1) in (F_n tensor Y)_e from a spanning
 * set of ker d_n. */
SparseMat kernel_span(const std::map<int, std::vector<SVec>>& K, const FreeModule& F,
                      const FpModule& Y, int e, const GradedAlgebra& A) {
    auto tgtp = tensor_pairs(F, Y, e);
    std::map<std::pair<int, int>, int> tidx;
    for (size_t i = 0; i < tgtp.size(); ++i) tidx[tgtp[i]] = static_cast<int>(i);
    auto yslices = Y.slices();
    std::vector<SVec> rows;
    for (const auto& [dv, vecs] : K) {
        auto ys = yslices.find(e - dv);
        if (ys == yslices.end()) continue;
        for (const SVec& v : vecs)
            for (int j : ys->second) {
                SVec row;
                for (const auto& [g, coeff] : v) {
                    int c = g / A.dim(), b = g % A.dim();
                    const SparseMat& ab = Y.basis_action(b);
                    for (int j2 = 0; j2 < Y.dim(); ++j2) {
                        Scalar val = svec_get(ab.rows[j2], j, A.field().zero());
                        if (val.is_zero()) continue;
                        auto it = tidx.find({c, j2});
                        if (it != tidx.end())
                            row = svec_axpy(row, coeff * val,
                                            svec_unit(it->second, A.field().one()));
                    }
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    SparseMat m(static_cast<int>(rows.size()), static_cast<int>(tgtp.size()));
    m.rows = std::move(rows);
    return m;
}

}  // namespace

long ext_dim(const Resolution& res, const FpModule& Y, int i) {
    if (i < 0 || i > res.depth())
        throw MathError("Ext index " + std::to_string(i) + " exceeds resolution depth " +
                        std::to_string(res.depth()));
    const GradedAlgebra& A = *res.A;
    const FreeModule& Fi = res.F[i];
    long total = 0;
    for (int e : hom_degs(Fi, Y)) {
        long mid = static_cast<long>(hom_pairs(Fi, Y, e).size());
        long out_rank = i < res.depth() ? rank(hom_diff(res.d[i + 1], Y, e))
                                        : rank(kernel_conditions(res.top_kernel, Fi, Y, e, A));
        long in_rank = i >= 1 ? rank(hom_diff(res.d[i], Y, e)) : 0;
        total += mid - out_rank - in_rank;
    }
    return total;
}

long tor_dim(const Resolution& res, const FpModule& Y, int i) {
    if (i < 0 || i > res.depth())
        throw MathError("Tor index " + std::to_string(i) + " exceeds resolution depth " +
                        std::to_string(res.depth()));
    const GradedAlgebra& A = *res.A;
    const FreeModule& Fi = res.F[i];
    long total = 0;
    for (int e : tensor_degs(Fi, Y)) {
        long mid = static_cast<long>(tensor_pairs(Fi, Y, e).size());
        long out_rank = i >= 1 ? rank(tensor_diff(res.d[i], Y, e)) : 0;
        long in_rank = i < res.depth() ? rank(tensor_diff(res.d[i + 1], Y, e))
                                       : rank(kernel_span(res.top_kernel, Fi, Y, e, A));
        total += mid - out_rank - in_rank;
    }
    return total;
}

long tate_ext_dim(const Complex& T, const FpModule& Y, int i) {
    if (i <= T.lo || i + 1 > T.hi())
        throw MathError("Tate Ext index outside the built range");
    const FreeModule& Ti = T.at(i);
    long total = 0;
    for (int e : hom_degs(Ti, Y)) {
        long mid = static_cast<long>(hom_pairs(Ti, Y, e).size());
        long out_rank = rank(hom_diff(T.d(i + 1), Y, e));
        long in_rank = rank(hom_diff(T.d(i), Y, e));
        total += mid - out_rank - in_rank;
    }
    return total;
}

long tate_tor_dim(const Complex& T, const FpModule& Y, int i) {
    if (i <= T.lo || i + 1 > T.hi())
        throw MathError("Tate Tor index outside the built range");
    const FreeModule& Ti = T.at(i);
    long total = 0;
    for (int e : tensor_degs(Ti, Y)) {
        long mid = static_cast<long>(tensor_pairs(Ti, Y, e).size());
        long out_rank = rank(tensor_diff(T.d(i), Y, e));
        long in_rank = rank(tensor_diff(T.d(i + 1), Y, e));
        total += mid - out_rank - in_rank;
    }
    return total;
}

std::vector<int> minimal_generator_degrees(const std::map<int, std::vector<SVec>>& pieces,
                                           const FpModule& amb) {
    // counting only: nu at degree d is dim K_d minus rank of m * K_{d-1}
    std::vector<int> degs;
    for (const auto& [d, vecs] : pieces) {
        long nu = static_cast<long>(vecs.size());
        auto prev = pieces.find(d - 1);
        if (prev != pieces.end())
            nu -= eliminate(action_rows(prev->second, amb), false, static_cast<int>(vecs.size()))
                      .rank();
        for (long i = 0; i < nu; ++i) degs.push_back(d);
    }
    return degs;
}

std::vector<long> fib_lower_bound(int n) {
    std::vector<long> c;
    for (int i = 0; i <= n; ++i) {
        if (i == 0)
            c.push_back(2);
        else if (i == 1)
            c.push_back(3);
        else
            c.push_back(c[i - 1] + c[i - 2]);
    }
    return c;
}

// ------------------------------------------------------------- presets

FpModule preset_module(const std::string& name, const GradedAlgebra& A, int q) {
    if (name == "R") return free_module(A, {0});
    if (name == "k") return module_k(A);
    if (name == "M") return coker_module(A, family_d(0, A).dual(A));
    if (name == "N") {
        std::vector<SVec> rels = {A.parse("T").coeffs(), A.parse("U").coeffs(),
                                  A.parse("V - X").coeffs(), A.parse("Y - X").coeffs(),
                                  A.parse("Z - X").coeffs()};
        return quotient_by_elements(A, rels);
    }
    if (name == "Nq") {
        if (q < 1) throw ConfigError("Nq needs q >= 1");
        Scalar aq = A.field().one();
        for (int j = 0; j < q; ++j) aq *= A.field().alpha();
        SVec x = A.parse("X").coeffs();
        svec_scale(x, aq);
        SVec v = A.parse("V").coeffs();
        std::vector<SVec> rels = {A.parse("T").coeffs(), A.parse("U").coeffs(),
                                  svec_axpy(v, -A.field().one(), x),
                                  A.parse("V - Y").coeffs(), A.parse("V - Z").coeffs()};
        return quotient_by_elements(A, rels);
    }
    if (name == "E") return kernel_module(A, family_d(1, A)).mod;
    if (name == "CokerD1") return coker_module(A, family_d(1, A));
    if (name == "Mstar") return r_dual(coker_module(A, family_d(0, A).dual(A))).mod;
    throw ConfigError("unknown module preset '" + name + "'");
}

FpModule random_length2_module(const GradedAlgebra& A, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    if (rng() % 5 == 0) {
        // k + k, semisimple
        FpModule m;
        m.A = &A;
        m.deg = {0, 0};
        m.act.assign(A.nvars(), SparseMat(2, 2));
        return m;
    }
    int nv = A.nvars();
    std::uniform_int_distribution<int> coef(-3, 3);
    while (true) {
        std::vector<std::vector<int>> rowsi(nv - 1, std::vector<int>(nv));
        SparseMat chk(nv - 1, nv);
        for (int r = 0; r < nv - 1; ++r)
            for (int c = 0; c < nv; ++c) {
                rowsi[r][c] = coef(rng);
                chk.add(r, c, A.field().from_long(rowsi[r][c]));
            }
        if (rank(chk) != nv - 1) continue;
        std::vector<SVec> rels;
        for (int r = 0; r < nv - 1; ++r) {
            SVec e;
            for (int c = 0; c < nv; ++c)
                if (rowsi[r][c] != 0) {
                    SVec g = A.generator(c).coeffs();
                    svec_scale(g, A.field().from_long(rowsi[r][c]));
                    e = svec_axpy(e, A.field().one(), g);
                }
            rels.push_back(std::move(e));
        }
        // kill everything of degree >= 2 as well
        for (int b = 0; b < A.dim(); ++b)
            if (A.basis_degree(b) >= 2) rels.push_back(svec_unit(b, A.field().one()));
        FpModule m = quotient_by_elements(A, rels);
        if (m.dim() == 2) return m;
    }
}

}  // namespace tatelab
