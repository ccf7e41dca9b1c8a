#include "tatelab/linalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace tatelab {

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        Scalar v = c * b[j].second;
        if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
    }
    return out;
}

void svec_scale(SVec& a, const Scalar& c) {
    if (c.is_zero()) {
        a.clear();
        return;
    }
    for (auto& [idx, v] : a) v *= c;
}

Scalar svec_get(const SVec& a, int idx, const Scalar& zero) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != a.end() && it->first == idx) return it->second;
    return zero;
}

SVec svec_unit(int idx, const Scalar& one) { return SVec{{idx, one}}; }

void SparseMat::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

SparseMat SparseMat::transpose() const {
    SparseMat t(ncols, nrows);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) t.rows[c].emplace_back(r, v);
    return t;
}

SVec SparseMat::apply(const SVec& x, const Scalar& zero) const {
    SVec y;
    for (int r = 0; r < nrows; ++r) {
        Scalar acc = zero;
        size_t i = 0, j = 0;
        const auto& row = rows[r];
        while (i < row.size() && j < x.size()) {
            if (row[i].first < x[j].first)
                ++i;
            else if (row[i].first > x[j].first)
                ++j;
            else
                acc += row[i++].second * x[j++].second;
        }
        if (!acc.is_zero()) y.emplace_back(r, std::move(acc));
    }
    return y;
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& r : rows) n += static_cast<long>(r.size());
    return n;
}

Echelon eliminate(SparseMat m, bool full_reduce, int max_rank) {
    Echelon ech;
    std::vector<SVec>& rows = m.rows;
    std::vector<int> col_count(m.ncols, 0);
    std::vector<std::vector<int>> col_rows(m.ncols);  // stale entries allowed
    for (int r = 0; r < m.nrows; ++r)
        for (const auto& [c, v] : rows[r]) {
            ++col_count[c];
            col_rows[c].push_back(r);
        }

    std::vector<char> done(rows.size(), 0);
    size_t remaining = 0;
    for (const auto& r : rows)
        if (!r.empty()) ++remaining;

    auto update_counts = [&](int rid, const SVec& before, const SVec& after) {
        for (const auto& [c, v] : before) --col_count[c];
        for (const auto& [c, v] : after) {
            ++col_count[c];
            col_rows[c].push_back(rid);
        }
    };

    while (remaining > 0) {
        if (max_rank >= 0 && ech.rank() >= max_rank) break;
        // shortest unprocessed row, then its rarest column
        int best = -1;
        size_t best_len = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            if (best < 0 || rows[r].size() < best_len) {
                best = static_cast<int>(r);
                best_len = rows[r].size();
                if (best_len == 1) break;
            }
        }
        if (best < 0) break;
        int pcol = -1, pcount = 0;
        for (const auto& [c, v] : rows[best]) {
            if (pcol < 0 || col_count[c] < pcount) {
                pcol = c;
                pcount = col_count[c];
            }
        }
        SVec prow = std::move(rows[best]);
        update_counts(best, prow, {});
        rows[best].clear();
        done[best] = 1;
        --remaining;
        Scalar pval = svec_get(prow, pcol, Scalar());
        svec_scale(prow, pval.inv());

        std::vector<int> cands;
        cands.swap(col_rows[pcol]);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (int rid : cands) {
            if (done[rid] || rows[rid].empty()) continue;
            Scalar v = svec_get(rows[rid], pcol, Scalar());
            if (v.is_zero()) continue;
            SVec updated = svec_axpy(rows[rid], -v, prow);
            update_counts(rid, rows[rid], updated);
            rows[rid] = std::move(updated);
            if (rows[rid].empty()) --remaining;
        }
        ech.rows.push_back(std::move(prow));
        ech.pivot_col.push_back(pcol);
    }

    if (full_reduce && ech.rank() > 1) {
        std::unordered_map<int, int> row_of_pivot;
        for (int i = 0; i < ech.rank(); ++i) row_of_pivot[ech.pivot_col[i]] = i;
        for (int i = ech.rank() - 2; i >= 0; --i) {
            // rows after i are already fully reduced; one pass suffices
            std::vector<std::pair<int, Scalar>> hits;
            for (const auto& [c, v] : ech.rows[i]) {
                auto it = row_of_pivot.find(c);
                if (it != row_of_pivot.end() && it->second > i) hits.emplace_back(it->second, v);
            }
            for (const auto& [j, v] : hits) ech.rows[i] = svec_axpy(ech.rows[i], -v, ech.rows[j]);
        }
    }
    return ech;
}

SparseMat matmul(const SparseMat& a, const SparseMat& b) {
    if (a.ncols != b.nrows) throw MathError("matrix product dimension mismatch");
    SparseMat out(a.nrows, b.ncols);
    for (int r = 0; r < a.nrows; ++r) {
        SVec acc;
        for (const auto& [k, v] : a.rows[r]) acc = svec_axpy(acc, v, b.rows[k]);
        out.rows[r] = std::move(acc);
    }
    return out;
}

int rank(const SparseMat& m) { return eliminate(m, false).rank(); }

std::vector<SVec> kernel_basis(const SparseMat& m, const Scalar& one) {
    Echelon ech = eliminate(m, true);
    std::vector<char> is_pivot(m.ncols, 0);
    for (int c : ech.pivot_col) is_pivot[c] = 1;
    // column f -> entries it contributes to each kernel vector
    std::vector<SVec> out;
    for (int f = 0; f < m.ncols; ++f) {
        if (is_pivot[f]) continue;
        SVec v{{f, one}};
        for (int i = 0; i < ech.rank(); ++i) {
            Scalar c = svec_get(ech.rows[i], f, Scalar());
            if (c.is_zero()) continue;
            auto it = std::lower_bound(v.begin(), v.end(), ech.pivot_col[i],
                                       [](const auto& e, int idx) { return e.first < idx; });
            v.insert(it, {ech.pivot_col[i], -c});
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

/* Shared one-pass reduction against inter-reduced pivot rows.  Rows carry
 * no pivot column other than their own, so a single sweep over v's
 * current pivot-column entries is complete. */
std::vector<std::pair<int, Scalar>> pivot_hits(const SVec& v,
                                               const std::unordered_map<int, int>& pivots) {
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& [c, val] : v) {
        auto it = pivots.find(c);
        if (it != pivots.end()) hits.emplace_back(it->second, val);
    }
    return hits;
}

}  // namespace

SVec Basis::reduce(SVec v) const {
    std::unordered_map<int, int> pivots;
    for (size_t i = 0; i < rows_.size(); ++i) pivots[pivot_col_[i]] = static_cast<int>(i);
    for (const auto& [i, val] : pivot_hits(v, pivots)) v = svec_axpy(v, -val, rows_[i]);
    return v;
}

bool Basis::insert(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int pcol = v[0].first;
    svec_scale(v, v[0].second.inv());
    for (size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = svec_get(rows_[i], pcol, Scalar());
        if (!c.is_zero()) rows_[i] = svec_axpy(rows_[i], -c, v);
    }
    rows_.push_back(std::move(v));
    pivot_col_.push_back(pcol);
    return true;
}

ColumnSolver::ColumnSolver(const std::vector<SVec>& columns, int ambient_dim)
    : ambient_(ambient_dim), ncols_(static_cast<int>(columns.size())) {
    std::unordered_map<int, int> pivots;
    for (int j = 0; j < ncols_; ++j) {
        SVec v = columns[j];
        if (v.empty()) continue;
        Scalar one = v[0].second * v[0].second.inv();
        SVec combo{{j, one}};
        for (const auto& [i, val] : pivot_hits(v, pivots)) {
            combo = svec_axpy(combo, -val, combo_[i]);
            v = svec_axpy(v, -val, rows_[i]);
        }
        if (v.empty()) continue;  // dependent column
        int pcol = v[0].first;
        Scalar pinv = v[0].second.inv();
        svec_scale(v, pinv);
        svec_scale(combo, pinv);
        for (size_t i = 0; i < rows_.size(); ++i) {
            Scalar c = svec_get(rows_[i], pcol, Scalar());
            if (!c.is_zero()) {
                rows_[i] = svec_axpy(rows_[i], -c, v);
                combo_[i] = svec_axpy(combo_[i], -c, combo);
            }
        }
        pivots[pcol] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        combo_.push_back(std::move(combo));
        pivot_col_.push_back(pcol);
    }
}

std::optional<SVec> ColumnSolver::solve(const SVec& target) const {
    std::unordered_map<int, int> pivots;
    for (size_t i = 0; i < rows_.size(); ++i) pivots[pivot_col_[i]] = static_cast<int>(i);
    SVec v = target;
    SVec x;
    for (const auto& [i, val] : pivot_hits(v, pivots)) {
        x = svec_axpy(x, val, combo_[i]);
        v = svec_axpy(v, -val, rows_[i]);
    }
    if (!v.empty()) return std::nullopt;
    return x;
}

}  // namespace tatelab
