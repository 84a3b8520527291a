#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ncp2/errors.hpp"

namespace ncp2 {

/// Sparse row: strictly increasing column indices paired with nonzero values.
template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Elt>>;

namespace detail {

/// dst <- dst - factor * src, both sorted sparse rows.
template <class F>
SparseRow<F> sparse_axpy(const F& f, const SparseRow<F>& dst, const SparseRow<F>& src,
                         const typename F::Elt& factor) {
    SparseRow<F> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, f.neg(f.mul(factor, src[j].second)));
            ++j;
        } else {
            typename F::Elt v = f.sub(dst[i].second, f.mul(factor, src[j].second));
            if (!f.is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

/// Rank of a sparse matrix by structured Gaussian elimination. At each step
/// the pivot row is the remaining row with the fewest nonzeros (Markowitz-
/// style fill control); ties break by smaller leading column, then by the
/// original row index. The tie-breaking makes the elimination order, and
/// hence the work performed, fully deterministic.
template <class F>
int rank_sparse(const F& f, std::vector<SparseRow<F>> rows) {
    for (auto& r : rows)
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<bool> used(rows.size(), false);
    int rank = 0;
    for (;;) {
        int best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            if (best < 0) {
                best = static_cast<int>(i);
                continue;
            }
            const auto& a = rows[i];
            const auto& b = rows[best];
            if (a.size() != b.size()) {
                if (a.size() < b.size()) best = static_cast<int>(i);
            } else if (a.front().first != b.front().first) {
                if (a.front().first < b.front().first) best = static_cast<int>(i);
            }
            // Equal nnz and leading column: keep the smaller row index.
        }
        if (best < 0) break;
        used[best] = true;
        ++rank;
        int pcol = rows[best].front().first;
        typename F::Elt pinv = f.inv(rows[best].front().second);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            auto it = std::lower_bound(
                rows[i].begin(), rows[i].end(), pcol,
                [](const auto& e, int c) { return e.first < c; });
            if (it == rows[i].end() || it->first != pcol) continue;
            typename F::Elt factor = f.mul(it->second, pinv);
            rows[i] = detail::sparse_axpy(f, rows[i], rows[best], factor);
        }
        rows[best].clear();
    }
    return rank;
}

}  // namespace ncp2
