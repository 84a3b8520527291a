#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncp2/errors.hpp"
#include "ncp2/poly.hpp"
#include "ncp2/subspace.hpp"

namespace ncp2 {

/// One arrow of a quiver. Arrows are referred to by their index in the
/// quiver's declaration list; that order fixes every path ordering and the
/// variable order of the path-to-monomial map.
struct Arrow {
    std::string name;
    int src;
    int dst;
};

/// A path is the sequence of arrow indices in application order: path[0] acts
/// first, path[len-1] last, so the path runs from src(path[0]) to
/// dst(path[len-1]). The empty vector stands for a lazy path e_i; which vertex
/// it sits at is carried by the surrounding (target, source) context.
using QuiverPath = std::vector<int>;

/// Finite quiver without oriented cycles. Acyclicity is enforced at
/// construction (Kahn's algorithm), which keeps every path space finite.
class Quiver {
  public:
    Quiver(int num_vertices, std::vector<Arrow> arrows)
        : num_vertices_(num_vertices), arrows_(std::move(arrows)) {
        if (num_vertices_ <= 0) throw InvalidInputError("quiver needs at least one vertex");
        for (const auto& a : arrows_) {
            if (a.src < 0 || a.src >= num_vertices_ || a.dst < 0 || a.dst >= num_vertices_)
                throw InvalidInputError("arrow endpoint out of range: " + a.name);
        }
        check_acyclic();
    }

    int num_vertices() const { return num_vertices_; }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int idx) const { return arrows_.at(static_cast<size_t>(idx)); }

    /// Length of the longest path; bounds every grading computation.
    int longest_path() const {
        // Longest-path DP over the topological order.
        std::vector<int> best(num_vertices_, 0);
        for (int v : topo_order_) {
            for (size_t a = 0; a < arrows_.size(); ++a) {
                if (arrows_[a].src == v) {
                    best[arrows_[a].dst] = std::max(best[arrows_[a].dst], best[v] + 1);
                }
            }
        }
        return *std::max_element(best.begin(), best.end());
    }

  private:
    void check_acyclic() {
        std::vector<int> indeg(num_vertices_, 0);
        for (const auto& a : arrows_) {
            if (a.src == a.dst) throw InvalidInputError("oriented cycle: loop at vertex");
            ++indeg[a.dst];
        }
        std::vector<int> queue;
        for (int v = 0; v < num_vertices_; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        size_t head = 0;
        while (head < queue.size()) {
            const int v = queue[head++];
            topo_order_.push_back(v);
            for (const auto& a : arrows_) {
                if (a.src == v && --indeg[a.dst] == 0) queue.push_back(a.dst);
            }
        }
        if (static_cast<int>(topo_order_.size()) != num_vertices_)
            throw InvalidInputError("quiver has an oriented cycle");
    }

    int num_vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> topo_order_;
};

/// All paths of the given length from source to target, ordered
/// lexicographically by their arrow-index sequences. Length 0 yields the lazy
/// path (empty sequence) exactly when target == source.
inline std::vector<QuiverPath> enumerate_paths(const Quiver& q, int target, int source,
                                               int length) {
    if (target < 0 || target >= q.num_vertices() || source < 0 || source >= q.num_vertices())
        throw InvalidInputError("path endpoint out of range");
    if (length < 0) throw InvalidInputError("path length must be nonnegative");
    std::vector<QuiverPath> out;
    QuiverPath current;
    // Depth-first extension choosing arrows in increasing index order emits
    // the sequences in lexicographic order.
    auto extend = [&](auto&& self, int at, int remaining) -> void {
        if (remaining == 0) {
            if (at == target) out.push_back(current);
            return;
        }
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).src != at) continue;
            current.push_back(a);
            self(self, q.arrow(a).dst, remaining - 1);
            current.pop_back();
        }
    };
    extend(extend, source, length);
    return out;
}

/// Spanning data for one graded piece e_target * span / e_source in length
/// `length`: rows are coefficient vectors over the lexicographic path basis.
template <class F>
struct IdealComponent {
    int target;
    int source;
    int length;
    std::vector<std::vector<typename F::Elt>> rows;
};

/// Two-sided ideal of a path algebra, stored by graded components keyed
/// (target, source, length) with canonical subspaces over the path bases.
/// Only nonzero components are stored.
template <class F>
struct RelationIdeal {
    F field;
    std::map<std::array<int, 3>, Subspace<F>> components;
    bool closed = false;

    int component_dim(int target, int source, int length) const {
        auto it = components.find({target, source, length});
        return it == components.end() ? 0 : it->second.dim();
    }
};

/// Square matrix of dimensions dim e_i(-)e_j, indexed [target][source].
using DimensionMatrix = std::vector<std::vector<long>>;

inline long total_dimension(const DimensionMatrix& m) {
    long total = 0;
    for (const auto& row : m)
        for (long v : row) total += v;
    return total;
}

namespace detail {

/// Index lookup for the lexicographic path basis of one (target, source,
/// length) piece.
inline std::map<QuiverPath, int> path_index(const Quiver& q, int target, int source, int length) {
    std::map<QuiverPath, int> idx;
    auto paths = enumerate_paths(q, target, source, length);
    for (size_t k = 0; k < paths.size(); ++k) idx.emplace(paths[k], static_cast<int>(k));
    return idx;
}

}  // namespace detail

/// Smallest two-sided ideal containing the given graded generators, computed
/// by repeated one-arrow left and right multiplication. Termination is
/// immediate: the quiver is acyclic, so lengths are bounded by the longest
/// path and each multiplication strictly increases length.
template <class F>
RelationIdeal<F> ideal_closure(const F& field, const Quiver& q,
                               const std::vector<IdealComponent<F>>& generators) {
    using Elt = typename F::Elt;
    const int max_len = q.longest_path();
    // Working rows per component key.
    std::map<std::array<int, 3>, std::vector<std::vector<Elt>>> work;
    for (const auto& g : generators) {
        if (g.length < 2) throw InvalidInputError("ideal generator of length < 2");
        const auto paths = enumerate_paths(q, g.target, g.source, g.length);
        for (const auto& row : g.rows) {
            if (row.size() != paths.size())
                throw InvalidInputError("ideal generator row does not match its path basis");
        }
        auto& dst = work[{g.target, g.source, g.length}];
        dst.insert(dst.end(), g.rows.begin(), g.rows.end());
    }

    for (int len = 2; len < max_len; ++len) {
        // Snapshot the keys at this length; products land at len+1.
        std::vector<std::array<int, 3>> keys;
        for (const auto& kv : work)
            if (kv.first[2] == len) keys.push_back(kv.first);
        for (const auto& key : keys) {
            const int tgt = key[0], src = key[1];
            const auto paths = enumerate_paths(q, tgt, src, len);
            const auto& rows = work[key];
            for (int a = 0; a < q.num_arrows(); ++a) {
                // Left multiplication by arrow a: append a to paths out of tgt.
                if (q.arrow(a).src == tgt) {
                    const int ntgt = q.arrow(a).dst;
                    auto nidx = detail::path_index(q, ntgt, src, len + 1);
                    for (const auto& row : rows) {
                        std::vector<Elt> nrow(nidx.size(), field.zero());
                        for (size_t p = 0; p < paths.size(); ++p) {
                            if (field.is_zero(row[p])) continue;
                            QuiverPath np = paths[p];
                            np.push_back(a);
                            nrow[static_cast<size_t>(nidx.at(np))] = row[p];
                        }
                        work[{ntgt, src, len + 1}].push_back(std::move(nrow));
                    }
                }
                // Right multiplication by arrow a: prepend a to paths into src.
                if (q.arrow(a).dst == src) {
                    const int nsrc = q.arrow(a).src;
                    auto nidx = detail::path_index(q, tgt, nsrc, len + 1);
                    for (const auto& row : rows) {
                        std::vector<Elt> nrow(nidx.size(), field.zero());
                        for (size_t p = 0; p < paths.size(); ++p) {
                            if (field.is_zero(row[p])) continue;
                            QuiverPath np;
                            np.push_back(a);
                            np.insert(np.end(), paths[p].begin(), paths[p].end());
                            nrow[static_cast<size_t>(nidx.at(np))] = row[p];
                        }
                        work[{tgt, nsrc, len + 1}].push_back(std::move(nrow));
                    }
                }
            }
        }
    }

    RelationIdeal<F> ideal{field, {}, true};
    for (const auto& kv : work) {
        const int ambient = static_cast<int>(
            enumerate_paths(q, kv.first[0], kv.first[1], kv.first[2]).size());
        auto sub = Subspace<F>::from_span(field, ambient, kv.second);
        if (sub.dim() > 0) ideal.components.emplace(kv.first, std::move(sub));
    }
    return ideal;
}

/// Dimension matrix of the free path algebra: dim e_i(kQ)e_j counts paths of
/// every length.
inline DimensionMatrix free_dims(const Quiver& q) {
    const int n = q.num_vertices();
    DimensionMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int len = 0; len <= q.longest_path(); ++len)
                m[i][j] += static_cast<long>(enumerate_paths(q, i, j, len).size());
    return m;
}

/// Dimension matrix of the ideal itself: component dimensions summed over
/// lengths.
template <class F>
DimensionMatrix ideal_dims(const Quiver& q, const RelationIdeal<F>& ideal) {
    const int n = q.num_vertices();
    DimensionMatrix m(n, std::vector<long>(n, 0));
    for (const auto& kv : ideal.components) m[kv.first[0]][kv.first[1]] += kv.second.dim();
    return m;
}

/// Dimension matrix of the quotient algebra kQ/I, entrywise free minus ideal.
template <class F>
DimensionMatrix quotient_dims(const Quiver& q, const RelationIdeal<F>& ideal) {
    if (!ideal.closed) throw InvalidInputError("quotient_dims needs a closed ideal");
    auto m = free_dims(q);
    for (const auto& kv : ideal.components) m[kv.first[0]][kv.first[1]] -= kv.second.dim();
    return m;
}

/// Rank of the composition map
///   sum_m [ e_target(kQ)e_m (x) e_m I e_source ] + [ e_target I e_m (x) e_m(kQ)e_source ]
///     -> e_target(kQ)e_source,
/// with path factors of length >= 1. This measures how much of the (target,
/// source) part of the ideal is already generated by shorter components.
template <class F>
int composition_image_rank(const Quiver& q, const RelationIdeal<F>& ideal, int target,
                           int source) {
    using Elt = typename F::Elt;
    if (target < 0 || target >= q.num_vertices() || source < 0 || source >= q.num_vertices())
        throw InvalidInputError("composition endpoint out of range");
    const int max_len = q.longest_path();
    std::map<int, std::vector<std::vector<Elt>>> rows_by_len;

    for (const auto& kv : ideal.components) {
        const int ctgt = kv.first[0], csrc = kv.first[1], clen = kv.first[2];
        const auto& basis = kv.second.basis;
        // Left factor: paths target <- ctgt composed onto components with
        // csrc == source.
        if (csrc == source) {
            const auto cpaths = enumerate_paths(q, ctgt, csrc, clen);
            for (int k = 1; clen + k <= max_len; ++k) {
                const auto lpaths = enumerate_paths(q, target, ctgt, k);
                if (lpaths.empty()) continue;
                auto nidx = detail::path_index(q, target, source, clen + k);
                for (const auto& lp : lpaths) {
                    for (int r = 0; r < basis.rows; ++r) {
                        std::vector<Elt> nrow(nidx.size(), ideal.field.zero());
                        for (size_t p = 0; p < cpaths.size(); ++p) {
                            const auto& v = basis.at(r, static_cast<int>(p));
                            if (ideal.field.is_zero(v)) continue;
                            QuiverPath np = cpaths[p];
                            np.insert(np.end(), lp.begin(), lp.end());
                            nrow[static_cast<size_t>(nidx.at(np))] = v;
                        }
                        rows_by_len[clen + k].push_back(std::move(nrow));
                    }
                }
            }
        }
        // Right factor: components with ctgt == target composed with paths
        // csrc <- source.
        if (ctgt == target) {
            const auto cpaths = enumerate_paths(q, ctgt, csrc, clen);
            for (int k = 1; clen + k <= max_len; ++k) {
                const auto rpaths = enumerate_paths(q, csrc, source, k);
                if (rpaths.empty()) continue;
                auto nidx = detail::path_index(q, target, source, clen + k);
                for (const auto& rp : rpaths) {
                    for (int r = 0; r < basis.rows; ++r) {
                        std::vector<Elt> nrow(nidx.size(), ideal.field.zero());
                        for (size_t p = 0; p < cpaths.size(); ++p) {
                            const auto& v = basis.at(r, static_cast<int>(p));
                            if (ideal.field.is_zero(v)) continue;
                            QuiverPath np = rp;
                            np.insert(np.end(), cpaths[p].begin(), cpaths[p].end());
                            nrow[static_cast<size_t>(nidx.at(np))] = v;
                        }
                        rows_by_len[clen + k].push_back(std::move(nrow));
                    }
                }
            }
        }
    }

    int rank = 0;
    for (const auto& kv : rows_by_len) {
        const int ambient = static_cast<int>(enumerate_paths(q, target, source, kv.first).size());
        rank += Subspace<F>::from_span(ideal.field, ambient, kv.second).dim();
    }
    return rank;
}

/// The path-to-monomial map: a path becomes the product of one variable per
/// arrow it uses, variables indexed by arrow declaration order.
template <class F>
Poly<F> phi_monomial_of_path(const F& field, const Quiver& q, const QuiverPath& path) {
    std::vector<int> exps(static_cast<size_t>(q.num_arrows()), 0);
    for (int a : path) ++exps[static_cast<size_t>(a)];
    return Poly<F>::monomial(field, exps, field.one());
}

/// Images under the path-to-monomial map of all component basis rows: the
/// generators of the multigraded ideal J = (phi(I)) in k[x_a]. Each output is
/// homogeneous for the Z^{Q_0} grading deg x_a = e_t(a) - e_s(a).
template <class F>
std::vector<Poly<F>> phi_monomial(const F& field, const Quiver& q, const RelationIdeal<F>& ideal) {
    std::vector<Poly<F>> out;
    for (const auto& kv : ideal.components) {
        const auto paths = enumerate_paths(q, kv.first[0], kv.first[1], kv.first[2]);
        const auto& basis = kv.second.basis;
        for (int r = 0; r < basis.rows; ++r) {
            Poly<F> g = Poly<F>::constant(field, q.num_arrows(), field.zero());
            for (size_t p = 0; p < paths.size(); ++p) {
                const auto& v = basis.at(r, static_cast<int>(p));
                if (field.is_zero(v)) continue;
                std::vector<int> exps(static_cast<size_t>(q.num_arrows()), 0);
                for (int a : paths[p]) ++exps[static_cast<size_t>(a)];
                g = g + Poly<F>::monomial(field, exps, v);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

namespace detail {

/// Z^{Q_0} degree of an exponent vector: sum of e_t(a) - e_s(a) per use.
inline std::vector<long> multidegree(const Quiver& q, const std::vector<int>& exps) {
    std::vector<long> deg(static_cast<size_t>(q.num_vertices()), 0);
    for (int a = 0; a < q.num_arrows(); ++a) {
        deg[static_cast<size_t>(q.arrow(a).dst)] += exps[static_cast<size_t>(a)];
        deg[static_cast<size_t>(q.arrow(a).src)] -= exps[static_cast<size_t>(a)];
    }
    return deg;
}

/// All exponent vectors with the given total degree and Z^{Q_0} degree,
/// lexicographically by exponent vector.
inline std::vector<std::vector<int>> monomials_of_multidegree(const Quiver& q, int total,
                                                              const std::vector<long>& target) {
    std::vector<std::vector<int>> out;
    std::vector<int> exps(static_cast<size_t>(q.num_arrows()), 0);
    auto rec = [&](auto&& self, int arrow, int remaining) -> void {
        if (arrow == q.num_arrows()) {
            if (remaining == 0 && multidegree(q, exps) == target) out.push_back(exps);
            return;
        }
        for (int m = remaining; m >= 0; --m) {
            exps[static_cast<size_t>(arrow)] = m;
            self(self, arrow + 1, remaining - m);
        }
        exps[static_cast<size_t>(arrow)] = 0;
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Preimage of a multigraded monomial-variable ideal under the path map:
/// for each (target, source, length) piece, the span of J in the matching
/// multidegree is intersected with the coordinate subspace of path monomials
/// and pulled back along the path <-> monomial bijection. For a closed ideal
/// I, ideal_from_moduli(phi_monomial(I)) reproduces I.
template <class F>
RelationIdeal<F> ideal_from_moduli(const F& field, const Quiver& q,
                                   const std::vector<Poly<F>>& gens) {
    using Elt = typename F::Elt;
    struct Gen {
        const Poly<F>* poly;
        int total;
        std::vector<long> deg;
    };
    std::vector<Gen> gen_data;
    for (const auto& g : gens) {
        if (g.terms.empty()) continue;
        if (g.nvars != q.num_arrows())
            throw InvalidInputError("moduli ideal generator has wrong variable count");
        bool first = true;
        int total = 0;
        std::vector<long> deg;
        for (const auto& term : g.terms) {
            int t = 0;
            for (int e : term.first) t += e;
            auto d = detail::multidegree(q, term.first);
            if (first) {
                total = t;
                deg = d;
                first = false;
            } else if (t != total || d != deg) {
                throw InvalidInputError("moduli ideal generator is not multigraded-homogeneous");
            }
        }
        gen_data.push_back(Gen{&g, total, std::move(deg)});
    }

    RelationIdeal<F> ideal{field, {}, true};
    const int max_len = q.longest_path();
    for (int tgt = 0; tgt < q.num_vertices(); ++tgt) {
        for (int src = 0; src < q.num_vertices(); ++src) {
            std::vector<long> delta(static_cast<size_t>(q.num_vertices()), 0);
            if (tgt == src) continue;
            delta[static_cast<size_t>(tgt)] = 1;
            delta[static_cast<size_t>(src)] = -1;
            for (int len = 2; len <= max_len; ++len) {
                const auto paths = enumerate_paths(q, tgt, src, len);
                if (paths.empty()) continue;
                const auto monos = detail::monomials_of_multidegree(q, len, delta);
                std::map<std::vector<int>, int> mono_idx;
                for (size_t k = 0; k < monos.size(); ++k)
                    mono_idx.emplace(monos[k], static_cast<int>(k));
                const int ambient = static_cast<int>(monos.size());

                // Span of J in this (multidegree, total degree) piece.
                std::vector<std::vector<Elt>> jrows;
                for (const auto& gd : gen_data) {
                    if (gd.total > len) continue;
                    std::vector<long> mdeg(delta.size());
                    for (size_t v = 0; v < delta.size(); ++v) mdeg[v] = delta[v] - gd.deg[v];
                    for (const auto& m :
                         detail::monomials_of_multidegree(q, len - gd.total, mdeg)) {
                        std::vector<Elt> row(static_cast<size_t>(ambient), field.zero());
                        for (const auto& term : gd.poly->terms) {
                            std::vector<int> prod = term.first;
                            for (size_t a = 0; a < prod.size(); ++a) prod[a] += m[a];
                            row[static_cast<size_t>(mono_idx.at(prod))] = term.second;
                        }
                        jrows.push_back(std::move(row));
                    }
                }
                if (jrows.empty()) continue;
                auto jspan = Subspace<F>::from_span(field, ambient, jrows);

                // Coordinate subspace spanned by the path monomials.
                std::vector<int> path_cols;
                path_cols.reserve(paths.size());
                std::map<std::vector<int>, int> seen;
                for (size_t p = 0; p < paths.size(); ++p) {
                    std::vector<int> exps(static_cast<size_t>(q.num_arrows()), 0);
                    for (int a : paths[p]) ++exps[static_cast<size_t>(a)];
                    auto ins = seen.emplace(exps, static_cast<int>(p));
                    if (!ins.second)
                        throw InternalInconsistencyError(
                            "path-to-monomial map is not injective on this component");
                    path_cols.push_back(mono_idx.at(exps));
                }
                std::vector<std::vector<Elt>> unit_rows;
                for (int col : path_cols) {
                    std::vector<Elt> u(static_cast<size_t>(ambient), field.zero());
                    u[static_cast<size_t>(col)] = field.one();
                    unit_rows.push_back(std::move(u));
                }
                auto pspan = Subspace<F>::from_span(field, ambient, unit_rows);
                auto inter = subspace_intersect(jspan, pspan);
                if (inter.dim() == 0) continue;

                // Pull back: read off the coefficients at the path columns.
                std::vector<std::vector<Elt>> rows;
                for (int r = 0; r < inter.basis.rows; ++r) {
                    std::vector<Elt> row(paths.size(), field.zero());
                    for (size_t p = 0; p < paths.size(); ++p)
                        row[p] = inter.basis.at(r, path_cols[p]);
                    rows.push_back(std::move(row));
                }
                auto sub =
                    Subspace<F>::from_span(field, static_cast<int>(paths.size()), rows);
                if (sub.dim() > 0) ideal.components.emplace(std::array<int, 3>{tgt, src, len},
                                                            std::move(sub));
            }
        }
    }
    return ideal;
}

/// King stability for a representation with dimension vector (1,...,1) given
/// by one scalar per arrow: theta must sum to zero, and the representation is
/// stable when every proper nonzero vertex subset closed under the nonzero
/// arrows has strictly positive theta-weight. For theta = (-2,1,...,1) this
/// is reachability of every vertex from vertex 0 through nonzero scalars.
template <class F>
bool rep_is_theta_stable(const F& field, const Quiver& q,
                         const std::vector<typename F::Elt>& scalars,
                         const std::vector<long>& theta) {
    if (static_cast<int>(scalars.size()) != q.num_arrows())
        throw InvalidInputError("one scalar per arrow required");
    if (static_cast<int>(theta.size()) != q.num_vertices())
        throw InvalidInputError("one theta weight per vertex required");
    long sum = 0;
    for (long t : theta) sum += t;
    if (sum != 0) throw InvalidInputError("theta must sum to zero on the dimension vector");
    const int n = q.num_vertices();
    if (n > 20) throw ResourceCapError("stability scan supports at most 20 vertices");
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool closed = true;
        for (int a = 0; a < q.num_arrows() && closed; ++a) {
            if (field.is_zero(scalars[static_cast<size_t>(a)])) continue;
            if ((mask >> q.arrow(a).src & 1u) && !(mask >> q.arrow(a).dst & 1u)) closed = false;
        }
        if (!closed) continue;
        long weight = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) weight += theta[static_cast<size_t>(v)];
        if (weight <= 0) return false;
    }
    return true;
}

/// Three-vertex quiver with arrows x0,y0,z0: 0 -> 1 and x1,y1,z1: 1 -> 2.
/// The length-2 path [w1, 3+w2] sits at position 3*w1 + w2 of the
/// (target 2, source 0) path basis.
inline Quiver beilinson_quiver() {
    return Quiver(3, {{"x0", 0, 1},
                      {"y0", 0, 1},
                      {"z0", 0, 1},
                      {"x1", 1, 2},
                      {"y1", 1, 2},
                      {"z1", 1, 2}});
}

/// Four-vertex quiver with d parallel arrows 1 -> 2 plus one 0 -> 2, two
/// 0 -> 1, two 2 -> 3, and one 1 -> 3. Arrow indices in declaration order:
/// 0..d-1 the parallel block, d the diagonal 0 -> 2, d+1 and d+2 the 0 -> 1
/// pair, d+3 and d+4 the 2 -> 3 pair, d+5 the diagonal 1 -> 3.
inline Quiver fd_quiver(int d) {
    if (d < 1) throw InvalidInputError("parallel-block size d must be at least 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= d; ++i) arrows.push_back({"a" + std::to_string(i), 1, 2});
    arrows.push_back({"a" + std::to_string(d + 1), 0, 2});
    arrows.push_back({"a" + std::to_string(d + 2), 0, 1});
    arrows.push_back({"a" + std::to_string(d + 3), 0, 1});
    arrows.push_back({"a" + std::to_string(d + 4), 2, 3});
    arrows.push_back({"a" + std::to_string(d + 5), 2, 3});
    arrows.push_back({"a" + std::to_string(d + 6), 1, 3});
    return Quiver(4, std::move(arrows));
}

/// Standard relation components of the fd_quiver: for u = 0..d-2 the
/// (2, 0, 2) rows [a_{d+3}, a_{u+1}] - [a_{d+2}, a_{u+2}] (arrow indices
/// d+2, u and d+1, u+1) and the (3, 1, 2) rows [a_{u+1}, a_{d+5}] -
/// [a_{u+2}, a_{d+4}] (arrow indices u, d+4 and u+1, d+3).
template <class F>
std::vector<IdealComponent<F>> fd_ideal_components(const F& field, int d) {
    if (d < 2) throw InvalidInputError("relation block needs d >= 2");
    const auto q = fd_quiver(d);
    auto idx20 = detail::path_index(q, 2, 0, 2);
    auto idx31 = detail::path_index(q, 3, 1, 2);
    IdealComponent<F> f{2, 0, 2, {}};
    IdealComponent<F> g{3, 1, 2, {}};
    for (int u = 0; u + 1 < d; ++u) {
        std::vector<typename F::Elt> frow(idx20.size(), field.zero());
        frow[static_cast<size_t>(idx20.at(QuiverPath{d + 2, u}))] = field.one();
        frow[static_cast<size_t>(idx20.at(QuiverPath{d + 1, u + 1}))] = field.neg(field.one());
        f.rows.push_back(std::move(frow));
        std::vector<typename F::Elt> grow(idx31.size(), field.zero());
        grow[static_cast<size_t>(idx31.at(QuiverPath{u, d + 4}))] = field.one();
        grow[static_cast<size_t>(idx31.at(QuiverPath{u + 1, d + 3}))] = field.neg(field.one());
        g.rows.push_back(std::move(grow));
    }
    return {f, g};
}

}  // namespace ncp2
