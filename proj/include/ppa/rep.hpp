#pragma once

// Representations of a double quiver over an exact field, and the module
// toolbox built on them: socle, radical, filtrations, Hom spaces,
// isomorphism testing, quotients and generated submodules.

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppa/field.hpp"
#include "ppa/matrix.hpp"
#include "ppa/quiver.hpp"

namespace ppa {

/// One matrix per vertex, V_v -> W_v.
template <class F>
using GradedMap = std::vector<Matrix<F>>;

template <class F>
class Rep {
public:
    Rep(F field, Quiver dq, DimVector dims, std::vector<Matrix<F>> maps)
        : field_(std::move(field)), quiver_(std::move(dq)), dims_(std::move(dims)), maps_(std::move(maps)) {}

    const F& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const DimVector& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const { return dims_.total(); }
    const Matrix<F>& map(std::size_t a) const { return maps_[a]; }
    const std::vector<Matrix<F>>& maps() const { return maps_; }

private:
    F field_;
    Quiver quiver_;
    DimVector dims_;
    std::vector<Matrix<F>> maps_;
};

/// Per-vertex subspaces of a representation. Not necessarily arrow-closed
/// until checked with is_submodule.
template <class F>
struct Subrep {
    std::vector<Subspace<F>> spaces;

    DimVector dims() const {
        DimVector d(spaces.size());
        for (std::size_t v = 0; v < spaces.size(); ++v) d[v] = spaces[v].dim();
        return d;
    }
    bool contains(const Subrep& o) const {
        for (std::size_t v = 0; v < spaces.size(); ++v)
            if (!spaces[v].contains(o.spaces[v])) return false;
        return true;
    }
    friend bool operator==(const Subrep& a, const Subrep& b) { return a.spaces == b.spaces; }
    friend bool operator<(const Subrep& a, const Subrep& b) {
        for (std::size_t v = 0; v < a.spaces.size(); ++v) {
            if (a.spaces[v] < b.spaces[v]) return true;
            if (b.spaces[v] < a.spaces[v]) return false;
        }
        return false;
    }
};

template <class F>
std::vector<Matrix<F>> relation_residuals(const Rep<F>& rep) {
    const Quiver& dq = rep.quiver();
    const F& f = rep.field();
    std::vector<Matrix<F>> res;
    for (std::size_t v = 0; v < dq.num_vertices(); ++v) res.emplace_back(f, rep.dim(v), rep.dim(v));
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        if (!dq.is_original(a)) continue;
        const auto& ar = dq.arrow(a);
        const auto b = dq.bar(a);
        res[ar.target] = res[ar.target] + rep.map(a) * rep.map(b);
        res[ar.source] = res[ar.source] - rep.map(b) * rep.map(a);
    }
    return res;
}

/// Validated construction. With `preprojective` set, the vertex-local
/// relation must hold exactly at every vertex.
template <class F>
Rep<F> make_rep(const F& field, const Quiver& dq, const DimVector& dims, std::vector<Matrix<F>> maps,
                bool preprojective) {
    if (!dq.is_double()) throw validation_error("NotDoubled", "representations live on a double quiver");
    if (dims.size() != dq.num_vertices()) throw validation_error("ShapeMismatch", "dimension vector length");
    if (maps.size() != dq.num_arrows()) throw validation_error("ShapeMismatch", "one matrix per arrow expected");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto& ar = dq.arrow(a);
        if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source])
            throw validation_error("ShapeMismatch", "matrix of arrow '" + ar.name + "' has the wrong shape");
    }
    Rep<F> rep(field, dq, dims, std::move(maps));
    if (preprojective) {
        auto res = relation_residuals(rep);
        std::string bad;
        for (std::size_t v = 0; v < res.size(); ++v)
            if (!res[v].is_zero()) bad += (bad.empty() ? "" : ",") + dq.vertices()[v];
        if (!bad.empty()) throw validation_error("RelationViolated", "preprojective relation fails at vertex " + bad);
    }
    return rep;
}

template <class F>
Rep<F> zero_maps_rep(const F& field, const Quiver& dq, const DimVector& dims) {
    std::vector<Matrix<F>> maps;
    for (const auto& ar : dq.arrows()) maps.emplace_back(field, dims[ar.target], dims[ar.source]);
    return Rep<F>(field, dq, dims, std::move(maps));
}

template <class F, class G>
Rep<G> reduce_rep(const Rep<F>& rep, const G& field) {
    std::vector<Matrix<G>> maps;
    for (const auto& m : rep.maps()) maps.push_back(reduce_matrix(m, field));
    return Rep<G>(field, rep.quiver(), rep.dims(), std::move(maps));
}

template <class G>
Subrep<G> reduce_subrep(const Subrep<Rationals>& s, const G& field) {
    Subrep<G> out;
    for (const auto& sp : s.spaces) out.spaces.push_back(Subspace<G>::span(reduce_matrix(sp.basis(), field)));
    return out;
}

template <class F>
Subrep<F> zero_subrep(const Rep<F>& rep) {
    Subrep<F> s;
    for (std::size_t v = 0; v < rep.quiver().num_vertices(); ++v) s.spaces.emplace_back(rep.field(), rep.dim(v));
    return s;
}

template <class F>
Subrep<F> full_subrep(const Rep<F>& rep) {
    Subrep<F> s;
    for (std::size_t v = 0; v < rep.quiver().num_vertices(); ++v)
        s.spaces.push_back(Subspace<F>::full(rep.field(), rep.dim(v)));
    return s;
}

template <class F>
bool is_submodule(const Rep<F>& rep, const Subrep<F>& s) {
    if (s.spaces.size() != rep.quiver().num_vertices()) return false;
    for (std::size_t v = 0; v < s.spaces.size(); ++v)
        if (s.spaces[v].ambient_dim() != rep.dim(v)) return false;
    for (std::size_t a = 0; a < rep.quiver().num_arrows(); ++a) {
        const auto& ar = rep.quiver().arrow(a);
        if (!s.spaces[ar.target].contains(s.spaces[ar.source].image(rep.map(a)))) return false;
    }
    return true;
}

template <class F>
void require_submodule(const Rep<F>& rep, const Subrep<F>& s) {
    if (!is_submodule(rep, s)) throw validation_error("NotSubmodule", "subspaces are not closed under the arrows");
}

/// Common kernel of all outgoing arrows at each vertex.
template <class F>
Subrep<F> socle(const Rep<F>& rep) {
    const Quiver& dq = rep.quiver();
    Subrep<F> s;
    for (std::size_t v = 0; v < dq.num_vertices(); ++v) {
        std::vector<Matrix<F>> outs;
        for (auto a : dq.arrows_out(v)) outs.push_back(rep.map(a));
        Matrix<F> stacked = Matrix<F>::vstack(rep.field(), rep.dim(v), outs);
        s.spaces.push_back(Subspace<F>::span(kernel_basis(stacked)));
    }
    return s;
}

/// Sum of the images of all arrows at each vertex.
template <class F>
Subrep<F> arrow_image(const Rep<F>& rep, const Subrep<F>& from) {
    const Quiver& dq = rep.quiver();
    Subrep<F> s = zero_subrep(rep);
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        s.spaces[ar.target] = s.spaces[ar.target].sum(from.spaces[ar.source].image(rep.map(a)));
    }
    return s;
}

template <class F>
Subrep<F> radical(const Rep<F>& rep) {
    return arrow_image(rep, full_subrep(rep));
}

/// {v : x_a v lies in target for every arrow a out of v's vertex}.
template <class F>
Subrep<F> arrow_preimage(const Rep<F>& rep, const Subrep<F>& target) {
    const Quiver& dq = rep.quiver();
    Subrep<F> s;
    for (std::size_t v = 0; v < dq.num_vertices(); ++v) {
        auto sp = Subspace<F>::full(rep.field(), rep.dim(v));
        for (auto a : dq.arrows_out(v))
            sp = sp.intersect(Subspace<F>::preimage(rep.map(a), target.spaces[dq.arrow(a).target]));
        s.spaces.push_back(std::move(sp));
    }
    return s;
}

/// 0 = V^(0) within V^(1) = socle within ..., iterated until it stops growing.
template <class F>
std::vector<Subrep<F>> socle_filtration(const Rep<F>& rep) {
    std::vector<Subrep<F>> chain{zero_subrep(rep)};
    while (true) {
        auto next = arrow_preimage(rep, chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

/// V, P_+ V, P_+^2 V, ... until it stops shrinking.
template <class F>
std::vector<Subrep<F>> radical_filtration(const Rep<F>& rep) {
    std::vector<Subrep<F>> chain{full_subrep(rep)};
    while (true) {
        auto next = arrow_image(rep, chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

template <class F>
bool is_nilpotent(const Rep<F>& rep) {
    return radical_filtration(rep).back().dims().is_zero();
}

/// Largest arrow-closed subspace contained in the given per-vertex spaces.
template <class F>
Subrep<F> largest_submodule_within(const Rep<F>& rep, Subrep<F> w) {
    while (true) {
        auto pre = arrow_preimage(rep, w);
        Subrep<F> next;
        for (std::size_t v = 0; v < w.spaces.size(); ++v) next.spaces.push_back(w.spaces[v].intersect(pre.spaces[v]));
        if (next == w) return w;
        w = std::move(next);
    }
}

/// Smallest submodule containing the given (vertex, vector) pairs.
template <class F>
Subrep<F> sub_generated(const Rep<F>& rep, const std::vector<std::pair<std::size_t, Vec<F>>>& vectors) {
    Subrep<F> s = zero_subrep(rep);
    for (const auto& [v, x] : vectors) {
        if (x.size() != rep.dim(v)) throw validation_error("ShapeMismatch", "generator has the wrong length");
        s.spaces[v] = s.spaces[v].sum(Subspace<F>::span(rep.field(), rep.dim(v), {x}));
    }
    while (true) {
        auto img = arrow_image(rep, s);
        Subrep<F> next;
        for (std::size_t v = 0; v < s.spaces.size(); ++v) next.spaces.push_back(s.spaces[v].sum(img.spaces[v]));
        if (next == s) return s;
        s = std::move(next);
    }
}

template <class F>
Subrep<F> subrep_sum(const Subrep<F>& a, const Subrep<F>& b) {
    Subrep<F> s;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) s.spaces.push_back(a.spaces[v].sum(b.spaces[v]));
    return s;
}

template <class F>
Subrep<F> subrep_intersect(const Subrep<F>& a, const Subrep<F>& b) {
    Subrep<F> s;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) s.spaces.push_back(a.spaces[v].intersect(b.spaces[v]));
    return s;
}

/// Image of a subrep under a graded map.
template <class F>
Subrep<F> map_subrep(const GradedMap<F>& g, const Subrep<F>& s) {
    Subrep<F> out;
    for (std::size_t v = 0; v < s.spaces.size(); ++v) out.spaces.push_back(s.spaces[v].image(g[v]));
    return out;
}

template <class F>
GradedMap<F> compose(const GradedMap<F>& outer, const GradedMap<F>& inner) {
    GradedMap<F> out;
    for (std::size_t v = 0; v < outer.size(); ++v) out.push_back(outer[v] * inner[v]);
    return out;
}

template <class F>
GradedMap<F> identity_map(const Rep<F>& rep) {
    GradedMap<F> out;
    for (std::size_t v = 0; v < rep.quiver().num_vertices(); ++v)
        out.push_back(Matrix<F>::identity(rep.field(), rep.dim(v)));
    return out;
}

template <class F>
bool is_injective_map(const GradedMap<F>& g) {
    for (const auto& m : g)
        if (rank(m) != m.cols()) return false;
    return true;
}

template <class F>
bool is_homomorphism(const Rep<F>& v, const Rep<F>& w, const GradedMap<F>& g) {
    for (std::size_t a = 0; a < v.quiver().num_arrows(); ++a) {
        const auto& ar = v.quiver().arrow(a);
        if (!(g[ar.target] * v.map(a) == w.map(a) * g[ar.source])) return false;
    }
    return true;
}

namespace detail {

/// Flat indexing of the entries of a graded map V -> W.
struct GradedIndex {
    std::vector<std::size_t> offset, rows, cols;

    GradedIndex(const DimVector& target, const DimVector& source) : offset(target.size() + 1, 0) {
        for (std::size_t v = 0; v < target.size(); ++v) {
            rows.push_back(target[v]);
            cols.push_back(source[v]);
            offset[v + 1] = offset[v] + target[v] * source[v];
        }
    }
    std::size_t size() const { return offset.back(); }
    std::size_t operator()(std::size_t v, std::size_t r, std::size_t c) const { return offset[v] + r * cols[v] + c; }

    template <class F>
    GradedMap<F> unpack(const F& f, const Vec<F>& x) const {
        GradedMap<F> g;
        for (std::size_t v = 0; v + 1 < offset.size(); ++v) {
            Matrix<F> m(f, rows[v], cols[v]);
            for (std::size_t r = 0; r < rows[v]; ++r)
                for (std::size_t c = 0; c < cols[v]; ++c) m(r, c) = x[(*this)(v, r, c)];
            g.push_back(std::move(m));
        }
        return g;
    }
};

/// Rows of the system phi_t x^V_a - c_a x^W_a phi_s = 0 over all arrows a,
/// with c_a = 1 when no twist is given.
template <class F>
std::vector<Vec<F>> intertwining_rows(const Rep<F>& V, const Rep<F>& W, const GradedIndex& idx,
                                      const std::vector<typename F::Element>* twist = nullptr) {
    const Quiver& dq = V.quiver();
    const F& f = V.field();
    std::vector<Vec<F>> eqs;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        const auto s = ar.source, t = ar.target;
        const auto c_a = twist ? (*twist)[a] : f.one();
        for (std::size_t r = 0; r < W.dim(t); ++r)
            for (std::size_t c = 0; c < V.dim(s); ++c) {
                Vec<F> eq(idx.size(), f.zero());
                for (std::size_t k = 0; k < V.dim(t); ++k) eq[idx(t, r, k)] = f.add(eq[idx(t, r, k)], V.map(a)(k, c));
                for (std::size_t k = 0; k < W.dim(s); ++k)
                    eq[idx(s, k, c)] = f.sub(eq[idx(s, k, c)], f.mul(c_a, W.map(a)(r, k)));
                eqs.push_back(std::move(eq));
            }
    }
    return eqs;
}

}  // namespace detail

/// Basis of the graded maps phi with phi x^V_a = x^W_a phi for every arrow.
template <class F>
std::vector<GradedMap<F>> hom_space(const Rep<F>& V, const Rep<F>& W) {
    const F& f = V.field();
    detail::GradedIndex idx(W.dims(), V.dims());
    auto ker = kernel_basis(Matrix<F>::from_rows(f, idx.size(), detail::intertwining_rows(V, W, idx)));
    std::vector<GradedMap<F>> out;
    for (std::size_t k = 0; k < ker.rows(); ++k) out.push_back(idx.unpack(f, ker.row(k)));
    return out;
}

enum class IsoOutcome { Isomorphic, NotIsomorphic, Inconclusive };

inline std::string to_string(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::Isomorphic: return "isomorphic";
        case IsoOutcome::NotIsomorphic: return "not_isomorphic";
        case IsoOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

template <class F>
struct IsoResult {
    IsoOutcome outcome;
    std::optional<GradedMap<F>> witness;
    std::string method;
};

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace detail

/// Searches the Hom space for an invertible element. det(sum c_j phi_j) is a
/// polynomial of degree at most dim V in the c_j, so a grid with dim V + 1
/// values per coordinate decides existence (Combinatorial Nullstellensatz).
/// Over a small prime field the whole space is swept when it fits the cap.
template <class F>
IsoResult<F> is_isomorphic(const Rep<F>& V, const Rep<F>& W, std::uint64_t cap = 1000000) {
    if (V.dims() != W.dims()) return {IsoOutcome::NotIsomorphic, std::nullopt, "dimension vectors differ"};
    const F& f = V.field();
    const std::size_t n = V.total_dim();
    auto hom = hom_space(V, W);
    const std::size_t k = hom.size();
    if (n == 0) return {IsoOutcome::Isomorphic, GradedMap<F>(V.quiver().num_vertices(), Matrix<F>(f, 0, 0)), "zero"};
    if (k == 0) return {IsoOutcome::NotIsomorphic, std::nullopt, "no nonzero homomorphisms"};

    std::vector<typename F::Element> values;
    std::string method;
    if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t p = f.characteristic();
        if (detail::saturating_pow(p, k, cap) <= cap) {
            for (std::uint64_t x = 0; x < p; ++x) values.push_back(f.from_int(static_cast<long long>(x)));
            method = "exhaustive";
        } else if (p > n && detail::saturating_pow(n + 1, k, cap) <= cap) {
            for (std::size_t x = 0; x <= n; ++x) values.push_back(f.from_int(static_cast<long long>(x)));
            method = "grid";
        } else {
            return {IsoOutcome::Inconclusive, std::nullopt, "search space exceeds the cap"};
        }
    } else {
        if (detail::saturating_pow(n + 1, k, cap) > cap)
            return {IsoOutcome::Inconclusive, std::nullopt, "search space exceeds the cap"};
        for (std::size_t x = 0; x <= n; ++x) values.push_back(f.from_int(static_cast<long long>(x)));
        method = "grid";
    }

    std::vector<std::size_t> idx(k, 0);
    while (true) {
        GradedMap<F> g;
        bool ok = true;
        for (std::size_t v = 0; v < hom[0].size() && ok; ++v) {
            Matrix<F> m(f, W.dim(v), V.dim(v));
            for (std::size_t j = 0; j < k; ++j)
                if (!f.is_zero(values[idx[j]])) m = m + hom[j][v].scaled(values[idx[j]]);
            if (rank(m) != V.dim(v)) ok = false;
            g.push_back(std::move(m));
        }
        if (ok) return {IsoOutcome::Isomorphic, std::move(g), method};
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == values.size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return {IsoOutcome::NotIsomorphic, std::nullopt, method};
}

template <class F>
struct Quotient {
    Rep<F> rep;
    GradedMap<F> projection;  // V -> V/S
};

/// V/S on the coordinates complementary to the pivots of S.
template <class F>
Quotient<F> quotient(const Rep<F>& V, const Subrep<F>& S) {
    require_submodule(V, S);
    const Quiver& dq = V.quiver();
    const F& f = V.field();
    const std::size_t nv = dq.num_vertices();
    DimVector dims(nv);
    GradedMap<F> proj;
    std::vector<std::vector<std::size_t>> keep(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        keep[v] = S.spaces[v].non_pivots();
        dims[v] = keep[v].size();
        Matrix<F> p(f, dims[v], V.dim(v));
        for (std::size_t c = 0; c < V.dim(v); ++c) {
            Vec<F> e(V.dim(v), f.zero());
            e[c] = f.one();
            auto red = S.spaces[v].reduce(e);
            for (std::size_t r = 0; r < keep[v].size(); ++r) p(r, c) = red[keep[v][r]];
        }
        proj.push_back(std::move(p));
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        Matrix<F> m(f, dims[ar.target], dims[ar.source]);
        for (std::size_t c = 0; c < keep[ar.source].size(); ++c) {
            auto img = proj[ar.target].apply(V.map(a).col(keep[ar.source][c]));
            for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img[r];
        }
        maps.push_back(std::move(m));
    }
    return {Rep<F>(f, dq, dims, std::move(maps)), std::move(proj)};
}

template <class F>
struct Restriction {
    Rep<F> rep;
    GradedMap<F> inclusion;  // S -> V, columns are the canonical basis of S
};

/// The submodule S as a representation in its canonical basis.
template <class F>
Restriction<F> restrict_to(const Rep<F>& V, const Subrep<F>& S) {
    require_submodule(V, S);
    const Quiver& dq = V.quiver();
    const F& f = V.field();
    GradedMap<F> inc;
    for (const auto& sp : S.spaces) inc.push_back(sp.basis().transpose());
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        const auto& src = S.spaces[ar.source];
        const auto& tgt = S.spaces[ar.target];
        Matrix<F> m(f, tgt.dim(), src.dim());
        for (std::size_t c = 0; c < src.dim(); ++c) {
            auto coords = tgt.coordinates(V.map(a).apply(src.vector(c)));
            for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
        }
        maps.push_back(std::move(m));
    }
    return {Rep<F>(f, dq, S.dims(), std::move(maps)), std::move(inc)};
}

template <class F>
Rep<F> direct_sum(const Rep<F>& V, const Rep<F>& W) {
    const Quiver& dq = V.quiver();
    const F& f = V.field();
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        Matrix<F> m(f, V.dim(ar.target) + W.dim(ar.target), V.dim(ar.source) + W.dim(ar.source));
        m.set_block(0, 0, V.map(a));
        m.set_block(V.dim(ar.target), V.dim(ar.source), W.map(a));
        maps.push_back(std::move(m));
    }
    return Rep<F>(f, dq, V.dims() + W.dims(), std::move(maps));
}

/// The representation transported along invertible per-vertex changes of
/// basis: x_a becomes P_t x_a P_s^{-1}.
template <class F>
Rep<F> change_basis(const Rep<F>& V, const GradedMap<F>& P) {
    const Quiver& dq = V.quiver();
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        auto inv = inverse(P[ar.source]);
        if (!inv) throw validation_error("NotInvertible", "change of basis is singular");
        maps.push_back(P[ar.target] * V.map(a) * *inv);
    }
    return Rep<F>(V.field(), dq, V.dims(), std::move(maps));
}

}  // namespace ppa
