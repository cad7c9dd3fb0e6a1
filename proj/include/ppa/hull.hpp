#pragma once

// Injective modules q^w as duals of e_i P, projectives P e_i, the unique
// extension of a framing into q^w, framed points, and automorphisms of q^w
// induced by rescaling the framing and the arrows.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ppa/palg.hpp"
#include "ppa/rep.hpp"

namespace ppa {

/// A basis vector of q^w or p^w: the (dual) path `path` in the summand for
/// socle/top vertex `component`, copy `copy`.
struct BasisLabel {
    std::size_t component = 0;
    std::size_t copy = 0;
    Path path;
};

template <class F>
struct InjectiveModel {
    Rep<F> rep;
    DimVector w;
    std::vector<std::vector<BasisLabel>> labels;  // per vertex, one per basis vector
    GradedMap<F> projection;                      // q^w -> s^w
    std::size_t bound = 0;                        // paths of length < bound are kept
    bool complete = false;                        // true when bound reaches the vanishing degree

    /// The copy of s^w spanned by the duals of the trivial paths.
    Subrep<F> socle_copy() const {
        Subrep<F> s = zero_subrep(rep);
        for (std::size_t v = 0; v < labels.size(); ++v) {
            std::vector<Vec<F>> vecs;
            for (std::size_t k = 0; k < labels[v].size(); ++k)
                if (labels[v][k].path.length() == 0) {
                    Vec<F> e(rep.dim(v), rep.field().zero());
                    e[k] = rep.field().one();
                    vecs.push_back(std::move(e));
                }
            s.spaces[v] = Subspace<F>::span(rep.field(), rep.dim(v), vecs);
        }
        return s;
    }

    /// Span of the basis vectors whose path has the top kept length.
    Subrep<F> top_layer() const {
        Subrep<F> s = zero_subrep(rep);
        for (std::size_t v = 0; v < labels.size(); ++v) {
            std::vector<Vec<F>> vecs;
            for (std::size_t k = 0; k < labels[v].size(); ++k)
                if (bound > 0 && labels[v][k].path.length() + 1 == bound) {
                    Vec<F> e(rep.dim(v), rep.field().zero());
                    e[k] = rep.field().one();
                    vecs.push_back(std::move(e));
                }
            s.spaces[v] = Subspace<F>::span(rep.field(), rep.dim(v), vecs);
        }
        return s;
    }
};

template <class G>
InjectiveModel<G> reduce_model(const InjectiveModel<Rationals>& m, const G& field) {
    GradedMap<G> proj;
    for (const auto& p : m.projection) proj.push_back(reduce_matrix(p, field));
    return {reduce_rep(m.rep, field), m.w, m.labels, std::move(proj), m.bound, m.complete};
}

/// Truncation bound: `requested` when given, otherwise the vanishing degree
/// in finite type and 2 * (number of vertices) beyond it. `complete` reports
/// whether nothing was cut off.
struct Bound {
    std::size_t n = 0;
    bool complete = false;
};
Bound resolve_bound(PreprojectiveAlgebra& alg, std::optional<std::size_t> requested);

/// q^w over the rationals, dual of the sum of (e_i P / e_i P_{>=N})^{w_i}.
InjectiveModel<Rationals> injective_module(PreprojectiveAlgebra& alg, const DimVector& w,
                                           std::optional<std::size_t> bound = std::nullopt);

struct ProjectiveModel {
    Rep<Rationals> rep;
    DimVector w;
    std::vector<std::vector<BasisLabel>> labels;
    std::size_t bound = 0;
    bool complete = false;
};

/// p^w = sum of (P e_i / P_{>=N} e_i)^{w_i}, left multiplication.
ProjectiveModel projective_module(PreprojectiveAlgebra& alg, const DimVector& w,
                                  std::optional<std::size_t> bound = std::nullopt);

template <class F>
struct Extension {
    GradedMap<F> gamma;  // V -> q^w
    bool unique = false;
    bool injective = false;
    bool tau_injective_on_socle = false;
    Subrep<F> image;
};

/// The unique homomorphism gamma : V -> q^w with projection o gamma = tau,
/// found as one linear solve. Uniqueness is certified by a zero kernel of the
/// homogeneous system.
template <class F>
Extension<F> extend_to_injective(const Rep<F>& V, const GradedMap<F>& tau, const InjectiveModel<F>& model) {
    const F& f = V.field();
    const Rep<F>& Q = model.rep;
    const std::size_t nv = V.quiver().num_vertices();
    if (!is_nilpotent(V)) throw validation_error("NotNilpotent", "extension needs a nilpotent module");
    if (tau.size() != nv) throw validation_error("ShapeMismatch", "framing map needs one block per vertex");
    for (std::size_t v = 0; v < nv; ++v)
        if (tau[v].rows() != model.w[v] || tau[v].cols() != V.dim(v))
            throw validation_error("ShapeMismatch", "framing block has the wrong shape");

    detail::GradedIndex idx(Q.dims(), V.dims());
    auto rows = detail::intertwining_rows(V, Q, idx);
    Vec<F> rhs(rows.size(), f.zero());
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t r = 0; r < model.w[v]; ++r)
            for (std::size_t c = 0; c < V.dim(v); ++c) {
                Vec<F> eq(idx.size(), f.zero());
                for (std::size_t k = 0; k < Q.dim(v); ++k) eq[idx(v, k, c)] = model.projection[v](r, k);
                rows.push_back(std::move(eq));
                rhs.push_back(tau[v](r, c));
            }
    auto system = Matrix<F>::from_rows(f, idx.size(), rows);
    auto sol = solve(system, rhs);
    if (!sol) {
        if (!model.complete)
            throw capacity_error("TruncationTooSmall", "no extension inside q^w truncated at length " +
                                                           std::to_string(model.bound) + "; try a larger bound");
        throw internal_error("NoSolution", "extension into the complete injective does not exist");
    }
    if (kernel_basis(system).rows() != 0) throw internal_error("NonUnique", "extension is not unique");

    Extension<F> ext{idx.unpack(f, *sol), true, false, false, zero_subrep(Q)};
    ext.injective = is_injective_map(ext.gamma);
    ext.image = map_subrep(ext.gamma, full_subrep(V));
    auto soc = socle(V);
    ext.tau_injective_on_socle = true;
    for (std::size_t v = 0; v < nv; ++v)
        if (soc.spaces[v].dim() && rank(tau[v] * soc.spaces[v].basis().transpose()) != soc.spaces[v].dim())
            ext.tau_injective_on_socle = false;
    return ext;
}

/// A framed representation (x, t) with x on U and t : U -> s^w.
template <class F>
struct FramedPoint {
    Rep<F> x;
    GradedMap<F> t;
    bool stable = false;
};

/// Stable iff no nonzero arrow-closed subspace lies inside ker t.
template <class F>
bool is_stable(const Rep<F>& x, const GradedMap<F>& t) {
    Subrep<F> ker;
    for (std::size_t v = 0; v < t.size(); ++v) ker.spaces.push_back(Subspace<F>::span(kernel_basis(t[v])));
    return largest_submodule_within(x, ker).dims().is_zero();
}

template <class F>
FramedPoint<F> to_nakajima(const Subrep<F>& U, const InjectiveModel<F>& model) {
    auto r = restrict_to(model.rep, U);
    auto t = compose(model.projection, r.inclusion);
    bool st = is_stable(r.rep, t);
    return {std::move(r.rep), std::move(t), st};
}

/// Arrow weights for the rescaling action: m1 numbers the parallel arrows
/// between each pair of vertices, m2 is identically zero.
std::vector<long long> arrow_weights_m1(const Quiver& dq);
std::vector<long long> arrow_weights_m2(const Quiver& dq);

template <class F>
typename F::Element power(const F& f, const typename F::Element& z, long long e) {
    auto base = e < 0 ? f.inv(z) : z;
    auto r = f.one();
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) r = f.mul(r, base);
    return r;
}

/// The automorphism gamma of q^w with gamma x_a = z^{-(m(a)+1)} x_a gamma and
/// projection o gamma = (z g) o projection. Arrows of q^w lower path length
/// by one, which is why the rescaled arrow enters with a negative power.
template <class F>
GradedMap<F> induced_automorphism(const InjectiveModel<F>& model, const GradedMap<F>& g,
                                  const typename F::Element& z, const std::vector<long long>& m) {
    const F& f = model.rep.field();
    const Rep<F>& Q = model.rep;
    const std::size_t nv = Q.quiver().num_vertices();
    if (f.is_zero(z)) throw validation_error("ZeroScalar", "z must be nonzero");
    if (m.size() != Q.quiver().num_arrows()) throw validation_error("ShapeMismatch", "one weight per arrow");
    for (std::size_t a = 0; a < m.size(); ++a)
        if (m[a] != -m[Q.quiver().bar(a)]) throw validation_error("BadWeights", "weights must satisfy m(a*) = -m(a)");
    for (std::size_t v = 0; v < nv; ++v) {
        if (g[v].rows() != model.w[v] || g[v].cols() != model.w[v] || !inverse(g[v]))
            throw validation_error("NotInvertible", "framing automorphism must be invertible on s^w");
    }
    std::vector<typename F::Element> twist;
    for (std::size_t a = 0; a < m.size(); ++a) twist.push_back(power(f, z, -(m[a] + 1)));
    detail::GradedIndex idx(Q.dims(), Q.dims());
    auto rows = detail::intertwining_rows(Q, Q, idx, &twist);
    Vec<F> rhs(rows.size(), f.zero());
    for (std::size_t v = 0; v < nv; ++v) {
        auto target = g[v].scaled(z) * model.projection[v];
        for (std::size_t r = 0; r < model.w[v]; ++r)
            for (std::size_t c = 0; c < Q.dim(v); ++c) {
                Vec<F> eq(idx.size(), f.zero());
                for (std::size_t k = 0; k < Q.dim(v); ++k) eq[idx(v, k, c)] = model.projection[v](r, k);
                rows.push_back(std::move(eq));
                rhs.push_back(target(r, c));
            }
    }
    auto system = Matrix<F>::from_rows(f, idx.size(), rows);
    auto sol = solve(system, rhs);
    if (!sol) {
        if (!model.complete)
            throw capacity_error("TruncationTooSmall", "twisted automorphism does not fit the truncation");
        throw internal_error("NoSolution", "twisted automorphism does not exist");
    }
    if (kernel_basis(system).rows() != 0) throw internal_error("NonUnique", "twisted automorphism is not unique");
    auto gamma = idx.unpack(f, *sol);
    for (const auto& blk : gamma)
        if (!inverse(blk)) throw internal_error("NotInvertible", "induced map is not invertible");
    return gamma;
}

}  // namespace ppa
