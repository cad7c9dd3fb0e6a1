#include "ppa/hull.hpp"

#include <map>

namespace ppa {

Bound resolve_bound(PreprojectiveAlgebra& alg, std::optional<std::size_t> requested) {
    const auto kind = cartan_matrix(alg.quiver()).kind;
    if (requested) {
        if (*requested == 0) throw validation_error("BadBound", "truncation bound must be at least 1");
        bool complete = alg.dim(*requested) == 0;
        return {*requested, complete};
    }
    if (kind == QuiverKind::Finite) {
        // the degree of a finite-type preprojective algebra is below the number of positive roots plus one
        auto n = alg.vanishing_degree(4 * alg.quiver().num_vertices() * alg.quiver().num_vertices() + 4);
        if (!n) throw internal_error("NoVanishing", "finite-type preprojective algebra did not vanish");
        return {*n, true};
    }
    return {2 * alg.quiver().num_vertices(), false};
}

namespace {

// Basis paths of degree < n with the given endpoint, grouped by the other
// endpoint. `by_target` selects paths ending at `vertex`.
std::vector<std::vector<Path>> paths_at(PreprojectiveAlgebra& alg, std::size_t vertex, std::size_t n, bool by_target) {
    std::vector<std::vector<Path>> out(alg.double_quiver().num_vertices());
    for (std::size_t d = 0; d < n; ++d)
        for (const auto& p : alg.slice(d).basis) {
            if (by_target && p.target == vertex) out[p.source].push_back(p);
            if (!by_target && p.source == vertex) out[p.target].push_back(p);
        }
    return out;
}

}  // namespace

InjectiveModel<Rationals> injective_module(PreprojectiveAlgebra& alg, const DimVector& w,
                                           std::optional<std::size_t> bound) {
    const Quiver& dq = alg.double_quiver();
    const std::size_t nv = dq.num_vertices();
    if (w.size() != nv) throw validation_error("ShapeMismatch", "framing vector length differs from vertex count");
    auto b = resolve_bound(alg, bound);
    Rationals qq;

    // beta^* sits at the source of beta
    std::vector<std::vector<BasisLabel>> labels(nv);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> where;  // (comp, copy, deg, idx)
    for (std::size_t i = 0; i < nv; ++i) {
        auto groups = paths_at(alg, i, b.n, true);
        for (std::size_t c = 0; c < w[i]; ++c)
            for (std::size_t v = 0; v < nv; ++v)
                for (const auto& p : groups[v]) {
                    where[{i, c, p.length(), *alg.basis_index(p)}] = labels[v].size();
                    labels[v].push_back({i, c, p});
                }
    }
    DimVector dims(nv);
    for (std::size_t v = 0; v < nv; ++v) dims[v] = labels[v].size();

    // (a . beta^*)(x) = beta^*(x a): the coefficient of beta in x a
    std::vector<Matrix<Rationals>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        Matrix<Rationals> m(qq, dims[ar.target], dims[ar.source]);
        for (std::size_t r = 0; r < labels[ar.target].size(); ++r) {
            const auto& xl = labels[ar.target][r];
            if (xl.path.length() + 1 >= b.n) continue;
            Path xa = xl.path;
            xa.arrows.push_back(a);
            xa.source = ar.source;
            for (const auto& [beta, coeff] : alg.rewrite(xa)) {
                auto it = where.find({xl.component, xl.copy, xa.length(), beta});
                if (it != where.end()) m(r, it->second) = coeff;
            }
        }
        maps.push_back(std::move(m));
    }
    GradedMap<Rationals> proj;
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix<Rationals> p(qq, w[v], dims[v]);
        for (std::size_t k = 0; k < labels[v].size(); ++k)
            if (labels[v][k].path.length() == 0) p(labels[v][k].copy, k) = 1;
        proj.push_back(std::move(p));
    }
    auto rep = make_rep(qq, dq, dims, std::move(maps), true);
    return {std::move(rep), w, std::move(labels), std::move(proj), b.n, b.complete};
}

ProjectiveModel projective_module(PreprojectiveAlgebra& alg, const DimVector& w, std::optional<std::size_t> bound) {
    const Quiver& dq = alg.double_quiver();
    const std::size_t nv = dq.num_vertices();
    if (w.size() != nv) throw validation_error("ShapeMismatch", "top vector length differs from vertex count");
    auto b = resolve_bound(alg, bound);
    Rationals qq;
    std::vector<std::vector<BasisLabel>> labels(nv);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> where;
    for (std::size_t i = 0; i < nv; ++i) {
        auto groups = paths_at(alg, i, b.n, false);
        for (std::size_t c = 0; c < w[i]; ++c)
            for (std::size_t v = 0; v < nv; ++v)
                for (const auto& p : groups[v]) {
                    where[{i, c, p.length(), *alg.basis_index(p)}] = labels[v].size();
                    labels[v].push_back({i, c, p});
                }
    }
    DimVector dims(nv);
    for (std::size_t v = 0; v < nv; ++v) dims[v] = labels[v].size();
    std::vector<Matrix<Rationals>> maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        const auto& ar = dq.arrow(a);
        Matrix<Rationals> m(qq, dims[ar.target], dims[ar.source]);
        for (std::size_t c = 0; c < labels[ar.source].size(); ++c) {
            const auto& bl = labels[ar.source][c];
            if (bl.path.length() + 1 >= b.n) continue;
            auto prod = alg.left_multiply(a, bl.path.length(), {{*alg.basis_index(bl.path), mpq_class(1)}});
            for (const auto& [k, coeff] : prod) m(where.at({bl.component, bl.copy, bl.path.length() + 1, k}), c) = coeff;
        }
        maps.push_back(std::move(m));
    }
    auto rep = make_rep(qq, dq, dims, std::move(maps), true);
    return {std::move(rep), w, std::move(labels), b.n, b.complete};
}

std::vector<long long> arrow_weights_m1(const Quiver& dq) {
    std::vector<long long> m(dq.num_arrows(), 0);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
        if (!dq.is_original(a)) continue;
        const auto& ar = dq.arrow(a);
        groups[{std::min(ar.source, ar.target), std::max(ar.source, ar.target)}].push_back(a);
    }
    for (const auto& [pair, arrows] : groups) {
        const auto b = static_cast<long long>(arrows.size());
        for (std::size_t p = 1; p <= arrows.size(); ++p) {
            m[arrows[p - 1]] = b + 1 - 2 * static_cast<long long>(p);
            m[dq.bar(arrows[p - 1])] = -m[arrows[p - 1]];
        }
    }
    return m;
}

std::vector<long long> arrow_weights_m2(const Quiver& dq) { return std::vector<long long>(dq.num_arrows(), 0); }

}  // namespace ppa
