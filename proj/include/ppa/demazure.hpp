#pragma once

// Demazure submodules of q^w along a Weyl word. Each step enlarges the
// current submodule at one vertex by the vertex part of the socle of the
// quotient; the result is certified by its dimension vector, which pins it
// down uniquely among submodules.

#include <cstddef>
#include <string>
#include <vector>

#include "ppa/grassmann.hpp"
#include "ppa/hull.hpp"
#include "ppa/weyl.hpp"

namespace ppa {

template <class F>
struct DemazureChain {
    WeylWord word;
    std::vector<Subrep<F>> stages;  // stage k is the image of the last k letters
    std::vector<DimVector> targets;
};

/// One extension step at vertex i. U must be a submodule whose dimension
/// vector is extremal for w.
template <class F>
Subrep<F> extend_step(const InjectiveModel<F>& model, const CartanData& c, const Subrep<F>& U, std::size_t i) {
    const Rep<F>& Q = model.rep;
    const auto w = model.w.to_signed();
    const auto u = U.dims().to_signed();
    require_submodule(Q, U);
    if (!is_extremal(c, w, u)) throw validation_error("NotExtremalInput", "dimension vector " + U.dims().to_string() + " is not extremal");
    long long cu = 0;
    for (std::size_t j = 0; j < u.size(); ++j) cu += c.matrix[i][j] * u[j];
    const long long delta = w[i] - cu;
    if (delta < 0)
        throw validation_error("NotExtremalInput", "reflection at vertex " + Q.quiver().vertices()[i] + " shrinks the dimension vector");
    if (delta == 0) return U;

    // K_i = {y : x_a y in U for every arrow a leaving i}
    Subrep<F> next = U;
    auto K = Subspace<F>::full(Q.field(), Q.dim(i));
    for (auto a : Q.quiver().arrows_out(i))
        K = K.intersect(Subspace<F>::preimage(Q.map(a), U.spaces[Q.quiver().arrow(a).target]));
    next.spaces[i] = K;
    const auto target = DimVector::from_signed(reflect_dot(c, i, w, u));
    if (next.dims() == target) return next;

    if constexpr (std::is_same_v<F, PrimeField>) {
        // brute force: the unique submodule of the target dims containing U
        auto found = enumerate_submodules(Q, target, kDefaultCap, &U);
        if (found.size() == 1) return found.front();
        throw internal_error("DimensionMismatch", "socle step gave " + next.dims().to_string() + " and " +
                                                     std::to_string(found.size()) + " submodules have dims " +
                                                     target.to_string());
    } else {
        if (!model.complete)
            throw capacity_error("TruncationTooSmall", "socle step gave " + next.dims().to_string() + " instead of " +
                                                           target.to_string() + " inside a truncated q^w");
        throw internal_error("DimensionMismatch",
                             "socle step gave " + next.dims().to_string() + " instead of " + target.to_string());
    }
}

/// Stages of q^{w, suffix} for every suffix of a reduced word.
template <class F>
DemazureChain<F> demazure_module(const InjectiveModel<F>& model, const CartanData& c, const WeylWord& word) {
    if (!is_reduced(c, word)) throw validation_error("NotReduced", "Demazure words must be reduced");
    DemazureChain<F> chain;
    chain.word = word;
    for (const auto& t : dot_chain(c, word, model.w.to_signed())) chain.targets.push_back(DimVector::from_signed(t));
    chain.stages.push_back(zero_subrep(model.rep));
    const auto top = model.top_layer();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto next = extend_step(model, c, chain.stages.back(), *it);
        if (!model.complete && !subrep_intersect(next, top).dims().is_zero())
            throw capacity_error("TruncationTooSmall", "Demazure stage reaches paths of length " +
                                                           std::to_string(model.bound - 1) + "; increase the bound");
        chain.stages.push_back(std::move(next));
    }
    for (std::size_t k = 0; k < chain.stages.size(); ++k)
        if (chain.stages[k].dims() != chain.targets[k])
            throw internal_error("DimensionMismatch", "stage dims differ from the dot-action target");
    return chain;
}

/// Final stage of the first chain inside the final stage of the second.
/// The first word must be below the second in Bruhat order.
template <class F>
bool check_nesting(const CartanData& c, const DemazureChain<F>& lo, const DemazureChain<F>& hi) {
    if (!bruhat_leq(c, lo.word, hi.word)) throw validation_error("NotComparable", "words are not Bruhat comparable");
    return hi.stages.back().contains(lo.stages.back());
}

/// Shortest application-order prefix of `word` after which the count of
/// Gr(v, q^{w,sigma}) equals the count of Gr(v, q^w) at every prime. Since
/// the Demazure modules increase along the word, equal counts mean equal
/// point sets. `word` defaults to a reduced word of the longest element.
WeylWord stabilization_sigma(const InjectiveModel<Rationals>& model, const CartanData& c, const DimVector& v,
                             const std::vector<std::uint32_t>& primes, const WeylWord& word,
                             std::uint64_t cap = kDefaultCap);

}  // namespace ppa
