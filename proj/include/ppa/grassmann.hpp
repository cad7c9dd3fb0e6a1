#pragma once

// Quiver grassmannians over prime fields: exhaustive enumeration of
// submodules with a given dimension vector, nested pairs, codimension counts,
// graded (eigenspace-compatible) submodules and point-count interpolation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppa/rep.hpp"

namespace ppa {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

namespace detail {

/// Calls `yield` on every subspace S with lower <= S <= upper and dim S = d.
/// Counts every candidate against `visited` and throws CapExceeded past cap.
template <class F, class Yield>
void subspaces_between(const Subspace<F>& lower, const Subspace<F>& upper, std::size_t d, std::uint64_t& visited,
                       std::uint64_t cap, Yield&& yield) {
    static_assert(std::is_same_v<F, PrimeField>, "enumeration needs a finite field");
    const F& f = lower.field();
    if (d < lower.dim() || d > upper.dim() || !upper.contains(lower)) return;
    const std::size_t n = lower.ambient_dim();
    // canonical complement of lower inside upper
    std::vector<Vec<F>> reduced;
    for (std::size_t r = 0; r < upper.dim(); ++r) reduced.push_back(lower.reduce(upper.vector(r)));
    auto comp = Subspace<F>::span(f, n, reduced);
    const std::size_t m = comp.dim(), k = d - lower.dim();
    const std::uint64_t p = f.characteristic();

    std::vector<std::size_t> piv(k);
    for (std::size_t r = 0; r < k; ++r) piv[r] = r;
    while (true) {
        // free entries: row r, column c > piv[r] with c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < m; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
        std::vector<std::uint64_t> digits(free.size(), 0);
        while (true) {
            if (++visited > cap)
                throw capacity_error("CapExceeded", "more than " + std::to_string(cap) + " candidate subspaces visited");
            std::vector<Vec<F>> rows;
            for (std::size_t r = 0; r < lower.dim(); ++r) rows.push_back(lower.vector(r));
            for (std::size_t r = 0; r < k; ++r) {
                Vec<F> coeff(m, f.zero());
                coeff[piv[r]] = f.one();
                for (std::size_t q = 0; q < free.size(); ++q)
                    if (free[q].first == r) coeff[free[q].second] = static_cast<typename F::Element>(digits[q]);
                Vec<F> x(n, f.zero());
                for (std::size_t c = 0; c < m; ++c)
                    if (!f.is_zero(coeff[c]))
                        for (std::size_t e = 0; e < n; ++e) x[e] = f.add(x[e], f.mul(coeff[c], comp.basis()(c, e)));
                rows.push_back(std::move(x));
            }
            yield(Subspace<F>::span(f, n, rows));
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        // next pivot combination
        std::size_t r = k;
        while (r > 0 && piv[r - 1] == m - k + r - 1) --r;
        if (r == 0) break;
        ++piv[r - 1];
        for (std::size_t q = r; q < k; ++q) piv[q] = piv[q - 1] + 1;
    }
}

/// Vertex-by-vertex search. At vertex j the choice must contain the images
/// of arrows from already chosen vertices and map into already chosen
/// vertices. `choose(j, L, H, yield)` emits the admissible spaces at j.
template <class F, class Choose, class Emit>
void vertexwise(const Rep<F>& V, const Subrep<F>* lower, const Subrep<F>* upper, Choose&& choose, Emit&& emit) {
    const Quiver& dq = V.quiver();
    const std::size_t nv = dq.num_vertices();
    std::vector<Subspace<F>> chosen;
    chosen.reserve(nv);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == nv) {
            emit(Subrep<F>{chosen});
            return;
        }
        Subspace<F> L = lower ? lower->spaces[j] : Subspace<F>(V.field(), V.dim(j));
        Subspace<F> H = upper ? upper->spaces[j] : Subspace<F>::full(V.field(), V.dim(j));
        for (std::size_t a = 0; a < dq.num_arrows(); ++a) {
            const auto& ar = dq.arrow(a);
            if (ar.target == j && ar.source < j) L = L.sum(chosen[ar.source].image(V.map(a)));
            if (ar.source == j && ar.target < j) H = H.intersect(Subspace<F>::preimage(V.map(a), chosen[ar.target]));
        }
        if (!H.contains(L)) return;
        choose(j, L, H, [&](Subspace<F> s) {
            chosen.push_back(std::move(s));
            rec(j + 1);
            chosen.pop_back();
        });
    };
    rec(0);
}

}  // namespace detail

/// Visits every submodule U of V with dims v, optionally with lower <= U <= upper.
/// Returns the number of submodules found.
template <class F, class Callback>
std::uint64_t for_each_submodule(const Rep<F>& V, const DimVector& v, const std::type_identity_t<Subrep<F>>* lower,
                                 const std::type_identity_t<Subrep<F>>* upper,
                                 std::uint64_t cap, Callback&& cb) {
    if (v.size() != V.quiver().num_vertices()) throw validation_error("ShapeMismatch", "dimension vector length");
    std::uint64_t visited = 0, found = 0;
    detail::vertexwise(
        V, lower, upper,
        [&](std::size_t j, const Subspace<F>& L, const Subspace<F>& H, auto&& yield) {
            detail::subspaces_between(L, H, v[j], visited, cap, yield);
        },
        [&](const Subrep<F>& U) {
            ++found;
            cb(U);
        });
    return found;
}

template <class F>
std::vector<Subrep<F>> enumerate_submodules(const Rep<F>& V, const DimVector& v, std::uint64_t cap = kDefaultCap,
                                            const std::type_identity_t<Subrep<F>>* lower = nullptr,
                               const std::type_identity_t<Subrep<F>>* upper = nullptr) {
    std::vector<Subrep<F>> out;
    for_each_submodule(V, v, lower, upper, cap, [&](const Subrep<F>& U) {
        if (!is_submodule(V, U) || U.dims() != v)
            throw internal_error("EnumerationBug", "enumerated subspace is not a submodule of the requested dims");
        out.push_back(U);
    });
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
std::uint64_t count_submodules(const Rep<F>& V, const DimVector& v, std::uint64_t cap = kDefaultCap,
                               const std::type_identity_t<Subrep<F>>* lower = nullptr,
                               const std::type_identity_t<Subrep<F>>* upper = nullptr) {
    return for_each_submodule(V, v, lower, upper, cap, [](const Subrep<F>&) {});
}

/// Nested pairs U <= U' with dims u and u'.
template <class F>
std::vector<std::pair<Subrep<F>, Subrep<F>>> enumerate_pairs(const Rep<F>& V, const DimVector& u,
                                                             const DimVector& u2, std::uint64_t cap = kDefaultCap) {
    if (!u.leq(u2)) throw validation_error("NotNested", "need u <= u' componentwise");
    std::vector<std::pair<Subrep<F>, Subrep<F>>> out;
    for (const auto& big : enumerate_submodules(V, u2, cap))
        for (auto& small : enumerate_submodules(V, u, cap, nullptr, &big)) out.push_back({std::move(small), big});
    return out;
}

/// Submodules U with dims(V) - dims(U) = codim and V/U nilpotent.
template <class F>
std::uint64_t tilde_count(const Rep<F>& V, const DimVector& codim, std::uint64_t cap = kDefaultCap) {
    if (!codim.leq(V.dims())) return 0;
    const DimVector u = V.dims() - codim;
    const bool automatic = is_nilpotent(V);
    std::uint64_t n = 0;
    for_each_submodule(V, u, nullptr, nullptr, cap, [&](const Subrep<F>& U) {
        if (automatic || is_nilpotent(quotient(V, U).rep)) ++n;
    });
    return n;
}

/// Eigenspace decomposition of a graded automorphism, one list per vertex.
template <class F>
struct Eigenspaces {
    std::vector<std::vector<std::pair<typename F::Element, Subspace<F>>>> spaces;
};

template <class F>
Eigenspaces<F> eigenspaces(const GradedMap<F>& gamma) {
    static_assert(std::is_same_v<F, PrimeField>, "eigenvalue search runs over a finite field");
    Eigenspaces<F> out;
    for (const auto& m : gamma) {
        const F& f = m.field();
        if (f.characteristic() > 100000) throw validation_error("PrimeTooLarge", "eigenvalue search needs p <= 100000");
        std::vector<std::pair<typename F::Element, Subspace<F>>> list;
        std::size_t total = 0;
        for (std::uint32_t lam = 1; lam < f.characteristic(); ++lam) {
            auto shifted = m - Matrix<F>::identity(f, m.rows()).scaled(lam);
            auto ker = Subspace<F>::span(kernel_basis(shifted));
            if (ker.dim() == 0) continue;
            total += ker.dim();
            list.push_back({lam, std::move(ker)});
        }
        if (total != m.rows()) throw validation_error("NotDiagonalizable", "automorphism is not diagonalizable over the field");
        out.spaces.push_back(std::move(list));
    }
    return out;
}

/// (vertex, eigenvalue) -> dimension.
template <class F>
using GradedCharacter = std::map<std::pair<std::size_t, typename F::Element>, std::size_t>;

/// Submodules that are sums of their eigenspace pieces with the requested
/// character. Each slot is enumerated inside its eigenspace.
template <class F>
std::vector<Subrep<F>> graded_submodules(const Rep<F>& V, const Eigenspaces<F>& eig, const GradedCharacter<F>& d,
                                         std::uint64_t cap = kDefaultCap) {
    const std::size_t nv = V.quiver().num_vertices();
    for (const auto& [slot, n] : d) {
        if (slot.first >= nv) throw validation_error("ShapeMismatch", "character vertex out of range");
        bool present = false;
        for (const auto& [lam, sp] : eig.spaces[slot.first]) present |= lam == slot.second;
        if (!present && n > 0) return {};
    }
    std::uint64_t visited = 0;
    std::vector<Subrep<F>> out;
    detail::vertexwise(
        V, static_cast<const Subrep<F>*>(nullptr), static_cast<const Subrep<F>*>(nullptr),
        [&](std::size_t j, const Subspace<F>& L, const Subspace<F>& H, auto&& yield) {
            const auto& slots = eig.spaces[j];
            std::function<void(std::size_t, Subspace<F>)> rec = [&](std::size_t k, Subspace<F> acc) {
                if (k == slots.size()) {
                    if (acc.contains(L)) yield(std::move(acc));
                    return;
                }
                const auto& [lam, E] = slots[k];
                auto it = d.find({j, lam});
                const std::size_t want = it == d.end() ? 0 : it->second;
                detail::subspaces_between(L.intersect(E), H.intersect(E), want, visited, cap,
                                          [&](Subspace<F> s) { rec(k + 1, acc.sum(s)); });
            };
            rec(0, Subspace<F>(V.field(), V.dim(j)));
        },
        [&](const Subrep<F>& U) {
            if (!is_submodule(V, U)) throw internal_error("EnumerationBug", "graded candidate is not a submodule");
            out.push_back(U);
        });
    std::sort(out.begin(), out.end());
    return out;
}

/// Integer polynomial in q interpolated from F_p point counts.
struct CountPoly {
    std::vector<mpz_class> coeffs;  // constant term first, trailing zeros trimmed
    std::size_t degree_bound = 0;
    std::vector<std::uint32_t> primes_used;
    std::vector<std::uint32_t> consistency_primes;
    std::vector<std::uint64_t> counts;  // one per prime, used then consistency
    mpz_class chi;                      // value at q = 1
    mpz_class leading;                  // top coefficient (0 for the zero polynomial)

    mpz_class operator()(long q) const;
    std::string to_string() const;
};

/// v.w - v^T C v / 2, clamped below at zero.
std::size_t expected_dimension(const CartanData& c, const DimVector& w, const DimVector& v);

/// Interpolates counts of degree <= bound from the first bound+1 primes and
/// certifies the result at every remaining prime (at least one required).
CountPoly interpolate_counts(const std::vector<std::uint32_t>& primes, const std::vector<std::uint64_t>& counts,
                             std::size_t degree_bound);

/// Counts Gr(v, V) at each prime and interpolates.
CountPoly count_polynomial(const Rep<Rationals>& V, const DimVector& v, std::size_t degree_bound,
                           const std::vector<std::uint32_t>& primes, std::uint64_t cap = kDefaultCap);

}  // namespace ppa
