#pragma once

// Raising/lowering operators on functions over quiver grassmannians, in the
// regime where every grassmannian is a finite set of points: E_i sums over
// submodules one step larger at vertex i, F_i is its transpose and H_i acts
// by (w - C v)_i. Also fiber Euler characteristics by point counting and the
// comparison of the w and θ(w) realizations.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppa/demazure.hpp"
#include "ppa/hull.hpp"
#include "ppa/weyl.hpp"

namespace ppa {

using IntMatrix = std::vector<std::vector<long long>>;

struct WeightPoints {
    DimVector v;
    bool finite = false;                  // counts agree across primes and all points lift
    std::vector<std::uint64_t> counts;    // per prime
    std::vector<Subrep<Rationals>> points;
};

struct FiniteRealization {
    DimVector w;
    DimVector top;                        // dims of the ambient module
    std::vector<WeightPoints> weights;    // every v <= top with at least one point
    // flattened point index: weight-major, canonical order inside each weight
    std::vector<std::pair<std::size_t, std::size_t>> index;

    bool all_finite() const;
    std::size_t num_points() const { return index.size(); }
    std::optional<std::size_t> find_weight(const DimVector& v) const;
};

/// Enumerates every grassmannian Gr(v, V) for 0 <= v <= dims(V). A weight is
/// in the finite regime when its counts agree at all primes and the points
/// found at the largest prime lift (by symmetric residues) to that many
/// distinct submodules over the rationals.
FiniteRealization finite_points(const Rep<Rationals>& V, const DimVector& w, const std::vector<std::uint32_t>& primes,
                                std::uint64_t cap = kDefaultCap);

struct Operators {
    std::vector<IntMatrix> E, F, H;  // one per vertex, square in the point count
};

/// (E_i)_{U,U'} = 1 iff U <= U' and dims U' = dims U + e_i; F_i = E_i^T;
/// H_i diagonal with (w - C v)_i.
Operators operator_matrices(const FiniteRealization& real, const CartanData& c);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_zero(std::size_t n);
bool mat_is_zero(const IntMatrix& a);

enum class Direction { Up, Down };

/// Euler characteristic of {U' >= U, dims U + e_i} (up) or
/// {U'' <= U, dims U - e_i} (down), from point counts interpolated with the
/// degree bound given by the projective space the fiber lives in.
mpz_class fiber_euler(const Rep<Rationals>& V, const Subrep<Rationals>& U, std::size_t i, Direction dir,
                      const std::vector<std::uint32_t>& primes, std::uint64_t cap = kDefaultCap);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Sl2Report {
    bool finite_regime = false;
    std::size_t total_dim = 0;
    std::vector<Check> checks;
    bool passed() const;
};

/// Commutation, weight-shift and Serre relations plus the weight census
/// against Freudenthal in the finite regime; otherwise E_i F_i on the vacuum
/// against the fiber Euler characteristic.
Sl2Report verify_sl2(const Quiver& q, const DimVector& w, const std::vector<std::uint32_t>& primes,
                     std::uint64_t cap = kDefaultCap);

/// Operators computed inside q^{w,σ} agree with the ambient ones restricted
/// to the points lying in q^{w,σ}.
Check restricted_compat(const Quiver& q, const DimVector& w, const WeylWord& word,
                        const std::vector<std::uint32_t>& primes, std::uint64_t cap = kDefaultCap);

struct ChevalleyReport {
    DimVector w, theta_w;
    std::vector<std::size_t> bijection;  // point of w -> point of θ(w)
    std::vector<Check> checks;
    bool passed() const;
};

/// Matches the point at u for w with the point at top - u for θ(w) and
/// checks E_i^w = P F_i^{θw} P^{-1} and H_i^w = -P H_i^{θw} P^{-1}. Needs a
/// single point per weight; otherwise throws AmbiguousBijection.
ChevalleyReport chevalley_compare(const Quiver& q, const DimVector& w, const std::vector<std::uint32_t>& primes,
                                  std::uint64_t cap = kDefaultCap);

}  // namespace ppa
