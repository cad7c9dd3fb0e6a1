#pragma once

// Reference computations used to check the library. They share only data
// types with it: every algorithm here is a separate brute-force or textbook
// implementation.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "ppa/quiver.hpp"
#include "ppa/rep.hpp"

namespace oracle {

using IntVec = std::vector<long long>;
using Cartan = std::vector<std::vector<long long>>;

/// dim of degree-n piece of the preprojective algebra for n = 0..max_len, by
/// listing every path of the double quiver and every two-sided multiple of
/// the vertex relations, then taking ranks with sparse rational elimination.
std::vector<std::size_t> preprojective_dims(const ppa::Quiver& q, std::size_t max_len);

/// Lowest vector of the dot orbit of 0: apply s_i while it strictly grows.
IntVec lowest_dot(const Cartan& c, const IntVec& w);

struct OrbitPoint {
    IntVec v;
    std::vector<std::size_t> word;  // written order, rightmost applied first
};

/// All vectors in the dot orbit of 0, with a shortest word for each.
std::vector<OrbitPoint> dot_orbit(const Cartan& c, const IntVec& w);

/// Positive roots in simple-root coordinates.
std::vector<IntVec> positive_roots(const Cartan& c);

/// Multiplicity of the weight w - C v in the irreducible module of highest
/// weight w, by Kostant's alternating sum over the Weyl group.
mpz_class kostant_multiplicity(const Cartan& c, const IntVec& w, const IntVec& v);

/// Weyl dimension formula as a product over positive roots.
mpz_class weyl_dimension(const Cartan& c, const IntVec& w);

/// u <= w in Bruhat order via the subword property, comparing elements
/// through their action on a regular weight.
bool bruhat_leq(const Cartan& c, const std::vector<std::size_t>& u, const std::vector<std::size_t>& w);

/// Diagram involution of A_n: i -> n - 1 - i.
std::vector<std::size_t> theta_type_a(std::size_t n);

/// Number of submodules of V mod p with dimension vector d, by listing all
/// subspaces at each vertex as explicit vector sets.
std::uint64_t brute_count(const ppa::Rep<ppa::Rationals>& V, std::uint32_t p, const ppa::DimVector& d);

/// Number of d-dimensional subspaces of F_p^n, by explicit vector sets.
std::uint64_t brute_subspaces(std::uint32_t p, std::size_t n, std::size_t d);

}  // namespace oracle
