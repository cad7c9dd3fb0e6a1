#pragma once

// Weyl group words acting on graded dimension vectors through the shifted
// (dot) action, extremal orbits, the longest element, Bruhat order, the
// diagram involution and weight multiplicities of integrable highest-weight
// modules in finite type.

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "ppa/quiver.hpp"

namespace ppa {

/// Simple reflections by vertex index, applied right to left.
using WeylWord = std::vector<std::size_t>;

std::string word_to_string(const Quiver& q, const WeylWord& word);

/// s_i ._w v = v + (w - C v)_i e_i.
WeightVec reflect_dot(const CartanData& c, std::size_t i, const WeightVec& w, const WeightVec& v);

/// word ._w v, rightmost letter first.
WeightVec act(const CartanData& c, const WeylWord& word, const WeightVec& w, const WeightVec& v);

/// The vectors word ._w 0 after each application step: element k is the
/// image under the last k letters of the word. Element 0 is zero.
std::vector<WeightVec> dot_chain(const CartanData& c, const WeylWord& word, const WeightVec& w);

struct OrbitEntry {
    WeightVec v;
    WeylWord word;  // a shortest word reaching v from 0
};

/// Breadth-first orbit of 0 under the dot action, trying vertices in order,
/// up to the given word length. Complete in finite type when the cap is
/// large enough.
std::vector<OrbitEntry> extremal_orbit(const CartanData& c, const WeightVec& w, std::size_t length_cap);

/// True iff ω_w - α_v lies in the Weyl orbit of ω_w: descents are applied
/// until reaching zero.
bool is_extremal(const CartanData& c, const WeightVec& w, const WeightVec& v);

/// Length of the group element, as the breadth-first depth of its image of
/// the regular orbit point. Reduced iff this equals word.size().
std::size_t word_length(const CartanData& c, const WeylWord& word);
bool is_reduced(const CartanData& c, const WeylWord& word);

/// Equality of group elements by their action on the regular orbit point.
bool same_element(const CartanData& c, const WeylWord& x, const WeylWord& y);

WeylWord longest_element(const CartanData& c);

/// θ with σ_0(α_i) = -α_θ(i).
std::vector<std::size_t> theta(const CartanData& c);

/// Subword criterion. Throws NotReduced unless v is reduced.
bool bruhat_leq(const CartanData& c, const WeylWord& u, const WeylWord& v);

/// Positive roots in simple-root coordinates (finite type).
std::vector<WeightVec> positive_roots(const CartanData& c);

/// Multiplicity of ω_w - α_v in the irreducible module of highest weight ω_w,
/// by Freudenthal's recursion (finite type).
class WeightMultiplicity {
public:
    WeightMultiplicity(CartanData c, WeightVec w);
    mpz_class operator()(const WeightVec& v);
    /// Weyl dimension formula.
    mpz_class dimension() const;

private:
    CartanData c_;
    WeightVec w_;
    std::vector<WeightVec> roots_;
    std::map<WeightVec, mpz_class> memo_;
};

}  // namespace ppa
