#pragma once

// Graded slices of the preprojective algebra of a quiver, computed one
// degree at a time over the rationals.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ppa/quiver.hpp"

namespace ppa {

/// A path in the double quiver. `arrows` is written last-applied-first, so
/// arrows.back() is applied first. A trivial path has no arrows and
/// source == target.
struct Path {
    std::vector<std::size_t> arrows;
    std::size_t source = 0;
    std::size_t target = 0;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

std::string path_name(const Quiver& dq, const Path& p);

/// Order on paths of one length: lexicographic on arrow names, written order.
/// Trivial paths compare by vertex.
bool path_less(const Quiver& dq, const Path& x, const Path& y);

/// Sparse coordinates in the basis of one slice, keyed by basis index.
using SparseVec = std::map<std::size_t, mpq_class>;

/// All raw paths of length n from i to j in a double quiver, in path order.
std::vector<Path> raw_paths(const Quiver& dq, std::size_t n, std::size_t i, std::size_t j);

struct AlgSlice {
    std::size_t degree = 0;
    std::vector<Path> basis;  // sorted by path_less
    // candidate (arrow, index of a basis path one degree lower) -> coordinates
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> left_mult;
};

class PreprojectiveAlgebra {
public:
    /// `q` must be an undoubled quiver; its double is built internally.
    explicit PreprojectiveAlgebra(const Quiver& q);

    const Quiver& quiver() const { return q_; }
    const Quiver& double_quiver() const { return dq_; }

    const AlgSlice& slice(std::size_t n);
    std::size_t dim(std::size_t n) { return slice(n).basis.size(); }
    /// Dimensions of e_j P_n e_i, indexed [j][i].
    std::vector<std::vector<std::size_t>> dims_by_pair(std::size_t n);
    std::vector<std::size_t> hilbert(std::size_t max_degree);

    /// First degree n with P_n = 0, searched up to `limit`. Every later slice
    /// then vanishes too, since P is generated in degree one.
    std::optional<std::size_t> vanishing_degree(std::size_t limit);

    /// Index of a basis path in its slice, if it is one.
    std::optional<std::size_t> basis_index(const Path& p);

    /// Coordinates of a raw path in the basis of its degree.
    SparseVec rewrite(const Path& p);
    /// b * x for an arrow b and x in P_n.
    SparseVec left_multiply(std::size_t arrow, std::size_t n, const SparseVec& x);
    /// x * y for x in P_m and y in P_n.
    SparseVec multiply(std::size_t m, const SparseVec& x, std::size_t n, const SparseVec& y);

private:
    void extend();

    Quiver q_;
    Quiver dq_;
    std::vector<AlgSlice> slices_;
};

}  // namespace ppa
