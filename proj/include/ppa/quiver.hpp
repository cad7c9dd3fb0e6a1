#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ppa {

/// Signed integer vector indexed by vertices (root-lattice coordinates).
using WeightVec = std::vector<long long>;

/// Non-negative integer vector indexed by the vertices of a quiver, in the
/// quiver's canonical vertex order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n) : entries_(n, 0) {}
    explicit DimVector(std::vector<std::size_t> entries) : entries_(std::move(entries)) {}
    DimVector(std::initializer_list<std::size_t> entries) : entries_(entries) {}

    /// Throws NegativeDimension if any entry is negative.
    static DimVector from_signed(const WeightVec& v);
    WeightVec to_signed() const { return WeightVec(entries_.begin(), entries_.end()); }

    std::size_t size() const { return entries_.size(); }
    std::size_t operator[](std::size_t i) const { return entries_[i]; }
    std::size_t& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<std::size_t>& entries() const { return entries_; }

    std::size_t total() const;
    bool is_zero() const { return total() == 0; }
    /// Componentwise <=.
    bool leq(const DimVector& other) const;

    static DimVector unit(std::size_t n, std::size_t i) {
        DimVector d(n);
        d[i] = 1;
        return d;
    }

    std::string to_string() const;

    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<std::size_t> entries_;
};

DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);  // throws on negative result

struct ArrowSpec {
    std::string name;
    std::string from;
    std::string to;
};

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A finite loop-free quiver. A double quiver additionally carries the
/// involution a <-> a* on arrows; its first half of arrows are the
/// original ones.
class Quiver {
public:
    /// Validates: no loops, unique arrow names, endpoints exist.
    static Quiver build(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

    /// The double quiver with a reversed arrow `a*` for every arrow `a`.
    Quiver double_quiver() const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    std::size_t vertex_index(const std::string& id) const;
    std::optional<std::size_t> find_arrow(const std::string& name) const;

    bool is_double() const { return bar_.has_value(); }
    /// Arrow index of a* (double quivers only).
    std::size_t bar(std::size_t a) const;
    /// True for the arrows of the underlying (undoubled) quiver.
    bool is_original(std::size_t a) const;

    std::vector<std::size_t> arrows_out(std::size_t v) const;
    std::vector<std::size_t> arrows_in(std::size_t v) const;

    /// Number of edges between i and j in the underlying graph (original
    /// arrows only when doubled).
    std::size_t edge_count(std::size_t i, std::size_t j) const;

    /// Rank of the arrow's name in lexicographic order; path order uses it.
    std::size_t name_rank(std::size_t a) const { return name_rank_[a]; }

    /// The same quiver with every arrow reversed (original quivers only).
    Quiver opposite() const;

    nlohmann::ordered_json to_json() const;
    static Quiver from_json(const nlohmann::json& j);

    bool operator==(const Quiver& o) const;

private:
    Quiver() = default;
    void index_names();

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::optional<std::vector<std::size_t>> bar_;
    std::vector<std::size_t> name_rank_;
};

enum class QuiverKind { Finite, Affine, Wild };

std::string to_string(QuiverKind kind);

struct CartanData {
    std::vector<std::vector<long long>> matrix;
    QuiverKind kind = QuiverKind::Finite;
};

/// C = 2I - (edge counts of the underlying graph), with its definiteness class.
CartanData cartan_matrix(const Quiver& q);

struct Classification {
    QuiverKind kind;
    std::optional<std::string> label;  // ADE label such as "A3" or "D4+A1" for finite kind
};

Classification classify(const Quiver& q);

/// Catalogued quivers with vertices "1".."n": A<n>, D<n>, E6/E7/E8 and the
/// affine graphs A<n>~, D<n>~, E6~/E7~/E8~.
Quiver standard_quiver(const std::string& label);

/// C v for signed v.
WeightVec cartan_apply(const CartanData& c, const WeightVec& v);

}  // namespace ppa
