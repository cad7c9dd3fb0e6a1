#pragma once

// JSON encodings. Rationals are written as exact strings ("3/2"), prime
// field entries as integers; every object is emitted with ordered keys so
// that output is byte-stable.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppa/demazure.hpp"
#include "ppa/geomrep.hpp"
#include "ppa/grassmann.hpp"
#include "ppa/hull.hpp"

namespace ppa::json {

using ordered = nlohmann::ordered_json;

/// "1:2,3:1" (vertex ids) or "2,0,1" (canonical order). Missing vertices
/// in the keyed form are 0.
DimVector parse_dims(const Quiver& q, const std::string& text);
WeylWord parse_word(const Quiver& q, const std::string& text);
std::vector<std::uint32_t> parse_primes(const std::string& text);

ordered dims(const Quiver& q, const DimVector& d);
DimVector dims_from(const Quiver& q, const nlohmann::json& j);

/// The original quiver underlying a double quiver.
Quiver undouble(const Quiver& dq);

ordered count_poly(const CountPoly& cp);
ordered check(const Check& c);
ordered int_matrix(const IntMatrix& m);

template <class F>
ordered element(const F& f, const typename F::Element& e) {
    if constexpr (std::is_same_v<F, Rationals>) return f.to_string(e);
    else return e;
}

template <class F>
ordered matrix(const Matrix<F>& m) {
    ordered rows = ordered::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered row = ordered::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element(m.field(), m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Matrix<F> matrix_from(const F& f, const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw validation_error("ShapeMismatch", "matrix row count");
    Matrix<F> m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw validation_error("ShapeMismatch", "matrix column count");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = j[r][c];
            m(r, c) = x.is_string() ? f.parse(x.get<std::string>()) : f.from_int(x.get<long long>());
        }
    }
    return m;
}

template <class F>
ordered rep(const Rep<F>& V) {
    const Quiver& dq = V.quiver();
    ordered out;
    out["field"] = V.field().spec().tag();
    out["quiver"] = undouble(dq).to_json();
    out["dims"] = dims(dq, V.dims());
    ordered maps;
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) maps[dq.arrow(a).name] = matrix(V.map(a));
    out["maps"] = std::move(maps);
    return out;
}

/// Inverse of rep(); validates the relations.
template <class F>
Rep<F> rep_from(const F& f, const nlohmann::json& j) {
    const Quiver dq = Quiver::from_json(j.at("quiver")).double_quiver();
    const DimVector d = dims_from(dq, j.at("dims"));
    std::vector<Matrix<F>> maps;
    for (const auto& a : dq.arrows()) {
        if (!j.at("maps").contains(a.name)) throw validation_error("ShapeMismatch", "no matrix for arrow " + a.name);
        maps.push_back(matrix_from(f, j.at("maps").at(a.name), d[a.target], d[a.source]));
    }
    return make_rep(f, dq, d, std::move(maps), true);
}

template <class F>
ordered subrep(const Quiver& dq, const Subrep<F>& U) {
    ordered out;
    out["dims"] = dims(dq, U.dims());
    ordered spaces;
    for (std::size_t v = 0; v < U.spaces.size(); ++v) spaces[dq.vertices()[v]] = matrix(U.spaces[v].basis());
    out["spaces"] = std::move(spaces);
    return out;
}

template <class F>
ordered graded_map(const Quiver& dq, const GradedMap<F>& g) {
    ordered out;
    for (std::size_t v = 0; v < g.size(); ++v) out[dq.vertices()[v]] = matrix(g[v]);
    return out;
}

inline ordered labels(const Quiver& dq, const std::vector<std::vector<BasisLabel>>& ls) {
    ordered out;
    for (std::size_t v = 0; v < ls.size(); ++v) {
        ordered arr = ordered::array();
        for (const auto& l : ls[v])
            arr.push_back(ordered{{"component", dq.vertices()[l.component]}, {"copy", l.copy}, {"path", path_name(dq, l.path)}});
        out[dq.vertices()[v]] = std::move(arr);
    }
    return out;
}

template <class F>
ordered injective(const InjectiveModel<F>& m) {
    const Quiver& dq = m.rep.quiver();
    ordered out;
    out["w"] = dims(dq, m.w);
    out["bound"] = m.bound;
    out["complete"] = m.complete;
    out["rep"] = rep(m.rep);
    out["socle"] = subrep(dq, m.socle_copy());
    out["labels"] = labels(dq, m.labels);
    out["projection"] = graded_map(dq, m.projection);
    return out;
}

inline ordered projective(const ProjectiveModel& m) {
    const Quiver& dq = m.rep.quiver();
    ordered out;
    out["w"] = dims(dq, m.w);
    out["bound"] = m.bound;
    out["complete"] = m.complete;
    out["rep"] = rep(m.rep);
    out["labels"] = labels(dq, m.labels);
    return out;
}

}  // namespace ppa::json
