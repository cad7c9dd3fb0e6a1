#include "ppa/json_io.hpp"

#include <charconv>
#include <sstream>

namespace ppa::json {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

std::size_t parse_count(const std::string& s) {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw validation_error("BadDimVector", "'" + s + "' is not a non-negative integer");
    return n;
}

}  // namespace

DimVector parse_dims(const Quiver& q, const std::string& text) {
    DimVector d(q.num_vertices());
    if (text.find_first_not_of(" \t") == std::string::npos) return d;
    auto parts = split(text, ',');
    if (text.find(':') != std::string::npos) {
        for (const auto& part : parts) {
            auto kv = split(part, ':');
            if (kv.size() != 2) throw validation_error("BadDimVector", "expected vertex:count, got '" + part + "'");
            d[q.vertex_index(kv[0])] = parse_count(kv[1]);
        }
        return d;
    }
    if (parts.size() != q.num_vertices())
        throw validation_error("BadDimVector", "expected " + std::to_string(q.num_vertices()) + " entries");
    for (std::size_t v = 0; v < parts.size(); ++v) d[v] = parse_count(parts[v]);
    return d;
}

WeylWord parse_word(const Quiver& q, const std::string& text) {
    WeylWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(q.vertex_index(tok));
    return w;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> ps;
    for (const auto& s : split(text, ',')) {
        auto n = parse_count(s);
        if (n > UINT32_MAX || !is_prime(n)) throw validation_error("NotPrime", s + " is not a prime");
        ps.push_back(static_cast<std::uint32_t>(n));
    }
    return ps;
}

ordered dims(const Quiver& q, const DimVector& d) {
    ordered out = ordered::object();
    for (std::size_t v = 0; v < d.size(); ++v) out[q.vertices()[v]] = d[v];
    return out;
}

DimVector dims_from(const Quiver& q, const nlohmann::json& j) {
    DimVector d(q.num_vertices());
    if (j.is_array()) {
        if (j.size() != d.size()) throw validation_error("BadDimVector", "wrong number of entries");
        for (std::size_t v = 0; v < d.size(); ++v) d[v] = j[v].get<std::size_t>();
    } else if (j.is_object()) {
        for (const auto& [k, n] : j.items()) d[q.vertex_index(k)] = n.get<std::size_t>();
    } else if (j.is_string()) {
        return parse_dims(q, j.get<std::string>());
    } else {
        throw validation_error("BadDimVector", "dims must be an array, object or string");
    }
    return d;
}

Quiver undouble(const Quiver& dq) { return Quiver::from_json(dq.to_json()); }

ordered count_poly(const CountPoly& cp) {
    ordered out;
    ordered counts = ordered::array();
    for (std::size_t k = 0; k < cp.counts.size(); ++k) {
        auto p = k < cp.primes_used.size() ? cp.primes_used[k] : cp.consistency_primes[k - cp.primes_used.size()];
        counts.push_back(ordered{{"p", p}, {"count", cp.counts[k]}});
    }
    out["counts"] = std::move(counts);
    out["degree_bound"] = cp.degree_bound;
    ordered coeffs = ordered::array();
    for (const auto& c : cp.coeffs) coeffs.push_back(c.get_str());
    out["coefficients"] = std::move(coeffs);
    out["polynomial"] = cp.to_string();
    out["consistency_primes"] = cp.consistency_primes;
    out["chi"] = cp.chi.get_str();
    out["leading"] = cp.leading.get_str();
    return out;
}

ordered check(const Check& c) {
    ordered out{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

ordered int_matrix(const IntMatrix& m) {
    ordered rows = ordered::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

}  // namespace ppa::json
