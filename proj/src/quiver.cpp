#include "ppa/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "ppa/errors.hpp"

namespace ppa {

DimVector DimVector::from_signed(const WeightVec& v) {
    DimVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw validation_error("NegativeDimension", "dimension vector has a negative entry");
        d[i] = static_cast<std::size_t>(v[i]);
    }
    return d;
}

std::size_t DimVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0}); }

bool DimVector::leq(const DimVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

std::string DimVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] + b[i];
    return d;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    DimVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw validation_error("NegativeDimension", "difference of dimension vectors is negative");
        d[i] = a[i] - b[i];
    }
    return d;
}

Quiver Quiver::build(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows) {
    Quiver q;
    std::set<std::string> seen_vertices;
    for (const auto& v : vertices)
        if (!seen_vertices.insert(v).second) throw validation_error("DuplicateName", "vertex '" + v + "' repeated");
    q.vertices_ = std::move(vertices);
    std::set<std::string> names;
    for (const auto& spec : arrows) {
        if (!names.insert(spec.name).second)
            throw validation_error("DuplicateName", "arrow '" + spec.name + "' repeated");
        auto find = [&](const std::string& id) {
            auto it = std::find(q.vertices_.begin(), q.vertices_.end(), id);
            if (it == q.vertices_.end())
                throw validation_error("DanglingEndpoint", "arrow '" + spec.name + "' uses unknown vertex '" + id + "'");
            return static_cast<std::size_t>(it - q.vertices_.begin());
        };
        Arrow a{spec.name, find(spec.from), find(spec.to)};
        if (a.source == a.target) throw validation_error("LoopArrow", "arrow '" + spec.name + "' is a loop");
        q.arrows_.push_back(a);
    }
    q.index_names();
    return q;
}

void Quiver::index_names() {
    std::vector<std::size_t> order(arrows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return arrows_[x].name < arrows_[y].name; });
    name_rank_.assign(arrows_.size(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) name_rank_[order[r]] = r;
}

Quiver Quiver::double_quiver() const {
    if (is_double()) throw validation_error("AlreadyDoubled", "quiver is already a double quiver");
    Quiver d;
    d.vertices_ = vertices_;
    d.arrows_ = arrows_;
    std::set<std::string> names;
    for (const auto& a : arrows_) names.insert(a.name);
    const std::size_t n = arrows_.size();
    std::vector<std::size_t> bar(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        std::string name = arrows_[k].name + "*";
        while (names.count(name)) name += "*";
        names.insert(name);
        d.arrows_.push_back({name, arrows_[k].target, arrows_[k].source});
        bar[k] = n + k;
        bar[n + k] = k;
    }
    d.bar_ = std::move(bar);
    d.index_names();
    return d;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) throw validation_error("UnknownVertex", "no vertex '" + id + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

std::size_t Quiver::bar(std::size_t a) const {
    if (!bar_) throw validation_error("NotDoubled", "bar involution requested on an undoubled quiver");
    return (*bar_)[a];
}

bool Quiver::is_original(std::size_t a) const { return !bar_ || a < arrows_.size() / 2; }

std::vector<std::size_t> Quiver::arrows_out(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == v) out.push_back(a);
    return out;
}

std::vector<std::size_t> Quiver::arrows_in(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].target == v) out.push_back(a);
    return out;
}

std::size_t Quiver::edge_count(std::size_t i, std::size_t j) const {
    std::size_t n = 0;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (!is_original(a)) continue;
        const auto& ar = arrows_[a];
        if ((ar.source == i && ar.target == j) || (ar.source == j && ar.target == i)) ++n;
    }
    return n;
}

Quiver Quiver::opposite() const {
    if (is_double()) throw validation_error("AlreadyDoubled", "opposite of a double quiver");
    Quiver q = *this;
    for (auto& a : q.arrows_) std::swap(a.source, a.target);
    return q;
}

nlohmann::ordered_json Quiver::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertices_;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (!is_original(a)) continue;
        nlohmann::ordered_json e;
        e["name"] = arrows_[a].name;
        e["from"] = vertices_[arrows_[a].source];
        e["to"] = vertices_[arrows_[a].target];
        arr.push_back(e);
    }
    j["arrows"] = arr;
    return j;
}

Quiver Quiver::from_json(const nlohmann::json& j) {
    auto as_id = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw validation_error("BadQuiverJson", "vertex ids must be strings or integers");
    };
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw validation_error("BadQuiverJson", "expected an object with a 'vertices' array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(as_id(v));
    std::vector<ArrowSpec> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw validation_error("BadQuiverJson", "'arrows' must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
                throw validation_error("BadQuiverJson", "each arrow needs name/from/to");
            arrows.push_back({as_id(a["name"]), as_id(a["from"]), as_id(a["to"])});
        }
    }
    return build(std::move(vertices), arrows);
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size() || bar_ != o.bar_) return false;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name != o.arrows_[a].name || arrows_[a].source != o.arrows_[a].source ||
            arrows_[a].target != o.arrows_[a].target)
            return false;
    return true;
}

std::string to_string(QuiverKind kind) {
    switch (kind) {
        case QuiverKind::Finite: return "finite";
        case QuiverKind::Affine: return "affine";
        case QuiverKind::Wild: return "wild";
    }
    return "?";
}

namespace {

enum class Definiteness { PositiveDefinite, Semidefinite, Indefinite };

// Exact symmetric elimination: a symmetric matrix is positive semidefinite iff
// diagonal pivoting never meets a negative pivot, and a zero pivot only ever
// sits on an all-zero row.
Definiteness definiteness(const std::vector<std::vector<long long>>& c, std::size_t& radical_dim) {
    const std::size_t n = c.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(c[i][j]);
    std::vector<bool> done(n, false);
    radical_dim = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && sgn(m[i][i]) > 0) {
                k = i;
                break;
            }
        if (k == n) {
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                if (sgn(m[i][i]) < 0) return Definiteness::Indefinite;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && sgn(m[i][j]) != 0) return Definiteness::Indefinite;
                ++radical_dim;
            }
            return radical_dim == 0 ? Definiteness::PositiveDefinite : Definiteness::Semidefinite;
        }
        done[k] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || sgn(m[i][k]) == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) m[i][j] -= f * m[k][j];
        }
    }
    return Definiteness::PositiveDefinite;
}

std::vector<std::vector<std::size_t>> components(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    std::vector<std::size_t> comp(n, n);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != n) continue;
        std::vector<std::size_t> members{s}, stack{s};
        comp[s] = out.size();
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t u = 0; u < n; ++u)
                if (comp[u] == n && q.edge_count(u, v) > 0) {
                    comp[u] = out.size();
                    members.push_back(u);
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

// Label of a connected finite-type component: a simple tree with at most one
// branch vertex, identified by the lengths of its arms.
std::optional<std::string> dynkin_label(const Quiver& q, const std::vector<std::size_t>& comp) {
    const std::size_t n = comp.size();
    std::map<std::size_t, std::vector<std::size_t>> adj;
    std::size_t edges = 0;
    for (auto u : comp)
        for (auto v : comp) {
            auto e = q.edge_count(u, v);
            if (e > 1) return std::nullopt;
            if (e == 1) adj[u].push_back(v);
            if (e == 1 && u < v) ++edges;
        }
    if (edges + 1 != n) return std::nullopt;
    std::vector<std::size_t> branch;
    for (auto u : comp)
        if (adj[u].size() > 2) branch.push_back(u);
    if (branch.empty()) return "A" + std::to_string(n);
    if (branch.size() > 1 || adj[branch[0]].size() != 3) return std::nullopt;
    std::vector<std::size_t> arms;
    for (auto start : adj[branch[0]]) {
        std::size_t len = 1, prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
    return std::nullopt;
}

}  // namespace

CartanData cartan_matrix(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    CartanData data;
    data.matrix.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            data.matrix[i][j] = (i == j ? 2 : 0) - static_cast<long long>(i == j ? 0 : q.edge_count(i, j));
    std::size_t radical = 0;
    switch (definiteness(data.matrix, radical)) {
        case Definiteness::PositiveDefinite: data.kind = QuiverKind::Finite; break;
        case Definiteness::Semidefinite: data.kind = radical == 1 ? QuiverKind::Affine : QuiverKind::Wild; break;
        case Definiteness::Indefinite: data.kind = QuiverKind::Wild; break;
    }
    return data;
}

WeightVec cartan_apply(const CartanData& c, const WeightVec& v) {
    WeightVec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += c.matrix[i][j] * v[j];
    return out;
}

Classification classify(const Quiver& q) {
    auto data = cartan_matrix(q);
    Classification c{data.kind, std::nullopt};
    if (data.kind != QuiverKind::Finite) return c;
    auto comps = components(q);
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::string label;
    for (const auto& comp : comps) {
        auto part = dynkin_label(q, comp);
        if (!part) return c;
        if (!label.empty()) label += "+";
        label += *part;
    }
    c.label = label;
    return c;
}

Quiver standard_quiver(const std::string& label) {
    if (label.empty()) throw validation_error("UnknownQuiver", "empty label");
    const bool affine = label.back() == '~';
    const std::string body = affine ? label.substr(0, label.size() - 1) : label;
    if (body.size() < 2) throw validation_error("UnknownQuiver", "unknown label '" + label + "'");
    const char type = body[0];
    std::size_t n = 0;
    try {
        n = std::stoul(body.substr(1));
    } catch (...) {
        throw validation_error("UnknownQuiver", "unknown label '" + label + "'");
    }
    std::size_t count = affine ? n + 1 : n;
    std::vector<std::string> vertices;
    for (std::size_t i = 1; i <= count; ++i) vertices.push_back(std::to_string(i));
    std::vector<ArrowSpec> arrows;
    auto edge = [&](std::size_t from, std::size_t to) {
        arrows.push_back({"a" + std::to_string(arrows.size() + 1), std::to_string(from), std::to_string(to)});
    };
    auto path = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) edge(i, i + 1);
    };
    // center c with arms of the given lengths, vertices numbered arm by arm
    auto star = [&](std::vector<std::size_t> arms) {
        std::size_t next = 2;
        for (auto len : arms) {
            edge(1, next);
            for (std::size_t k = 1; k < len; ++k, ++next) edge(next, next + 1);
            ++next;
        }
    };
    if (!affine) {
        if (type == 'A' && n >= 1) path(1, n);
        else if (type == 'D' && n >= 4) {
            path(1, n - 1);
            edge(n - 2, n);
        } else if (type == 'E' && n >= 6 && n <= 8) {
            path(1, n - 1);
            edge(3, n);
        } else throw validation_error("UnknownQuiver", "unknown label '" + label + "'");
    } else {
        if (type == 'A' && n == 1) {
            edge(1, 2);
            edge(1, 2);
        } else if (type == 'A' && n >= 2) {
            path(1, n + 1);
            edge(n + 1, 1);
        } else if (type == 'D' && n >= 4) {
            path(2, n);
            edge(1, 3);
            edge(n - 1, n + 1);
        } else if (type == 'E' && n == 6) star({2, 2, 2});
        else if (type == 'E' && n == 7) star({1, 3, 3});
        else if (type == 'E' && n == 8) star({1, 2, 5});
        else throw validation_error("UnknownQuiver", "unknown label '" + label + "'");
    }
    return Quiver::build(std::move(vertices), arrows);
}

}  // namespace ppa
