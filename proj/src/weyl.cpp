#include "ppa/weyl.hpp"

#include <algorithm>
#include <set>

#include "ppa/errors.hpp"

namespace ppa {

namespace {

void require_finite(const CartanData& c) {
    if (c.kind != QuiverKind::Finite) throw validation_error("NotFiniteType", "operation needs a finite-type quiver");
}

void check_word(const CartanData& c, const WeylWord& word) {
    for (auto i : word)
        if (i >= c.matrix.size()) throw validation_error("UnknownVertex", "word letter out of range");
}

WeightVec regular(const CartanData& c) { return WeightVec(c.matrix.size(), 1); }

WeightVec zero(const CartanData& c) { return WeightVec(c.matrix.size(), 0); }

// linear action on the root lattice
WeightVec reflect_root(const CartanData& c, std::size_t i, WeightVec x) {
    long long ci = 0;
    for (std::size_t j = 0; j < x.size(); ++j) ci += c.matrix[i][j] * x[j];
    x[i] -= ci;
    return x;
}

}  // namespace

std::string word_to_string(const Quiver& q, const WeylWord& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) s += (k ? " " : "") + q.vertices()[word[k]];
    return s;
}

WeightVec reflect_dot(const CartanData& c, std::size_t i, const WeightVec& w, const WeightVec& v) {
    long long cv = 0;
    for (std::size_t j = 0; j < v.size(); ++j) cv += c.matrix[i][j] * v[j];
    WeightVec out = v;
    out[i] += w[i] - cv;
    return out;
}

WeightVec act(const CartanData& c, const WeylWord& word, const WeightVec& w, const WeightVec& v) {
    check_word(c, word);
    WeightVec x = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_dot(c, *it, w, x);
    return x;
}

std::vector<WeightVec> dot_chain(const CartanData& c, const WeylWord& word, const WeightVec& w) {
    check_word(c, word);
    std::vector<WeightVec> out{zero(c)};
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(reflect_dot(c, *it, w, out.back()));
    return out;
}

std::vector<OrbitEntry> extremal_orbit(const CartanData& c, const WeightVec& w, std::size_t length_cap) {
    std::vector<OrbitEntry> out{{zero(c), {}}};
    std::set<WeightVec> seen{zero(c)};
    std::size_t begin = 0;
    for (std::size_t depth = 0; depth < length_cap; ++depth) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (std::size_t i = 0; i < c.matrix.size(); ++i) {
                auto v = reflect_dot(c, i, w, out[k].v);
                if (!seen.insert(v).second) continue;
                WeylWord word{i};
                word.insert(word.end(), out[k].word.begin(), out[k].word.end());
                out.push_back({v, word});
            }
        if (out.size() == end) break;
        begin = end;
    }
    return out;
}

bool is_extremal(const CartanData& c, const WeightVec& w, const WeightVec& v) {
    WeightVec x = v;
    while (true) {
        if (std::all_of(x.begin(), x.end(), [](long long e) { return e == 0; })) return true;
        if (std::any_of(x.begin(), x.end(), [](long long e) { return e < 0; })) return false;
        bool moved = false;
        for (std::size_t i = 0; i < x.size() && !moved; ++i) {
            long long cv = 0;
            for (std::size_t j = 0; j < x.size(); ++j) cv += c.matrix[i][j] * x[j];
            if (w[i] - cv < 0) {
                x = reflect_dot(c, i, w, x);
                moved = true;
            }
        }
        if (!moved) return false;
    }
}

std::size_t word_length(const CartanData& c, const WeylWord& word) {
    const auto target = act(c, word, regular(c), zero(c));
    std::set<WeightVec> seen{zero(c)};
    std::vector<WeightVec> frontier{zero(c)};
    for (std::size_t depth = 0;; ++depth) {
        if (std::find(frontier.begin(), frontier.end(), target) != frontier.end()) return depth;
        if (depth >= word.size()) throw internal_error("LengthSearch", "element not reached within its word length");
        std::vector<WeightVec> next;
        for (const auto& v : frontier)
            for (std::size_t i = 0; i < c.matrix.size(); ++i) {
                auto u = reflect_dot(c, i, regular(c), v);
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
}

bool is_reduced(const CartanData& c, const WeylWord& word) { return word_length(c, word) == word.size(); }

bool same_element(const CartanData& c, const WeylWord& x, const WeylWord& y) {
    return act(c, x, regular(c), zero(c)) == act(c, y, regular(c), zero(c));
}

WeylWord longest_element(const CartanData& c) {
    require_finite(c);
    auto orbit = extremal_orbit(c, regular(c), static_cast<std::size_t>(-1));
    return orbit.back().word;
}

std::vector<std::size_t> theta(const CartanData& c) {
    require_finite(c);
    const auto w0 = longest_element(c);
    const std::size_t n = c.matrix.size();
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        WeightVec x(n, 0);
        x[i] = 1;
        for (auto it = w0.rbegin(); it != w0.rend(); ++it) x = reflect_root(c, *it, x);
        std::size_t found = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] == -1 && found == n) found = j;
            else if (x[j] != 0) found = n + 1;
        }
        if (found >= n) throw internal_error("ThetaFailed", "longest element does not send a simple root to a negative simple root");
        out[i] = found;
    }
    return out;
}

bool bruhat_leq(const CartanData& c, const WeylWord& u, const WeylWord& v) {
    if (!is_reduced(c, v)) throw validation_error("NotReduced", "upper word must be reduced");
    check_word(c, u);
    const auto rho = regular(c);
    std::set<WeightVec> reach{zero(c)};
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        std::set<WeightVec> next = reach;
        for (const auto& y : reach) next.insert(reflect_dot(c, *it, rho, y));
        reach = std::move(next);
    }
    return reach.count(act(c, u, rho, zero(c))) > 0;
}

std::vector<WeightVec> positive_roots(const CartanData& c) {
    require_finite(c);
    const std::size_t n = c.matrix.size();
    std::set<WeightVec> roots;
    std::vector<WeightVec> stack;
    for (std::size_t i = 0; i < n; ++i) {
        WeightVec e(n, 0);
        e[i] = 1;
        roots.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            auto r = reflect_root(c, i, b);
            if (std::any_of(r.begin(), r.end(), [](long long e) { return e < 0; })) continue;
            if (roots.insert(r).second) stack.push_back(r);
        }
    }
    std::vector<WeightVec> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const WeightVec& x, const WeightVec& y) {
        long long hx = 0, hy = 0;
        for (auto e : x) hx += e;
        for (auto e : y) hy += e;
        return hx != hy ? hx < hy : x < y;
    });
    return out;
}

WeightMultiplicity::WeightMultiplicity(CartanData c, WeightVec w) : c_(std::move(c)), w_(std::move(w)) {
    require_finite(c_);
    if (w_.size() != c_.matrix.size()) throw validation_error("ShapeMismatch", "weight vector length");
    if (std::any_of(w_.begin(), w_.end(), [](long long e) { return e < 0; }))
        throw validation_error("NegativeDimension", "highest weight must be dominant");
    roots_ = positive_roots(c_);
}

mpz_class WeightMultiplicity::operator()(const WeightVec& v) {
    const std::size_t n = v.size();
    if (std::any_of(v.begin(), v.end(), [](long long e) { return e < 0; })) return 0;
    if (std::all_of(v.begin(), v.end(), [](long long e) { return e == 0; })) return 1;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;

    auto form = [&](const WeightVec& x, const WeightVec& y) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += mpz_class(static_cast<long>(x[i] * c_.matrix[i][j] * y[j]));
        return s;
    };
    // |λ+ρ|^2 - |μ+ρ|^2 with μ = λ - α_v
    mpz_class coeff = -form(v, v);
    for (std::size_t i = 0; i < n; ++i) coeff += 2 * mpz_class(static_cast<long>(v[i] * (w_[i] + 1)));

    mpz_class rhs = 0;
    for (const auto& beta : roots_) {
        mpz_class wb = 0;
        for (std::size_t i = 0; i < n; ++i) wb += mpz_class(static_cast<long>(w_[i] * beta[i]));
        for (long long k = 1;; ++k) {
            WeightVec u = v;
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                u[i] -= k * beta[i];
                if (u[i] < 0) ok = false;
            }
            if (!ok) break;
            auto m = (*this)(u);
            if (m != 0) rhs += (wb - form(u, beta)) * m;
        }
    }
    rhs *= 2;
    mpz_class result = 0;
    if (coeff == 0) {
        if (rhs != 0) throw internal_error("Freudenthal", "zero norm gap with nonzero right-hand side");
    } else {
        if (rhs % coeff != 0) throw internal_error("Freudenthal", "inexact division in the recursion");
        result = rhs / coeff;
    }
    memo_[v] = result;
    return result;
}

mpz_class WeightMultiplicity::dimension() const {
    mpq_class d = 1;
    for (const auto& beta : roots_) {
        long long num = 0, ht = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            num += beta[i] * (w_[i] + 1);
            ht += beta[i];
        }
        d *= mpq_class(static_cast<long>(num), static_cast<unsigned long>(ht));
    }
    d.canonicalize();
    if (d.get_den() != 1) throw internal_error("WeylDimension", "non-integral dimension");
    return d.get_num();
}

}  // namespace ppa
