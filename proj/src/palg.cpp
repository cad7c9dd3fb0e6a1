#include "ppa/palg.hpp"

#include <algorithm>

#include "ppa/errors.hpp"
#include "ppa/matrix.hpp"

namespace ppa {

std::string path_name(const Quiver& dq, const Path& p) {
    if (p.arrows.empty()) return "e" + dq.vertices()[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ".";
        s += dq.arrow(p.arrows[k]).name;
    }
    return s;
}

bool path_less(const Quiver& dq, const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.arrows.empty()) return x.source < y.source;
    for (std::size_t k = 0; k < x.arrows.size(); ++k) {
        auto rx = dq.name_rank(x.arrows[k]), ry = dq.name_rank(y.arrows[k]);
        if (rx != ry) return rx < ry;
    }
    return false;
}

std::vector<Path> raw_paths(const Quiver& dq, std::size_t n, std::size_t i, std::size_t j) {
    // grow from the source end: prepend arrows
    std::vector<Path> layer{Path{{}, i, i}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Path> next;
        for (const auto& p : layer)
            for (auto a : dq.arrows_out(p.target)) {
                Path q{{a}, i, dq.arrow(a).target};
                q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
                next.push_back(std::move(q));
            }
        layer = std::move(next);
    }
    std::vector<Path> out;
    for (auto& p : layer)
        if (p.target == j) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) { return path_less(dq, x, y); });
    return out;
}

PreprojectiveAlgebra::PreprojectiveAlgebra(const Quiver& q) : q_(q), dq_(q.double_quiver()) {}

const AlgSlice& PreprojectiveAlgebra::slice(std::size_t n) {
    while (slices_.size() <= n) extend();
    return slices_[n];
}

void PreprojectiveAlgebra::extend() {
    const std::size_t n = slices_.size();
    AlgSlice s;
    s.degree = n;
    if (n == 0) {
        for (std::size_t v = 0; v < dq_.num_vertices(); ++v) s.basis.push_back(Path{{}, v, v});
        slices_.push_back(std::move(s));
        return;
    }
    const AlgSlice& prev = slices_[n - 1];

    // Every element of P_n is a sum of a*beta with beta a basis path of P_{n-1}.
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    std::vector<Path> cand_paths;
    for (std::size_t a = 0; a < dq_.num_arrows(); ++a)
        for (std::size_t b = 0; b < prev.basis.size(); ++b)
            if (prev.basis[b].target == dq_.arrow(a).source) {
                cands.push_back({a, b});
                Path p{{a}, prev.basis[b].source, dq_.arrow(a).target};
                p.arrows.insert(p.arrows.end(), prev.basis[b].arrows.begin(), prev.basis[b].arrows.end());
                cand_paths.push_back(std::move(p));
            }
    // columns run from the latest path to the earliest, so pivots land on
    // late paths and the surviving basis is made of the earliest ones
    std::vector<std::size_t> order(cands.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return path_less(dq_, cand_paths[y], cand_paths[x]); });
    std::vector<std::size_t> column_of(cands.size());
    for (std::size_t c = 0; c < order.size(); ++c) column_of[order[c]] = c;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cand_index;
    for (std::size_t k = 0; k < cands.size(); ++k) cand_index[cands[k]] = k;

    // Relations in degree n: rho_k * gamma for gamma a basis path of P_{n-2}
    // ending at k, where rho_k = sum_{t(a)=k} a a* - sum_{s(a)=k} a* a.
    Rationals qq;
    std::vector<Vec<Rationals>> rows;
    if (n >= 2) {
        const AlgSlice& prev2 = slices_[n - 2];
        for (std::size_t g = 0; g < prev2.basis.size(); ++g) {
            const std::size_t k = prev2.basis[g].target;
            Vec<Rationals> row(cands.size(), qq.zero());
            bool nonzero = false;
            for (std::size_t a = 0; a < dq_.num_arrows(); ++a) {
                if (!dq_.is_original(a)) continue;
                const auto& ar = dq_.arrow(a);
                auto add_term = [&](std::size_t outer, std::size_t inner, int sign) {
                    auto it = prev.left_mult.find({inner, g});
                    if (it == prev.left_mult.end()) return;
                    for (const auto& [beta, c] : it->second) {
                        auto col = column_of[cand_index.at({outer, beta})];
                        row[col] += sign > 0 ? c : mpq_class(-c);
                        nonzero = true;
                    }
                };
                if (ar.target == k) add_term(a, dq_.bar(a), +1);
                if (ar.source == k) add_term(dq_.bar(a), a, -1);
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    auto ech = rref(Matrix<Rationals>::from_rows(qq, cands.size(), rows));
    std::vector<bool> is_pivot(cands.size(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cands;
    for (std::size_t k = 0; k < cands.size(); ++k)
        if (!is_pivot[column_of[k]]) free_cands.push_back(k);
    std::sort(free_cands.begin(), free_cands.end(),
              [&](auto x, auto y) { return path_less(dq_, cand_paths[x], cand_paths[y]); });
    std::vector<std::size_t> basis_of_column(cands.size(), cands.size());
    for (std::size_t b = 0; b < free_cands.size(); ++b) {
        s.basis.push_back(cand_paths[free_cands[b]]);
        basis_of_column[column_of[free_cands[b]]] = b;
    }
    for (std::size_t k = 0; k < cands.size(); ++k) {
        SparseVec v;
        auto col = column_of[k];
        if (!is_pivot[col]) {
            v[basis_of_column[col]] = 1;
        } else {
            auto r = static_cast<std::size_t>(std::find(ech.pivots.begin(), ech.pivots.end(), col) - ech.pivots.begin());
            for (std::size_t c = 0; c < cands.size(); ++c)
                if (!is_pivot[c] && sgn(ech.reduced(r, c)) != 0) v[basis_of_column[c]] = -ech.reduced(r, c);
        }
        s.left_mult[cands[k]] = std::move(v);
    }
    slices_.push_back(std::move(s));
}

std::vector<std::vector<std::size_t>> PreprojectiveAlgebra::dims_by_pair(std::size_t n) {
    const std::size_t v = dq_.num_vertices();
    std::vector<std::vector<std::size_t>> out(v, std::vector<std::size_t>(v, 0));
    for (const auto& p : slice(n).basis) ++out[p.target][p.source];
    return out;
}

std::vector<std::size_t> PreprojectiveAlgebra::hilbert(std::size_t max_degree) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_degree; ++n) out.push_back(dim(n));
    return out;
}

std::optional<std::size_t> PreprojectiveAlgebra::vanishing_degree(std::size_t limit) {
    for (std::size_t n = 0; n <= limit; ++n)
        if (dim(n) == 0) return n;
    return std::nullopt;
}

std::optional<std::size_t> PreprojectiveAlgebra::basis_index(const Path& p) {
    const auto& b = slice(p.length()).basis;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] == p) return k;
    return std::nullopt;
}

SparseVec PreprojectiveAlgebra::left_multiply(std::size_t arrow, std::size_t n, const SparseVec& x) {
    const auto& next = slice(n + 1);
    SparseVec out;
    for (const auto& [beta, c] : x) {
        auto it = next.left_mult.find({arrow, beta});
        if (it == next.left_mult.end()) continue;
        for (const auto& [k, d] : it->second) out[k] += c * d;
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

SparseVec PreprojectiveAlgebra::rewrite(const Path& p) {
    SparseVec v{{p.source, mpq_class(1)}};
    std::size_t n = 0;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it, ++n) {
        if (dq_.arrow(*it).source != (n == 0 ? p.source : dq_.arrow(*std::prev(it)).target))
            throw validation_error("BadPath", "arrows do not compose");
        v = left_multiply(*it, n, v);
        if (v.empty()) break;
    }
    return v;
}

SparseVec PreprojectiveAlgebra::multiply(std::size_t m, const SparseVec& x, std::size_t n, const SparseVec& y) {
    SparseVec out;
    const auto xb = slice(m).basis;
    for (const auto& [bi, c] : x) {
        const Path& beta = xb[bi];
        SparseVec cur;
        if (m == 0) {
            // e_j * y keeps the components of y ending at j
            for (const auto& [k, d] : y)
                if (slice(n).basis[k].target == beta.source) cur[k] = d;
        } else {
            cur = y;
            for (const auto& [k, d] : y)
                if (slice(n).basis[k].target != beta.source) cur.erase(k);
            for (std::size_t step = 0; step < m && !cur.empty(); ++step)
                cur = left_multiply(beta.arrows[m - 1 - step], n + step, cur);
        }
        for (const auto& [k, d] : cur) out[k] += c * d;
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace ppa
