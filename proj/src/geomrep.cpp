#include "ppa/geomrep.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace ppa {

namespace {

std::vector<DimVector> all_below(const DimVector& top) {
    std::vector<DimVector> out;
    DimVector v(top.size());
    while (true) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < v.size() && v[k] == top[k]) v[k++] = 0;
        if (k == v.size()) break;
        ++v[k];
    }
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        return a.total() != b.total() ? a.total() < b.total() : a < b;
    });
    return out;
}

// symmetric residue lift of a canonical basis over F_p
Subspace<Rationals> lift(const Subspace<PrimeField>& s) {
    Rationals qq;
    const auto p = static_cast<long long>(s.field().characteristic());
    Matrix<Rationals> m(qq, s.dim(), s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
            long long x = s.basis()(r, c);
            if (x > p / 2) x -= p;
            m(r, c) = qq.from_int(x);
        }
    return Subspace<Rationals>::span(m);
}

std::uint32_t next_prime(std::uint32_t p) {
    do ++p;
    while (!is_prime(p));
    return p;
}

std::vector<std::uint32_t> extend_primes(std::vector<std::uint32_t> primes, std::size_t need) {
    if (primes.empty()) primes.push_back(2);
    while (primes.size() < need) primes.push_back(next_prime(*std::max_element(primes.begin(), primes.end())));
    return primes;
}

Check make_check(std::string name, bool ok, std::string detail = "") { return {std::move(name), ok, std::move(detail)}; }

IntMatrix transpose(const IntMatrix& a) {
    const std::size_t n = a.size();
    IntMatrix t = mat_zero(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t[c][r] = a[r][c];
    return t;
}

IntMatrix bracket(const IntMatrix& a, const IntMatrix& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

IntMatrix plus_scalar(const IntMatrix& a, long long s) {
    IntMatrix m = a;
    for (std::size_t k = 0; k < m.size(); ++k) m[k][k] += s;
    return m;
}

std::string vertex_pair(const Quiver& q, std::size_t i, std::size_t j) {
    return q.vertices()[i] + "," + q.vertices()[j];
}

}  // namespace

bool FiniteRealization::all_finite() const {
    return std::all_of(weights.begin(), weights.end(), [](const WeightPoints& p) { return p.finite; });
}

std::optional<std::size_t> FiniteRealization::find_weight(const DimVector& v) const {
    for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k].v == v) return k;
    return std::nullopt;
}

FiniteRealization finite_points(const Rep<Rationals>& V, const DimVector& w, const std::vector<std::uint32_t>& primes,
                                std::uint64_t cap) {
    if (primes.empty()) throw validation_error("NotEnoughPrimes", "at least one prime is needed");
    FiniteRealization real;
    real.w = w;
    real.top = V.dims();
    const auto largest = *std::max_element(primes.begin(), primes.end());
    for (const auto& v : all_below(real.top)) {
        WeightPoints wp;
        wp.v = v;
        std::vector<std::future<std::uint64_t>> tasks;
        for (auto p : primes)
            tasks.push_back(std::async(std::launch::async, [&V, &v, cap, p] {
                return count_submodules(reduce_rep(V, PrimeField(p)), v, cap);
            }));
        for (auto& t : tasks) wp.counts.push_back(t.get());
        if (std::all_of(wp.counts.begin(), wp.counts.end(), [](std::uint64_t n) { return n == 0; })) continue;
        wp.finite = std::all_of(wp.counts.begin(), wp.counts.end(), [&](std::uint64_t n) { return n == wp.counts[0]; });
        if (wp.finite) {
            PrimeField fp(largest);
            std::set<Subrep<Rationals>> lifted;
            for (const auto& U : enumerate_submodules(reduce_rep(V, fp), v, cap)) {
                Subrep<Rationals> L;
                for (const auto& s : U.spaces) L.spaces.push_back(lift(s));
                if (L.dims() == v && is_submodule(V, L)) lifted.insert(std::move(L));
            }
            wp.finite = lifted.size() == wp.counts[0];
            if (wp.finite) wp.points.assign(lifted.begin(), lifted.end());
        }
        real.weights.push_back(std::move(wp));
    }
    for (std::size_t k = 0; k < real.weights.size(); ++k)
        for (std::size_t j = 0; j < real.weights[k].points.size(); ++j) real.index.push_back({k, j});
    return real;
}

IntMatrix mat_zero(std::size_t n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix m = mat_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] -= b[i][j];
    return m;
}

bool mat_is_zero(const IntMatrix& a) {
    for (const auto& row : a)
        for (auto x : row)
            if (x) return false;
    return true;
}

Operators operator_matrices(const FiniteRealization& real, const CartanData& c) {
    if (!real.all_finite()) throw validation_error("NotFiniteRegime", "some grassmannian is not a finite point set");
    const std::size_t n = real.num_points(), nv = real.w.size();
    Operators ops;
    for (std::size_t i = 0; i < nv; ++i) {
        IntMatrix E = mat_zero(n), H = mat_zero(n);
        for (std::size_t a = 0; a < n; ++a) {
            const auto& [wa, pa] = real.index[a];
            const auto& va = real.weights[wa].v;
            long long cv = 0;
            for (std::size_t j = 0; j < nv; ++j) cv += c.matrix[i][j] * static_cast<long long>(va[j]);
            H[a][a] = static_cast<long long>(real.w[i]) - cv;
            for (std::size_t b = 0; b < n; ++b) {
                const auto& [wb, pb] = real.index[b];
                if (real.weights[wb].v != va + DimVector::unit(nv, i)) continue;
                if (real.weights[wb].points[pb].contains(real.weights[wa].points[pa])) E[a][b] = 1;
            }
        }
        ops.F.push_back(transpose(E));
        ops.E.push_back(std::move(E));
        ops.H.push_back(std::move(H));
    }
    return ops;
}

mpz_class fiber_euler(const Rep<Rationals>& V, const Subrep<Rationals>& U, std::size_t i, Direction dir,
                      const std::vector<std::uint32_t>& primes, std::uint64_t cap) {
    require_submodule(V, U);
    const Quiver& dq = V.quiver();
    const std::size_t nv = dq.num_vertices();
    const DimVector u = U.dims();
    if (dir == Direction::Down && u[i] == 0) return 0;
    if (dir == Direction::Up && u[i] == V.dim(i)) return 0;
    const DimVector target = dir == Direction::Up ? u + DimVector::unit(nv, i) : u - DimVector::unit(nv, i);

    // the fiber is a projective space of lines (up) or hyperplanes (down) in
    // a space of dimension k; k - 1 bounds the degree of its count
    std::size_t k = 0;
    if (dir == Direction::Up) {
        auto K = Subspace<Rationals>::full(Rationals{}, V.dim(i));
        for (auto a : dq.arrows_out(i)) K = K.intersect(Subspace<Rationals>::preimage(V.map(a), U.spaces[dq.arrow(a).target]));
        k = K.dim() - U.spaces[i].dim();
    } else {
        Subspace<Rationals> I(Rationals{}, V.dim(i));
        for (auto a : dq.arrows_in(i)) I = I.sum(U.spaces[dq.arrow(a).source].image(V.map(a)));
        k = U.spaces[i].dim() - I.dim();
    }
    const std::size_t bound = k == 0 ? 0 : k - 1;
    auto ps = extend_primes(primes, bound + 2);
    std::vector<std::uint64_t> counts;
    for (auto p : ps) {
        PrimeField fp(p);
        auto Vp = reduce_rep(V, fp);
        auto Up = reduce_subrep(U, fp);
        counts.push_back(dir == Direction::Up ? count_submodules(Vp, target, cap, &Up, nullptr)
                                              : count_submodules(Vp, target, cap, nullptr, &Up));
    }
    return interpolate_counts(ps, counts, bound).chi;
}

bool Sl2Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool ChevalleyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Sl2Report verify_sl2(const Quiver& q, const DimVector& w, const std::vector<std::uint32_t>& primes, std::uint64_t cap) {
    auto c = cartan_matrix(q);
    if (c.kind != QuiverKind::Finite) throw validation_error("NotFiniteType", "verify_sl2 needs a finite-type quiver");
    PreprojectiveAlgebra alg(q);
    auto model = injective_module(alg, w);
    auto real = finite_points(model.rep, w, primes, cap);
    WeightMultiplicity mult(c, w.to_signed());
    const std::size_t nv = q.num_vertices();
    Sl2Report rep;
    rep.finite_regime = real.all_finite();
    if (rep.finite_regime) {
        rep.total_dim = real.num_points();
        auto ops = operator_matrices(real, c);
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nv; ++j) {
                auto comm = bracket(ops.E[i], ops.F[j]);
                bool ok = i == j ? comm == ops.H[i] : mat_is_zero(comm);
                rep.checks.push_back(make_check("[E,F] " + vertex_pair(q, i, j), ok));
                const long long cij = c.matrix[i][j];
                bool shift = mat_mul(ops.H[i], ops.E[j]) == mat_mul(ops.E[j], plus_scalar(ops.H[i], cij)) &&
                             mat_mul(ops.H[i], ops.F[j]) == mat_mul(ops.F[j], plus_scalar(ops.H[i], -cij));
                rep.checks.push_back(make_check("H shift " + vertex_pair(q, i, j), shift));
                if (i != j) {
                    auto e = ops.E[j], f = ops.F[j];
                    for (long long k = 0; k < 1 - cij; ++k) {
                        e = bracket(ops.E[i], e);
                        f = bracket(ops.F[i], f);
                    }
                    rep.checks.push_back(make_check("Serre " + vertex_pair(q, i, j), mat_is_zero(e) && mat_is_zero(f)));
                }
            }
        bool census = true;
        std::string detail;
        for (const auto& v : all_below(model.rep.dims())) {
            auto k = real.find_weight(v);
            std::size_t n = k ? real.weights[*k].points.size() : 0;
            auto m = mult(v.to_signed());
            if (mpz_class(static_cast<unsigned long>(n)) != m) {
                census = false;
                detail += v.to_string() + ":" + std::to_string(n) + "!=" + m.get_str() + " ";
            }
        }
        rep.checks.push_back(make_check("weight census", census, detail));
        rep.checks.push_back(make_check("total dimension", mpz_class(static_cast<unsigned long>(rep.total_dim)) ==
                                                               mult.dimension(),
                                        std::to_string(rep.total_dim)));
    } else {
        auto zero = zero_subrep(model.rep);
        for (std::size_t i = 0; i < nv; ++i) {
            auto chi = fiber_euler(model.rep, zero, i, Direction::Up, primes, cap);
            rep.checks.push_back(make_check("E F vacuum " + q.vertices()[i], chi == static_cast<long>(w[i]),
                                            "chi=" + chi.get_str()));
        }
        bool census = true;
        std::string detail;
        std::size_t total = 0;
        for (const auto& v : all_below(model.rep.dims())) {
            auto m = mult(v.to_signed());
            auto bound = expected_dimension(c, w, v);
            auto ps = extend_primes(primes, bound + 2);
            auto cp = count_polynomial(model.rep, v, bound, ps, cap);
            if (cp.leading != m || (m != 0 && cp.coeffs.size() != bound + 1)) {
                census = false;
                detail += v.to_string() + ":" + cp.leading.get_str() + "!=" + m.get_str() + " ";
            }
            total += cp.leading.get_ui();
        }
        rep.total_dim = total;
        rep.checks.push_back(make_check("leading coefficient census", census, detail));
    }
    return rep;
}

Check restricted_compat(const Quiver& q, const DimVector& w, const WeylWord& word,
                        const std::vector<std::uint32_t>& primes, std::uint64_t cap) {
    auto c = cartan_matrix(q);
    PreprojectiveAlgebra alg(q);
    auto model = injective_module(alg, w);
    auto chain = demazure_module(model, c, word);
    const auto& D = chain.stages.back();
    auto R = restrict_to(model.rep, D);
    auto amb = finite_points(model.rep, w, primes, cap);
    auto res = finite_points(R.rep, w, primes, cap);
    if (!amb.all_finite() || !res.all_finite())
        throw validation_error("NotFiniteRegime", "restricted comparison needs finite grassmannians");
    auto ops_a = operator_matrices(amb, c);
    auto ops_r = operator_matrices(res, c);

    // restricted points, pushed into the ambient module
    std::vector<std::size_t> image;
    for (const auto& [k, j] : res.index) {
        auto U = map_subrep(R.inclusion, res.weights[k].points[j]);
        std::optional<std::size_t> hit;
        for (std::size_t b = 0; b < amb.index.size(); ++b) {
            const auto& [kb, jb] = amb.index[b];
            if (amb.weights[kb].points[jb] == U) hit = b;
        }
        if (!hit) return make_check("restricted compatibility", false, "restricted point missing from ambient");
        image.push_back(*hit);
    }
    std::size_t inside = 0;
    for (const auto& [kb, jb] : amb.index) inside += D.contains(amb.weights[kb].points[jb]) ? 1 : 0;
    if (inside != image.size())
        return make_check("restricted compatibility", false, "point sets inside the Demazure module differ");
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
        for (std::size_t a = 0; a < image.size(); ++a)
            for (std::size_t b = 0; b < image.size(); ++b)
                if (ops_r.E[i][a][b] != ops_a.E[i][image[a]][image[b]] ||
                    ops_r.F[i][a][b] != ops_a.F[i][image[a]][image[b]] ||
                    ops_r.H[i][a][b] != ops_a.H[i][image[a]][image[b]])
                    return make_check("restricted compatibility", false, "operator entries differ");
    return make_check("restricted compatibility", true, std::to_string(image.size()) + " points");
}

ChevalleyReport chevalley_compare(const Quiver& q, const DimVector& w, const std::vector<std::uint32_t>& primes,
                                  std::uint64_t cap) {
    auto c = cartan_matrix(q);
    auto th = theta(c);
    ChevalleyReport rep;
    rep.w = w;
    rep.theta_w = DimVector(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) rep.theta_w[th[i]] = w[i];
    PreprojectiveAlgebra alg(q);
    auto m1 = injective_module(alg, w);
    auto m2 = injective_module(alg, rep.theta_w);
    auto r1 = finite_points(m1.rep, w, primes, cap);
    auto r2 = finite_points(m2.rep, rep.theta_w, primes, cap);
    if (!r1.all_finite() || !r2.all_finite())
        throw validation_error("NotFiniteRegime", "Chevalley comparison needs finite grassmannians");
    for (const auto* r : {&r1, &r2})
        for (const auto& wp : r->weights)
            if (wp.points.size() != 1)
                throw validation_error("AmbiguousBijection", "weight " + wp.v.to_string() + " carries several points");
    const DimVector top = m1.rep.dims();
    rep.checks.push_back(make_check("same top dimension", top == m2.rep.dims()));
    if (top != m2.rep.dims()) return rep;
    for (const auto& [k, j] : r1.index) {
        auto hit = r2.find_weight(top - r1.weights[k].v);
        if (!hit) {
            rep.checks.push_back(make_check("complement bijection", false, "no point at " + (top - r1.weights[k].v).to_string()));
            return rep;
        }
        std::size_t b = 0;
        while (r2.index[b].first != *hit) ++b;
        rep.bijection.push_back(b);
    }
    rep.checks.push_back(make_check("complement bijection", rep.bijection.size() == r2.num_points()));
    auto o1 = operator_matrices(r1, c);
    auto o2 = operator_matrices(r2, c);
    const auto& P = rep.bijection;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
        bool ef = true, fe = true, h = true;
        for (std::size_t a = 0; a < P.size(); ++a)
            for (std::size_t b = 0; b < P.size(); ++b) {
                ef &= o1.E[i][a][b] == o2.F[i][P[a]][P[b]];
                fe &= o1.F[i][a][b] == o2.E[i][P[a]][P[b]];
                h &= o1.H[i][a][b] == -o2.H[i][P[a]][P[b]];
            }
        rep.checks.push_back(make_check("E to F " + q.vertices()[i], ef && fe));
        rep.checks.push_back(make_check("H negated " + q.vertices()[i], h));
    }
    return rep;
}

}  // namespace ppa
