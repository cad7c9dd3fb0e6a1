#include "ppa/grassmann.hpp"

#include <future>
#include <sstream>

namespace ppa {

mpz_class CountPoly::operator()(long q) const {
    mpz_class r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * q + *it;
    return r;
}

std::string CountPoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const auto& c = coeffs[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        if (mono.empty()) s += mag.get_str();
        else s += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return s;
}

std::size_t expected_dimension(const CartanData& c, const DimVector& w, const DimVector& v) {
    long long vw = 0, vcv = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        vw += static_cast<long long>(v[i] * w[i]);
        for (std::size_t j = 0; j < v.size(); ++j)
            vcv += static_cast<long long>(v[i]) * c.matrix[i][j] * static_cast<long long>(v[j]);
    }
    long long d = vw - vcv / 2;
    return d < 0 ? 0 : static_cast<std::size_t>(d);
}

CountPoly interpolate_counts(const std::vector<std::uint32_t>& primes, const std::vector<std::uint64_t>& counts,
                             std::size_t degree_bound) {
    if (primes.size() != counts.size()) throw internal_error("ShapeMismatch", "one count per prime expected");
    if (primes.size() < degree_bound + 2)
        throw validation_error("NotEnoughPrimes", "degree bound " + std::to_string(degree_bound) + " needs " +
                                                      std::to_string(degree_bound + 2) + " primes (one for certification)");
    const std::size_t n = degree_bound + 1;
    // Newton divided differences on the first n points
    std::vector<mpq_class> dd;
    for (std::size_t k = 0; k < n; ++k) dd.emplace_back(mpz_class(std::to_string(counts[k])));
    for (std::size_t lvl = 1; lvl < n; ++lvl)
        for (std::size_t k = n - 1; k >= lvl; --k) {
            dd[k] = (dd[k] - dd[k - 1]) / mpq_class(static_cast<long>(primes[k]) - static_cast<long>(primes[k - lvl]));
            if (k == lvl) break;
        }
    // expand sum dd[k] * prod_{j<k} (q - x_j) into monomials
    std::vector<mpq_class> poly(n, 0), basis{1};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t e = 0; e < basis.size(); ++e) poly[e] += dd[k] * basis[e];
        std::vector<mpq_class> next(basis.size() + 1, 0);
        for (std::size_t e = 0; e < basis.size(); ++e) {
            next[e + 1] += basis[e];
            next[e] -= basis[e] * static_cast<long>(primes[k]);
        }
        basis = std::move(next);
    }
    auto raw = [&] {
        std::ostringstream os;
        for (std::size_t k = 0; k < primes.size(); ++k) os << (k ? ", " : "") << "p=" << primes[k] << ":" << counts[k];
        return os.str();
    };
    CountPoly cp;
    cp.degree_bound = degree_bound;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1)
            throw internal_error("InterpolationInconsistent",
                                 "count not polynomial at tested degree (non-integral coefficient); counts " + raw());
        cp.coeffs.push_back(c.get_num());
    }
    while (!cp.coeffs.empty() && cp.coeffs.back() == 0) cp.coeffs.pop_back();
    cp.primes_used.assign(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(n));
    cp.consistency_primes.assign(primes.begin() + static_cast<std::ptrdiff_t>(n), primes.end());
    cp.counts = counts;
    for (std::size_t k = n; k < primes.size(); ++k)
        if (cp(static_cast<long>(primes[k])) != mpz_class(std::to_string(counts[k])))
            throw internal_error("InterpolationInconsistent",
                                 "count not polynomial at tested degree (fails at p=" + std::to_string(primes[k]) +
                                     "); counts " + raw());
    cp.chi = cp(1);
    cp.leading = cp.coeffs.empty() ? mpz_class(0) : cp.coeffs.back();
    return cp;
}

CountPoly count_polynomial(const Rep<Rationals>& V, const DimVector& v, std::size_t degree_bound,
                           const std::vector<std::uint32_t>& primes, std::uint64_t cap) {
    // one task per prime; results are collected in prime order
    std::vector<std::future<std::uint64_t>> tasks;
    for (auto p : primes)
        tasks.push_back(std::async(std::launch::async, [&V, &v, cap, p] {
            return count_submodules(reduce_rep(V, PrimeField(p)), v, cap);
        }));
    std::vector<std::uint64_t> counts;
    for (auto& t : tasks) counts.push_back(t.get());
    return interpolate_counts(primes, counts, degree_bound);
}

}  // namespace ppa
