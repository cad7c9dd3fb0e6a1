#include "ppa/demazure.hpp"

namespace ppa {

WeylWord stabilization_sigma(const InjectiveModel<Rationals>& model, const CartanData& c, const DimVector& v,
                             const std::vector<std::uint32_t>& primes, const WeylWord& word, std::uint64_t cap) {
    if (primes.empty()) throw validation_error("NotEnoughPrimes", "at least one prime is needed");
    auto chain = demazure_module(model, c, word);
    std::vector<PrimeField> fields;
    std::vector<Rep<PrimeField>> reps;
    std::vector<std::uint64_t> full;
    for (auto p : primes) {
        fields.emplace_back(p);
        reps.push_back(reduce_rep(model.rep, fields.back()));
        full.push_back(count_submodules(reps.back(), v, cap));
    }
    for (std::size_t k = 0; k < chain.stages.size(); ++k) {
        bool same = true;
        for (std::size_t j = 0; j < primes.size() && same; ++j) {
            auto stage = reduce_subrep(chain.stages[k], fields[j]);
            same = count_submodules(reps[j], v, cap, nullptr, &stage) == full[j];
        }
        if (same) return WeylWord(word.end() - static_cast<std::ptrdiff_t>(k), word.end());
    }
    throw capacity_error("CapExceeded", "counts did not stabilize along the given word");
}

}  // namespace ppa
