#include "ufact/batch.hpp"

#include <cstdint>

#include "ufact/random.hpp"

namespace ufact::batch {

std::vector<ParamSet> random_param_sets(const Scheme& scheme, std::size_t count,
                                        std::uint64_t seed) {
    std::vector<ParamSet> sets(count);
    const std::int64_t total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        sets[static_cast<std::size_t>(i)] = random_param_set(scheme, rng);
    }
    return sets;
}

std::vector<ComplexMatrix> compose_many(const std::vector<ParamSet>& sets) {
    std::vector<ComplexMatrix> out(sets.size());
    const std::int64_t total = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i)
        out[static_cast<std::size_t>(i)] = compose(sets[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<ComplexMatrix> compose_many_serial(const std::vector<ParamSet>& sets) {
    std::vector<ComplexMatrix> out(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) out[i] = compose(sets[i]);
    return out;
}

std::vector<double> unitarity_residuals(const std::vector<ComplexMatrix>& mats) {
    std::vector<double> out(mats.size());
    const std::int64_t total = static_cast<std::int64_t>(mats.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i)
        out[static_cast<std::size_t>(i)] = unitarity_residual(mats[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<double> unitarity_residuals_serial(const std::vector<ComplexMatrix>& mats) {
    std::vector<double> out(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) out[i] = unitarity_residual(mats[i]);
    return out;
}

}  // namespace ufact::batch
