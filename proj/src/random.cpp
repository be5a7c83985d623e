#include "ufact/random.hpp"

#include <algorithm>
#include <numbers>

namespace ufact {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SphericalVector random_spherical_vector(std::size_t dim, Convention convention, Rng& rng,
                                        bool zero_phases) {
    SphericalVector v;
    v.dim = dim;
    v.convention = convention;
    v.angles.resize(dim - 1);
    for (double& a : v.angles) a = rng.uniform(0.0, std::numbers::pi / 2.0);
    if (!zero_phases) {
        const std::size_t count = convention == Convention::Full ? dim : dim - 1;
        v.phases.resize(count);
        for (double& p : v.phases) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return v;
}

ParamSet random_param_set(const Scheme& scheme, Rng& rng) {
    ParamSet p;
    p.scheme = scheme;
    for (const FactorSlot& slot : factor_layout(scheme))
        p.vectors.push_back(
            random_spherical_vector(slot.dim, slot.convention, rng, slot.zero_phases));
    return p;
}

GrassmannPoint random_grassmann_point(std::size_t n, std::size_t k, Rng& rng) {
    const std::size_t kc = std::min(k, n - k);
    const Scheme scheme{SchemeTag::Grassmann, n, kc};
    return make_grassmann_point(n, k, random_param_set(scheme, rng));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    return compose(random_param_set(Scheme{SchemeTag::FullUnitary, n, 0}, rng));
}

}  // namespace ufact
