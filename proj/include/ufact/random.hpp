#pragma once

#include <cstdint>
#include <random>

#include "ufact/factorization.hpp"
#include "ufact/manifolds.hpp"

namespace ufact {

/// Seedable generator with a platform-stable stream ("mt19937-64/53"):
/// raw std::mt19937_64 output (fully specified by the standard) mapped to
/// doubles through the top 53 bits. Parameter draws are uniform on the
/// coordinate ranges — this is NOT the invariant (Haar) measure of any
/// scheme, it is a coordinate-uniform convenience measure.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// uniform on [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 mix of (base, index); gives independent per-item streams so
/// batch draws are identical no matter how items are scheduled.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Angles uniform on [0, pi/2), phases uniform on [0, 2*pi).
SphericalVector random_spherical_vector(std::size_t dim, Convention convention, Rng& rng,
                                        bool zero_phases = false);

ParamSet random_param_set(const Scheme& scheme, Rng& rng);

GrassmannPoint random_grassmann_point(std::size_t n, std::size_t k, Rng& rng);

/// compose of a random FullUnitary ParamSet.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace ufact
