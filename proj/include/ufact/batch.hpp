#pragma once

#include <cstdint>
#include <vector>

#include "ufact/factorization.hpp"
#include "ufact/linalg.hpp"

namespace ufact::batch {

/// count independent ParamSets; item i is drawn from derive_seed(seed, i),
/// so results are identical whether items run serially or in parallel.
std::vector<ParamSet> random_param_sets(const Scheme& scheme, std::size_t count,
                                        std::uint64_t seed);

/// Compose every ParamSet, OpenMP over items.
std::vector<ComplexMatrix> compose_many(const std::vector<ParamSet>& sets);
/// Serial reference for compose_many; outputs must match bit for bit.
std::vector<ComplexMatrix> compose_many_serial(const std::vector<ParamSet>& sets);

/// ||U*U - I||_F per matrix, OpenMP over items.
std::vector<double> unitarity_residuals(const std::vector<ComplexMatrix>& mats);
/// Serial reference for unitarity_residuals.
std::vector<double> unitarity_residuals_serial(const std::vector<ComplexMatrix>& mats);

}  // namespace ufact::batch
