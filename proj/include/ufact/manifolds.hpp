#pragma once

#include <cstddef>

#include "ufact/factorization.hpp"
#include "ufact/linalg.hpp"

namespace ufact {

enum class StiefelVariant { Reduced, Full };

/// Orthonormal k-frame in C^n, the leading columns of a composed Stiefel
/// scheme. The Reduced variant has a real nonnegative first row.
struct StiefelFrame {
    std::size_t n = 0;
    std::size_t k = 0;
    ComplexMatrix matrix;  // n x k
    StiefelVariant variant = StiefelVariant::Reduced;
};

StiefelFrame stiefel_frame(const ParamSet& p);

/// Rank-k projection C C* onto the frame's column span.
ComplexMatrix stiefel_projection(const StiefelFrame& f);

/// A k-dimensional subspace of C^n. For k > n/2 the point is stored through
/// the complementary (n-k)-construction and flagged, since the centered-block
/// product is only defined up to floor(n/2) blocks; the projection is then
/// I - P_{n-k}. Parameter count is 2k(n-k) either way.
struct GrassmannPoint {
    std::size_t n = 0;
    std::size_t k = 0;
    ParamSet params;  // Grassmann scheme over min(k, n-k)
    bool complemented = false;
};

GrassmannPoint make_grassmann_point(std::size_t n, std::size_t k, ParamSet params);

/// The composed unitary of the direct construction. Errors for complemented
/// points (k > n/2), which have no direct matrix here.
ComplexMatrix grassmann_matrix(const GrassmannPoint& g);

/// Rank-k projection: sum of outer products of the leading k columns on the
/// direct path, I minus the (n-k)-projection on the complement path.
ComplexMatrix grassmann_projection(const GrassmannPoint& g);

}  // namespace ufact
