#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ufact/linalg.hpp"

namespace ufact {

/// Phase layout of a generating vector.
///
/// Full stores one phase per entry. The reduced conventions store one phase
/// per entry except the first, whose phase factor is fixed structurally:
/// +1 for ReducedFirst, -1 for ReducedPi. An empty phase list is accepted as
/// shorthand for all-zero phases (used by the real-orthogonal scheme, where
/// phases are not free parameters).
enum class Convention { Full, ReducedFirst, ReducedPi };

/// A complex unit vector in generalized spherical coordinates: dim-1 angles
/// in [0, pi/2] plus phases in [0, 2*pi) per Convention.
struct SphericalVector {
    std::size_t dim = 0;
    std::vector<double> angles;
    std::vector<double> phases;
    Convention convention = Convention::Full;
};

void validate_spherical(const SphericalVector& v);

enum class SchemeTag {
    FullUnitary,
    Flag,
    StiefelReduced,
    StiefelFull,
    Grassmann,
    SpecialOrthogonal,
};

std::string to_string(SchemeTag tag);
SchemeTag scheme_tag_from_string(const std::string& s);

/// Factor scheme: which ordered product of vector-generated factors to build.
/// k is the block count for the Stiefel/Grassmann schemes and is ignored by
/// FullUnitary, Flag and SpecialOrthogonal.
struct Scheme {
    SchemeTag tag = SchemeTag::FullUnitary;
    std::size_t n = 0;
    std::size_t k = 0;
};

void validate_scheme(const Scheme& scheme);
bool scheme_uses_k(SchemeTag tag);

enum class EmbedStyle { BottomRight, Centered };

/// One factor position in a scheme's ordered product.
struct FactorSlot {
    std::size_t dim = 0;
    Convention convention = Convention::Full;
    EmbedStyle style = EmbedStyle::BottomRight;
    std::size_t offset = 0;
    bool zero_phases = false;
};

/// Ordered factor layout of a scheme (dimensions, conventions, embeddings).
std::vector<FactorSlot> factor_layout(const Scheme& scheme);

/// Ordered per-factor generating vectors for a scheme.
struct ParamSet {
    Scheme scheme;
    std::vector<SphericalVector> vectors;
};

void validate_param_set(const ParamSet& p);

/// ParamSet with all angles and phases zero.
ParamSet zero_param_set(const Scheme& scheme);

/// Number of free real parameters of a scheme.
std::size_t param_count(const Scheme& scheme);

/// Number of reals actually stored in a ParamSet (angles plus phases).
std::size_t stored_param_count(const ParamSet& p);

/// The m x 1 unit vector realized by v.
ComplexMatrix realize_vector(const SphericalVector& v);

/// The m x m unitary factor generated by v: column 1 is realize_vector(v),
/// column k+1 is the closed form of the derivative of the generating vector
/// with respect to angle k, restricted to angles 1..k-1 = pi/2.
ComplexMatrix build_B(const SphericalVector& v);

/// Embed an m x m block into an n x n identity. BottomRight places it at
/// rows/cols [offset, n); Centered at [offset, n-offset).
ComplexMatrix embed_block(const ComplexMatrix& b, std::size_t n, EmbedStyle style,
                          std::size_t offset);

/// Ordered left-to-right product of the embedded factors of p.
ComplexMatrix compose(const ParamSet& p);

/// Recover canonical parameters from a unitary matrix by peeling factors:
/// read the current leading column of each factor slot, recover angles via
/// atan2 of tail-norm over head-magnitude and phases via complex argument
/// (entries of magnitude <= 1e-12 yield phase 0), then left-multiply by the
/// factor adjoint and continue. tol < 0 selects the default unitarity
/// tolerance 1e-10 * n.
ParamSet factorize(const ComplexMatrix& m, SchemeTag tag, std::size_t k = 0,
                   double tol = -1.0);

}  // namespace ufact
