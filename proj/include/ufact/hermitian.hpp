#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ufact/factorization.hpp"
#include "ufact/linalg.hpp"

namespace ufact {

/// Eigenvalue profile families. Each trigonometric block is a closing
/// cascade: m values over m-1 angles whose sum telescopes exactly to the
/// block total.
enum class SpectrumKind { PositiveTrace, Traceless, IndefiniteTrace, DegenerateK, TwoLevel };

std::string to_string(SpectrumKind kind);
SpectrumKind spectrum_kind_from_string(const std::string& s);

struct SpectrumSpec {
    std::size_t n = 0;
    SpectrumKind kind = SpectrumKind::PositiveTrace;
    double h = 1.0;           // trace (or trace scale)
    std::size_t p = 0;        // positive-eigenvalue count (Traceless/Indefinite)
    std::size_t k = 0;        // multiplicity (DegenerateK/TwoLevel)
    std::vector<double> angles;
    double theta_hyp = 0.0;   // hyperbolic parameter (IndefiniteTrace)
    bool normalize = false;   // rescale realized eigenvalues to unit trace
};

void validate_spectrum(const SpectrumSpec& spec);

/// Required angle count for a kind: PositiveTrace n-1, Traceless n-2,
/// IndefiniteTrace n-2, DegenerateK n-k (one cascade over the n-k+1 distinct
/// values), TwoLevel 1.
std::size_t spectrum_angle_count(SpectrumKind kind, std::size_t n, std::size_t k);

/// lambda_1 = h cos^2 t1, lambda_2 = h sin^2 t1 cos^2 t2, ...; all
/// nonnegative, summing exactly to h. n = angles.size() + 1.
std::vector<double> eigenvalues_positive(double h, const std::vector<double>& angles);

/// First p values cascade to +h over angles[0..p-2], remaining n-p values
/// cascade to -h over the rest; trace 0. n = angles.size() + 2.
std::vector<double> eigenvalues_traceless(double h, std::size_t p,
                                          const std::vector<double>& angles);

/// For h > 0 the positive block sums to |h| cosh^2(theta_hyp) and the
/// negative block to -|h| sinh^2(theta_hyp); for h < 0 the cosh/sinh roles
/// interchange. Trace is h either way. n = angles.size() + 2.
std::vector<double> eigenvalues_indefinite(double h, std::size_t p, double theta_hyp,
                                           const std::vector<double>& angles);

/// Full realized eigenvalue list of a spec, multiplicities expanded and the
/// normalize flag applied (rescale by 1/trace).
std::vector<double> realize_spectrum(const SpectrumSpec& spec);

struct HermitianOperator {
    ComplexMatrix matrix;
    SpectrumSpec spectrum;
    ParamSet frame_params;
};

/// Assemble sum lambda_i u_i u_i* from a spectrum and a matching frame:
/// simple kinds take a Flag frame, DegenerateK a StiefelReduced frame with
/// scheme k equal to the multiplicity, TwoLevel a Grassmann frame over
/// min(k, n-k).
HermitianOperator assemble(const SpectrumSpec& spec, const ParamSet& frame);

/// ||rho^2 - 2 p rho + (p^2 - q^2) I||_F. Requires p^2 - q^2 >= 0.
double quadratic_residual(const ComplexMatrix& rho, double p_coef, double q_coef);

}  // namespace ufact
