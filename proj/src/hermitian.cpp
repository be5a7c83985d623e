#include "ufact/hermitian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ufact/manifolds.hpp"

namespace ufact {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Closing cascade: count values over count-1 angles, summing exactly to
// total (the last value takes the whole remaining sin^2 product).
std::vector<double> cascade(double total, const double* angles, std::size_t count) {
    std::vector<double> vals(count);
    double sin2_prefix = 1.0;
    for (std::size_t j = 0; j < count; ++j) {
        if (j + 1 < count) {
            const double c = std::cos(angles[j]);
            const double s = std::sin(angles[j]);
            vals[j] = total * sin2_prefix * c * c;
            sin2_prefix *= s * s;
        } else {
            vals[j] = total * sin2_prefix;
        }
    }
    return vals;
}

void check_angles(const std::vector<double>& angles) {
    for (double a : angles)
        require(std::isfinite(a) && a >= 0.0 && a <= std::numbers::pi / 2.0 + 1e-15,
                "spectrum angle outside [0, pi/2]");
}

}  // namespace

std::string to_string(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::PositiveTrace: return "positive";
        case SpectrumKind::Traceless: return "traceless";
        case SpectrumKind::IndefiniteTrace: return "indefinite";
        case SpectrumKind::DegenerateK: return "degenerate";
        case SpectrumKind::TwoLevel: return "two-level";
    }
    throw std::logic_error("to_string: bad SpectrumKind");
}

SpectrumKind spectrum_kind_from_string(const std::string& s) {
    if (s == "positive") return SpectrumKind::PositiveTrace;
    if (s == "traceless") return SpectrumKind::Traceless;
    if (s == "indefinite") return SpectrumKind::IndefiniteTrace;
    if (s == "degenerate") return SpectrumKind::DegenerateK;
    if (s == "two-level") return SpectrumKind::TwoLevel;
    throw std::invalid_argument("unknown spectrum kind: " + s);
}

std::size_t spectrum_angle_count(SpectrumKind kind, std::size_t n, std::size_t k) {
    switch (kind) {
        case SpectrumKind::PositiveTrace: return n - 1;
        case SpectrumKind::Traceless: return n - 2;
        case SpectrumKind::IndefiniteTrace: return n - 2;
        case SpectrumKind::DegenerateK: return n - k;
        case SpectrumKind::TwoLevel: return 1;
    }
    throw std::logic_error("spectrum_angle_count: bad SpectrumKind");
}

void validate_spectrum(const SpectrumSpec& spec) {
    require(spec.n >= 2, "SpectrumSpec: n must be at least 2");
    if (spec.kind == SpectrumKind::DegenerateK || spec.kind == SpectrumKind::TwoLevel)
        require(spec.k >= 1 && spec.k <= spec.n - 1, "SpectrumSpec: need 1 <= k <= n-1");
    if (spec.kind == SpectrumKind::Traceless || spec.kind == SpectrumKind::IndefiniteTrace)
        require(spec.p >= 1 && spec.p <= spec.n - 1, "SpectrumSpec: need 1 <= p <= n-1");
    require(spec.angles.size() == spectrum_angle_count(spec.kind, spec.n, spec.k),
            "SpectrumSpec: angle count does not match kind (expected " +
                std::to_string(spectrum_angle_count(spec.kind, spec.n, spec.k)) + ", got " +
                std::to_string(spec.angles.size()) + ")");
    check_angles(spec.angles);
    require(std::isfinite(spec.theta_hyp) && spec.theta_hyp >= 0.0,
            "SpectrumSpec: theta_hyp must be nonnegative");
    switch (spec.kind) {
        case SpectrumKind::PositiveTrace:
        case SpectrumKind::Traceless:
        case SpectrumKind::DegenerateK:
            require(spec.h > 0.0, "SpectrumSpec: h must be positive for this kind");
            break;
        case SpectrumKind::IndefiniteTrace:
        case SpectrumKind::TwoLevel:
            require(spec.h != 0.0, "SpectrumSpec: h must be nonzero");
            break;
    }
}

std::vector<double> eigenvalues_positive(double h, const std::vector<double>& angles) {
    require(h > 0.0, "eigenvalues_positive: h must be positive");
    check_angles(angles);
    return cascade(h, angles.data(), angles.size() + 1);
}

std::vector<double> eigenvalues_traceless(double h, std::size_t p,
                                          const std::vector<double>& angles) {
    require(h > 0.0, "eigenvalues_traceless: h must be positive");
    const std::size_t n = angles.size() + 2;
    require(p >= 1 && p <= n - 1, "eigenvalues_traceless: need 1 <= p <= n-1");
    check_angles(angles);
    std::vector<double> vals = cascade(h, angles.data(), p);
    const std::vector<double> neg = cascade(-h, angles.data() + (p - 1), n - p);
    vals.insert(vals.end(), neg.begin(), neg.end());
    return vals;
}

std::vector<double> eigenvalues_indefinite(double h, std::size_t p, double theta_hyp,
                                           const std::vector<double>& angles) {
    require(h != 0.0, "eigenvalues_indefinite: h must be nonzero");
    require(std::isfinite(theta_hyp) && theta_hyp >= 0.0,
            "eigenvalues_indefinite: theta_hyp must be nonnegative");
    const std::size_t n = angles.size() + 2;
    require(p >= 1 && p <= n - 1, "eigenvalues_indefinite: need 1 <= p <= n-1");
    check_angles(angles);
    const double ch = std::cosh(theta_hyp);
    const double sh = std::sinh(theta_hyp);
    const double pos_total = std::abs(h) * (h > 0.0 ? ch * ch : sh * sh);
    const double neg_total = -std::abs(h) * (h > 0.0 ? sh * sh : ch * ch);
    std::vector<double> vals = cascade(pos_total, angles.data(), p);
    const std::vector<double> neg = cascade(neg_total, angles.data() + (p - 1), n - p);
    vals.insert(vals.end(), neg.begin(), neg.end());
    return vals;
}

std::vector<double> realize_spectrum(const SpectrumSpec& spec) {
    validate_spectrum(spec);
    std::vector<double> vals;
    switch (spec.kind) {
        case SpectrumKind::PositiveTrace:
            vals = eigenvalues_positive(spec.h, spec.angles);
            break;
        case SpectrumKind::Traceless:
            vals = eigenvalues_traceless(spec.h, spec.p, spec.angles);
            break;
        case SpectrumKind::IndefiniteTrace:
            vals = eigenvalues_indefinite(spec.h, spec.p, spec.theta_hyp, spec.angles);
            break;
        case SpectrumKind::DegenerateK: {
            // one cascade over the n-k+1 distinct values; the first is the
            // k-fold eigenvalue
            const std::vector<double> base =
                cascade(spec.h, spec.angles.data(), spec.n - spec.k + 1);
            vals.assign(spec.k, base[0]);
            vals.insert(vals.end(), base.begin() + 1, base.end());
            break;
        }
        case SpectrumKind::TwoLevel: {
            const double c = std::cos(spec.angles[0]);
            const double s = std::sin(spec.angles[0]);
            vals.assign(spec.k, spec.h * c * c);
            vals.insert(vals.end(), spec.n - spec.k, spec.h * s * s);
            break;
        }
    }
    if (spec.normalize) {
        double tr = 0.0;
        for (double v : vals) tr += v;
        require(std::abs(tr) > 1e-300, "realize_spectrum: cannot normalize zero trace");
        for (double& v : vals) v /= tr;
    }
    return vals;
}

HermitianOperator assemble(const SpectrumSpec& spec, const ParamSet& frame) {
    const std::vector<double> vals = realize_spectrum(spec);
    const std::size_t n = spec.n;
    require(frame.scheme.n == n, "assemble: frame dimension mismatch");

    ComplexMatrix h(n, n);
    switch (spec.kind) {
        case SpectrumKind::PositiveTrace:
        case SpectrumKind::Traceless:
        case SpectrumKind::IndefiniteTrace: {
            require(frame.scheme.tag == SchemeTag::Flag,
                    "assemble: simple spectra need a Flag frame");
            const ComplexMatrix u = compose(frame);
            for (std::size_t i = 0; i < n; ++i) {
                const ComplexMatrix ui = column(u, i);
                h = h + Complex(vals[i], 0.0) * outer(ui, ui);
            }
            break;
        }
        case SpectrumKind::DegenerateK: {
            require(frame.scheme.tag == SchemeTag::StiefelReduced && frame.scheme.k == spec.k,
                    "assemble: DegenerateK needs a StiefelReduced frame with k = multiplicity");
            const ComplexMatrix u = compose(frame);
            for (std::size_t i = 0; i < n; ++i) {
                const ComplexMatrix ui = column(u, i);
                h = h + Complex(vals[i], 0.0) * outer(ui, ui);
            }
            break;
        }
        case SpectrumKind::TwoLevel: {
            const GrassmannPoint g = make_grassmann_point(n, spec.k, frame);
            const ComplexMatrix p = grassmann_projection(g);
            h = Complex(vals[0], 0.0) * p +
                Complex(vals[spec.k], 0.0) * (ComplexMatrix::identity(n) - p);
            break;
        }
    }
    // hermitize rounding noise
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(i, j) = m;
            h(j, i) = std::conj(m);
        }
    return HermitianOperator{std::move(h), spec, frame};
}

double quadratic_residual(const ComplexMatrix& rho, double p_coef, double q_coef) {
    require(rho.is_square(), "quadratic_residual: matrix must be square");
    const double disc = p_coef * p_coef - q_coef * q_coef;
    require(disc >= 0.0, "quadratic_residual: p^2 - q^2 must be nonnegative");
    const double herm = hermiticity_residual(rho);
    require(herm <= 1e-8 * static_cast<double>(rho.rows()),
            "quadratic_residual: input not Hermitian");
    const ComplexMatrix lhs = matmul(rho, rho) - 2.0 * p_coef * rho +
                              Complex(disc, 0.0) * ComplexMatrix::identity(rho.rows());
    return frobenius_norm(lhs);
}

}  // namespace ufact
