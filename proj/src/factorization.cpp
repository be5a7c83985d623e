#include "ufact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ufact {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Magnitudes below this are treated as exact zeros when reading phases back.
constexpr double kPhaseFloor = 1e-12;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::size_t expected_phase_count(std::size_t dim, Convention c) {
    return c == Convention::Full ? dim : dim - 1;
}

// Row phase factor of the generating vector / factor matrix. The reduced
// conventions pin the first row to +1 / -1 and shift stored phases by one.
Complex row_phase(const SphericalVector& v, std::size_t row) {
    auto stored = [&](std::size_t idx) -> double {
        return v.phases.empty() ? 0.0 : v.phases[idx];
    };
    switch (v.convention) {
        case Convention::Full:
            return std::polar(1.0, stored(row));
        case Convention::ReducedFirst:
            if (row == 0) return Complex(1.0, 0.0);
            return std::polar(1.0, stored(row - 1));
        case Convention::ReducedPi:
            if (row == 0) return Complex(-1.0, 0.0);
            return std::polar(1.0, stored(row - 1));
    }
    throw std::logic_error("row_phase: bad convention");
}

double wrap_phase(double a) {
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

}  // namespace

void validate_spherical(const SphericalVector& v) {
    require(v.dim >= 1, "SphericalVector: dim must be positive");
    require(v.angles.size() == v.dim - 1, "SphericalVector: need dim-1 angles, got " +
                                              std::to_string(v.angles.size()));
    for (double a : v.angles) {
        require(std::isfinite(a) && a >= 0.0 && a <= kPi / 2.0 + 1e-15,
                "SphericalVector: angle " + std::to_string(a) + " outside [0, pi/2]");
    }
    if (!v.phases.empty()) {
        require(v.phases.size() == expected_phase_count(v.dim, v.convention),
                "SphericalVector: phase count does not match convention");
        for (double p : v.phases) {
            require(std::isfinite(p) && p >= 0.0 && p < kTwoPi,
                    "SphericalVector: phase " + std::to_string(p) + " outside [0, 2*pi)");
        }
    }
}

std::string to_string(SchemeTag tag) {
    switch (tag) {
        case SchemeTag::FullUnitary: return "full";
        case SchemeTag::Flag: return "flag";
        case SchemeTag::StiefelReduced: return "stiefel-reduced";
        case SchemeTag::StiefelFull: return "stiefel-full";
        case SchemeTag::Grassmann: return "grassmann";
        case SchemeTag::SpecialOrthogonal: return "orthogonal";
    }
    throw std::logic_error("to_string: bad SchemeTag");
}

SchemeTag scheme_tag_from_string(const std::string& s) {
    if (s == "full") return SchemeTag::FullUnitary;
    if (s == "flag") return SchemeTag::Flag;
    if (s == "stiefel-reduced") return SchemeTag::StiefelReduced;
    if (s == "stiefel-full") return SchemeTag::StiefelFull;
    if (s == "grassmann") return SchemeTag::Grassmann;
    if (s == "orthogonal") return SchemeTag::SpecialOrthogonal;
    throw std::invalid_argument("unknown scheme tag: " + s);
}

bool scheme_uses_k(SchemeTag tag) {
    return tag == SchemeTag::StiefelReduced || tag == SchemeTag::StiefelFull ||
           tag == SchemeTag::Grassmann;
}

void validate_scheme(const Scheme& scheme) {
    require(scheme.n >= 1, "Scheme: n must be positive");
    if (scheme_uses_k(scheme.tag)) {
        require(scheme.k >= 1 && scheme.k <= scheme.n,
                "Scheme: k must satisfy 1 <= k <= n");
        if (scheme.tag == SchemeTag::Grassmann) {
            require(scheme.k <= scheme.n / 2,
                    "Scheme: Grassmann construction needs k <= floor(n/2); "
                    "use the complement point for larger k");
        }
    }
}

std::vector<FactorSlot> factor_layout(const Scheme& scheme) {
    validate_scheme(scheme);
    const std::size_t n = scheme.n;
    std::vector<FactorSlot> slots;
    auto full_layout = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            slots.push_back({n - i, Convention::Full, EmbedStyle::BottomRight, i, false});
    };
    auto flag_layout = [&](std::size_t count, bool zero_phases) {
        for (std::size_t i = 0; i < count; ++i)
            slots.push_back({n - i,
                             i == 0 ? Convention::ReducedFirst : Convention::ReducedPi,
                             EmbedStyle::BottomRight, i, zero_phases});
    };
    switch (scheme.tag) {
        case SchemeTag::FullUnitary:
            full_layout(n);
            break;
        case SchemeTag::Flag:
            flag_layout(n >= 1 ? n - 1 : 0, false);
            break;
        case SchemeTag::StiefelReduced:
            flag_layout(std::min(scheme.k, n - 1), false);
            break;
        case SchemeTag::StiefelFull:
            full_layout(std::min(scheme.k, n));
            break;
        case SchemeTag::Grassmann:
            slots.push_back({n, Convention::ReducedFirst, EmbedStyle::BottomRight, 0, false});
            for (std::size_t j = 1; j < scheme.k; ++j)
                slots.push_back({n - 2 * j, Convention::ReducedPi, EmbedStyle::Centered, j, false});
            break;
        case SchemeTag::SpecialOrthogonal:
            flag_layout(n >= 1 ? n - 1 : 0, true);
            break;
    }
    return slots;
}

void validate_param_set(const ParamSet& p) {
    const std::vector<FactorSlot> layout = factor_layout(p.scheme);
    require(p.vectors.size() == layout.size(),
            "ParamSet: expected " + std::to_string(layout.size()) + " factors, got " +
                std::to_string(p.vectors.size()));
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const SphericalVector& v = p.vectors[i];
        const FactorSlot& slot = layout[i];
        validate_spherical(v);
        require(v.dim == slot.dim, "ParamSet: factor " + std::to_string(i) +
                                       " has dim " + std::to_string(v.dim) + ", expected " +
                                       std::to_string(slot.dim));
        require(v.convention == slot.convention,
                "ParamSet: factor " + std::to_string(i) + " convention mismatch");
        if (slot.zero_phases) {
            require(v.phases.empty(),
                    "ParamSet: factor " + std::to_string(i) + " must not store phases");
        } else {
            require(v.phases.size() == expected_phase_count(v.dim, v.convention),
                    "ParamSet: factor " + std::to_string(i) + " phase count mismatch");
        }
    }
}

ParamSet zero_param_set(const Scheme& scheme) {
    ParamSet p;
    p.scheme = scheme;
    for (const FactorSlot& slot : factor_layout(scheme)) {
        SphericalVector v;
        v.dim = slot.dim;
        v.convention = slot.convention;
        v.angles.assign(slot.dim - 1, 0.0);
        if (!slot.zero_phases)
            v.phases.assign(expected_phase_count(slot.dim, slot.convention), 0.0);
        p.vectors.push_back(std::move(v));
    }
    return p;
}

std::size_t param_count(const Scheme& scheme) {
    validate_scheme(scheme);
    const std::size_t n = scheme.n;
    const std::size_t k = scheme.k;
    switch (scheme.tag) {
        case SchemeTag::FullUnitary: return n * n;
        case SchemeTag::Flag: return n * (n - 1);
        case SchemeTag::StiefelReduced: return k * (2 * n - k - 1);
        case SchemeTag::StiefelFull: return k * (2 * n - k);
        case SchemeTag::Grassmann: return 2 * k * (n - k);
        case SchemeTag::SpecialOrthogonal: return n * (n - 1) / 2;
    }
    throw std::logic_error("param_count: bad SchemeTag");
}

std::size_t stored_param_count(const ParamSet& p) {
    std::size_t count = 0;
    for (const SphericalVector& v : p.vectors) count += v.angles.size() + v.phases.size();
    return count;
}

ComplexMatrix realize_vector(const SphericalVector& v) {
    validate_spherical(v);
    const std::size_t m = v.dim;
    ComplexMatrix out(m, 1);
    double sin_prefix = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double mag = (j + 1 < m) ? sin_prefix * std::cos(v.angles[j]) : sin_prefix;
        out(j, 0) = row_phase(v, j) * mag;
        if (j + 1 < m) sin_prefix *= std::sin(v.angles[j]);
    }
    return out;
}

ComplexMatrix build_B(const SphericalVector& v) {
    validate_spherical(v);
    const std::size_t m = v.dim;
    ComplexMatrix b(m, m);
    const ComplexMatrix v1 = realize_vector(v);
    for (std::size_t i = 0; i < m; ++i) b(i, 0) = v1(i, 0);
    // column c is the derivative with respect to angle c-1, earlier angles
    // restricted to pi/2
    for (std::size_t c = 1; c < m; ++c) {
        const std::size_t a = c - 1;
        b(a, c) = -row_phase(v, a) * std::sin(v.angles[a]);
        double sin_between = 1.0;
        for (std::size_t r = a + 1; r < m; ++r) {
            const double tail = (r + 1 < m) ? std::cos(v.angles[r]) : 1.0;
            b(r, c) = row_phase(v, r) * std::cos(v.angles[a]) * sin_between * tail;
            if (r + 1 < m) sin_between *= std::sin(v.angles[r]);
        }
    }
    return b;
}

ComplexMatrix embed_block(const ComplexMatrix& b, std::size_t n, EmbedStyle style,
                          std::size_t offset) {
    require(b.is_square(), "embed_block: block must be square");
    const std::size_t want =
        style == EmbedStyle::BottomRight ? n - offset : n - 2 * offset;
    require(offset <= n && b.rows() == want,
            "embed_block: block dim " + std::to_string(b.rows()) +
                " does not fit n=" + std::to_string(n) + " at offset " +
                std::to_string(offset));
    ComplexMatrix out = ComplexMatrix::identity(n);
    set_block(out, offset, offset, b);
    return out;
}

ComplexMatrix compose(const ParamSet& p) {
    validate_param_set(p);
    const std::vector<FactorSlot> layout = factor_layout(p.scheme);
    ComplexMatrix result = ComplexMatrix::identity(p.scheme.n);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const ComplexMatrix factor =
            embed_block(build_B(p.vectors[i]), p.scheme.n, layout[i].style, layout[i].offset);
        result = matmul(result, factor);
    }
    return result;
}

namespace {

// Recover a generating vector from the leading column of its factor.
SphericalVector recover_vector(const std::vector<Complex>& col, const FactorSlot& slot) {
    const std::size_t m = slot.dim;
    SphericalVector v;
    v.dim = m;
    v.convention = slot.convention;
    v.angles.resize(m - 1);

    std::vector<double> tail(m, 0.0);  // tail[j] = ||entries j+1..m-1||
    double acc = 0.0;
    for (std::size_t j = m; j-- > 1;) {
        acc += std::norm(col[j]);
        tail[j - 1] = std::sqrt(acc);
    }
    for (std::size_t j = 0; j + 1 < m; ++j)
        v.angles[j] = std::atan2(tail[j], std::abs(col[j]));

    if (!slot.zero_phases) {
        auto phase_of = [](const Complex& z) {
            return std::abs(z) <= kPhaseFloor ? 0.0 : wrap_phase(std::arg(z));
        };
        if (slot.convention == Convention::Full) {
            v.phases.resize(m);
            for (std::size_t j = 0; j < m; ++j) v.phases[j] = phase_of(col[j]);
        } else {
            v.phases.resize(m - 1);
            for (std::size_t j = 1; j < m; ++j) v.phases[j - 1] = phase_of(col[j]);
        }
    }
    return v;
}

}  // namespace

ParamSet factorize(const ComplexMatrix& m, SchemeTag tag, std::size_t k, double tol) {
    require(m.is_square(), "factorize: matrix must be square");
    const std::size_t n = m.rows();
    Scheme scheme{tag, n, scheme_uses_k(tag) ? k : 0};
    validate_scheme(scheme);
    if (tol < 0.0) tol = 1e-10 * static_cast<double>(n);

    const double ur = unitarity_residual(m);
    if (ur > tol)
        throw std::invalid_argument("factorize: input not unitary, residual " +
                                    std::to_string(ur) + " > tol " + std::to_string(tol));

    const double row_tol = 1e-9 * static_cast<double>(n);
    if (tag == SchemeTag::Flag || tag == SchemeTag::SpecialOrthogonal) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m(0, j).imag()) > row_tol || m(0, j).real() < -row_tol)
                throw std::invalid_argument(
                    "factorize: scheme requires a nonnegative real first row, entry " +
                    std::to_string(j) + " violates it");
        }
    }
    if (tag == SchemeTag::SpecialOrthogonal) {
        for (const Complex& z : m.data())
            if (std::abs(z.imag()) > row_tol)
                throw std::invalid_argument("factorize: orthogonal scheme requires a real matrix");
    }

    ParamSet p;
    p.scheme = scheme;
    ComplexMatrix residual = m;
    for (const FactorSlot& slot : factor_layout(scheme)) {
        std::vector<Complex> col(slot.dim);
        for (std::size_t r = 0; r < slot.dim; ++r) col[r] = residual(slot.offset + r, slot.offset);
        SphericalVector v = recover_vector(col, slot);
        const ComplexMatrix factor = embed_block(build_B(v), n, slot.style, slot.offset);
        residual = matmul(adjoint(factor), residual);
        p.vectors.push_back(std::move(v));
    }
    return p;
}

}  // namespace ufact
