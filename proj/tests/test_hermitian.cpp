#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "ufact/hermitian.hpp"
#include "ufact/manifolds.hpp"
#include "ufact/random.hpp"

using namespace ufact;
using testutil::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

// sorted-descending multiset distance
double spectrum_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return 1e300;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

ParamSet frame_for(const SpectrumSpec& spec, Rng& rng) {
    switch (spec.kind) {
        case SpectrumKind::DegenerateK:
            return random_param_set({SchemeTag::StiefelReduced, spec.n, spec.k}, rng);
        case SpectrumKind::TwoLevel:
            return random_param_set(
                {SchemeTag::Grassmann, spec.n, std::min(spec.k, spec.n - spec.k)}, rng);
        default:
            return random_param_set({SchemeTag::Flag, spec.n, 0}, rng);
    }
}

}  // namespace

TEST_CASE("positive cascade analytic values") {
    const double th = 0.77;
    const std::vector<double> two = eigenvalues_positive(1.0, {th});
    CHECK(two[0] == doctest::Approx(std::cos(th) * std::cos(th)).epsilon(1e-15));
    CHECK(two[1] == doctest::Approx(std::sin(th) * std::sin(th)).epsilon(1e-15));

    const std::vector<double> pole = eigenvalues_positive(3.0, {0.0, 0.0, 0.0});
    CHECK(pole == std::vector<double>{3.0, 0.0, 0.0, 0.0});

    Rng rng(201);
    std::vector<double> angles(3);
    for (double& a : angles) a = rng.uniform(0.0, kPi / 2);
    const std::vector<double> vals = eigenvalues_positive(2.0, angles);
    CHECK(std::abs(sum(vals) - 2.0) <= 1e-14);
    for (double v : vals) CHECK(v >= 0.0);

    CHECK_THROWS_AS(eigenvalues_positive(-1.0, {0.3}), std::invalid_argument);
}

TEST_CASE("traceless cascade") {
    CHECK(eigenvalues_traceless(1.0, 1, {}) == std::vector<double>{1.0, -1.0});

    const double th = 0.6;
    const std::vector<double> three = eigenvalues_traceless(1.0, 1, {th});
    CHECK(three[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(three[1] == doctest::Approx(-std::cos(th) * std::cos(th)).epsilon(1e-15));
    CHECK(three[2] == doctest::Approx(-std::sin(th) * std::sin(th)).epsilon(1e-15));

    Rng rng(203);
    std::vector<double> angles{rng.uniform(0.1, 1.4), rng.uniform(0.1, 1.4)};
    const std::vector<double> four = eigenvalues_traceless(2.5, 2, angles);
    CHECK(std::abs(sum(four)) <= 1e-14);
    CHECK(std::count_if(four.begin(), four.end(), [](double v) { return v > 0.0; }) == 2);

    CHECK_THROWS_AS(eigenvalues_traceless(1.0, 4, std::vector<double>{0.1, 0.2}),
                    std::invalid_argument);
}

TEST_CASE("indefinite cascade") {
    const double th = 0.8;
    const std::vector<double> two = eigenvalues_indefinite(1.0, 1, th, {});
    CHECK(two[0] == doctest::Approx(std::cosh(th) * std::cosh(th)).epsilon(1e-15));
    CHECK(two[1] == doctest::Approx(-std::sinh(th) * std::sinh(th)).epsilon(1e-15));

    // theta_hyp = 0 reduces to the positive cascade padded with zeros
    const std::vector<double> reduced = eigenvalues_indefinite(2.0, 2, 0.0, {0.4, 0.9});
    const std::vector<double> positive = eigenvalues_positive(2.0, {0.4});
    CHECK(reduced[0] == doctest::Approx(positive[0]).epsilon(1e-15));
    CHECK(reduced[1] == doctest::Approx(positive[1]).epsilon(1e-15));
    CHECK(reduced[2] == 0.0);
    CHECK(reduced[3] == 0.0);

    Rng rng(207);
    std::vector<double> angles{rng.uniform(0.0, kPi / 2), rng.uniform(0.0, kPi / 2)};
    const double theta = 1.2;
    const std::vector<double> vals = eigenvalues_indefinite(-3.0, 2, theta, angles);
    const double scale = 3.0 * std::cosh(theta) * std::cosh(theta);
    CHECK(std::abs(sum(vals) - (-3.0)) <= 1e-12 * scale);
}

TEST_CASE("realized spectra match their trace contracts") {
    Rng rng(211);
    for (std::size_t n = 2; n <= 9; ++n) {
        SpectrumSpec pos{n, SpectrumKind::PositiveTrace, 2.0, 0, 0, {}, 0.0, false};
        pos.angles.resize(n - 1);
        for (double& a : pos.angles) a = rng.uniform(0.0, kPi / 2);
        CHECK(std::abs(sum(realize_spectrum(pos)) - 2.0) <= 1e-12 * 2.0);

        if (n >= 3) {
            SpectrumSpec tr{n, SpectrumKind::Traceless, 1.5, n / 2, 0, {}, 0.0, false};
            tr.angles.resize(n - 2);
            for (double& a : tr.angles) a = rng.uniform(0.0, kPi / 2);
            CHECK(std::abs(sum(realize_spectrum(tr))) <= 1e-12 * 1.5);
        }

        SpectrumSpec deg{n, SpectrumKind::DegenerateK, 1.0, 0, n - 1, {}, 0.0, false};
        deg.angles.resize(1);
        deg.angles[0] = rng.uniform(0.0, kPi / 2);
        const std::vector<double> dvals = realize_spectrum(deg);
        CHECK(dvals.size() == n);
        CHECK(std::count(dvals.begin(), dvals.end(), dvals[0]) == std::ptrdiff_t(n - 1));
    }
}

TEST_CASE("assemble with the zero frame is diagonal") {
    SpectrumSpec spec{4, SpectrumKind::PositiveTrace, 1.0, 0, 0, {0.3, 0.8, 1.2}, 0.0, false};
    const ParamSet frame = zero_param_set({SchemeTag::Flag, 4, 0});
    const HermitianOperator op = assemble(spec, frame);
    const std::vector<double> vals = realize_spectrum(spec);
    ComplexMatrix want(4, 4);
    for (std::size_t i = 0; i < 4; ++i) want(i, i) = vals[i];
    CHECK(max_abs_diff(op.matrix, want) <= 1e-15);
}

TEST_CASE("two-level density: PSD, unit trace, two eigenvalues of multiplicity k") {
    Rng rng(213);
    SpectrumSpec spec{4, SpectrumKind::TwoLevel, 1.0, 0, 2, {0.7}, 0.0, true};
    const HermitianOperator op = assemble(spec, frame_for(spec, rng));
    CHECK(std::abs(trace(op.matrix) - Complex(1.0, 0.0)) <= 1e-13);

    const EigenDecomposition eig = hermitian_eig(op.matrix, 1e-10);
    CHECK(eig.eigenvalues.back() >= -1e-12);
    CHECK(std::abs(eig.eigenvalues[0] - eig.eigenvalues[1]) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[2] - eig.eigenvalues[3]) <= 1e-12);
    CHECK(eig.eigenvalues[1] - eig.eigenvalues[2] > 1e-3);  // distinct pair
}

TEST_CASE("degenerate kind: multiplicity shows up in the eigensolver") {
    Rng rng(217);
    SpectrumSpec spec{3, SpectrumKind::DegenerateK, 1.0, 0, 2, {0.4}, 0.0, false};
    const HermitianOperator op = assemble(spec, frame_for(spec, rng));
    const EigenDecomposition eig = hermitian_eig(op.matrix, 1e-10);
    const std::vector<double> want = realize_spectrum(spec);
    CHECK(spectrum_distance(eig.eigenvalues, want) <= 1e-10);
    std::size_t hits = 0;
    for (double lam : eig.eigenvalues)
        if (std::abs(lam - want[0]) <= 1e-10) ++hits;
    CHECK(hits == 2);
}

TEST_CASE("spectrum round trip for every kind") {
    Rng rng(219);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<SpectrumSpec> specs;
        SpectrumSpec pos{n, SpectrumKind::PositiveTrace, 1.7, 0, 0, {}, 0.0, false};
        pos.angles.resize(n - 1);
        specs.push_back(pos);
        if (n >= 3) {
            SpectrumSpec tr{n, SpectrumKind::Traceless, 1.0, 1 + n % 2, 0, {}, 0.0, false};
            tr.angles.resize(n - 2);
            specs.push_back(tr);
            SpectrumSpec ind{n, SpectrumKind::IndefiniteTrace, -2.0, n / 2, 0, {}, 0.9, false};
            ind.angles.resize(n - 2);
            specs.push_back(ind);
        }
        SpectrumSpec deg{n, SpectrumKind::DegenerateK, 1.0, 0, std::max<std::size_t>(1, n / 2),
                         {}, 0.0, false};
        deg.angles.resize(n - deg.k);
        specs.push_back(deg);
        SpectrumSpec two{n, SpectrumKind::TwoLevel, 1.0, 0, std::max<std::size_t>(1, n - 2),
                         {}, 0.0, false};
        two.angles.resize(1);
        specs.push_back(two);

        for (SpectrumSpec spec : specs) {
            for (double& a : spec.angles) a = rng.uniform(0.0, kPi / 2);
            const HermitianOperator op = assemble(spec, frame_for(spec, rng));
            CHECK(hermiticity_residual(op.matrix) <=
                  1e-13 * std::max(1.0, frobenius_norm(op.matrix)));
            const EigenDecomposition eig =
                hermitian_eig(op.matrix, 1e-9 * std::max(1.0, frobenius_norm(op.matrix)));
            CHECK(spectrum_distance(eig.eigenvalues, realize_spectrum(spec)) <= 1e-10);
        }
    }
}

TEST_CASE("assemble rejects mismatched frames") {
    Rng rng(223);
    SpectrumSpec spec{4, SpectrumKind::PositiveTrace, 1.0, 0, 0, {0.1, 0.2, 0.3}, 0.0, false};
    CHECK_THROWS_AS(assemble(spec, random_param_set({SchemeTag::FullUnitary, 4, 0}, rng)),
                    std::invalid_argument);
    SpectrumSpec deg{4, SpectrumKind::DegenerateK, 1.0, 0, 2, {0.1, 0.2}, 0.0, false};
    CHECK_THROWS_AS(assemble(deg, random_param_set({SchemeTag::StiefelReduced, 4, 3}, rng)),
                    std::invalid_argument);
}

TEST_CASE("quadratic residual basics") {
    Rng rng(227);
    // pure state: rank-1 projection satisfies rho^2 = rho
    const GrassmannPoint g = random_grassmann_point(4, 1, rng);
    const ComplexMatrix pure = grassmann_projection(g);
    CHECK(quadratic_residual(pure, 0.5, 0.5) <= 1e-13);

    const ComplexMatrix scalar = 0.7 * ComplexMatrix::identity(3);
    CHECK(quadratic_residual(scalar, 0.7, 0.0) <= 1e-15);

    CHECK_THROWS_AS(quadratic_residual(pure, 0.1, 0.5), std::invalid_argument);
}

TEST_CASE("two-level operators satisfy their quadratic equation") {
    Rng rng(229);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            SpectrumSpec spec{n, SpectrumKind::TwoLevel, 1.0, 0, k,
                              {rng.uniform(0.0, kPi / 2)}, 0.0, true};
            const HermitianOperator op = assemble(spec, frame_for(spec, rng));
            const std::vector<double> vals = realize_spectrum(spec);
            const double l1 = vals[0];
            const double l2 = vals[k];
            const double residual =
                quadratic_residual(op.matrix, 0.5 * (l1 + l2), 0.5 * (l1 - l2));
            CHECK(residual <= 1e-12 * double(n));
        }
    }
}
