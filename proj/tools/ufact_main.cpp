// Command-line front end: generate parameterized matrices, factorize
// unitaries back to canonical parameters, realize eigenvalue cascades, and
// run verification suites over the JSON document format.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage or I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ufact/batch.hpp"
#include "ufact/contractions.hpp"
#include "ufact/factorization.hpp"
#include "ufact/hermitian.hpp"
#include "ufact/io.hpp"
#include "ufact/manifolds.hpp"
#include "ufact/random.hpp"
#include "ufact/report.hpp"
#include "ufact/version.hpp"

namespace {

using namespace ufact;

std::string tool_string() { return std::string(kToolName) + " " + kVersion; }

std::vector<double> parse_csv(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::string indexed_path(const std::string& path, std::size_t i) {
    const std::filesystem::path p(path);
    std::filesystem::path out = p.parent_path();
    out /= p.stem().string() + "_" + std::to_string(i) + p.extension().string();
    return out.string();
}

void validate_loaded(const MatrixDocument& doc, double tol, const std::string& what) {
    const double r = kind_residual(doc);
    if (r > tol)
        throw std::invalid_argument(what + ": declared kind '" + doc.kind +
                                    "' fails its residual check (" + std::to_string(r) +
                                    " > " + std::to_string(tol) + ")");
}

struct GenerateOptions {
    std::string scheme;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string out;
    std::string emit = "matrix";
    std::string params_path;
    bool validate = false;
    double tol = -1.0;
    // hermitian extras
    std::string kind;
    double h = 1.0;
    std::size_t p = 1;
    double theta = -1.0;
    double theta_hyp = 0.0;
    std::string angles_csv;
    bool normalize = false;
};

SpectrumSpec build_spectrum_spec(const GenerateOptions& opt, Rng& rng) {
    SpectrumSpec s;
    s.n = opt.n;
    s.kind = spectrum_kind_from_string(opt.kind);
    s.h = opt.h;
    s.p = opt.p;
    s.k = opt.k;
    s.theta_hyp = opt.theta_hyp;
    s.normalize = opt.normalize;
    const std::size_t need = spectrum_angle_count(s.kind, s.n, s.k);
    if (!opt.angles_csv.empty()) {
        s.angles = parse_csv(opt.angles_csv);
    } else if (opt.theta >= 0.0) {
        if (need != 1)
            throw std::invalid_argument("--theta fits kinds with one angle; use --angles");
        s.angles = {opt.theta};
    } else {
        s.angles.resize(need);
        for (double& a : s.angles) a = rng.uniform(0.0, std::acos(0.0));  // [0, pi/2)
    }
    validate_spectrum(s);
    return s;
}

MatrixDocument generate_hermitian_doc(const GenerateOptions& opt) {
    Rng rng(opt.seed);
    const SpectrumSpec spec = build_spectrum_spec(opt, rng);
    ParamSet frame;
    switch (spec.kind) {
        case SpectrumKind::DegenerateK:
            frame = random_param_set(Scheme{SchemeTag::StiefelReduced, spec.n, spec.k}, rng);
            break;
        case SpectrumKind::TwoLevel:
            frame = random_param_set(
                Scheme{SchemeTag::Grassmann, spec.n, std::min(spec.k, spec.n - spec.k)}, rng);
            break;
        default:
            frame = random_param_set(Scheme{SchemeTag::Flag, spec.n, 0}, rng);
            break;
    }
    const HermitianOperator op = assemble(spec, frame);
    MatrixDocument doc;
    doc.kind = "hermitian";
    doc.matrix = op.matrix;
    doc.params = op.frame_params;
    doc.spectrum = op.spectrum;
    doc.seed = opt.seed;
    doc.tool = tool_string();
    return doc;
}

MatrixDocument make_scheme_doc(const Scheme& scheme, const ParamSet& p, const std::string& emit,
                               std::uint64_t seed) {
    MatrixDocument doc;
    doc.params = p;
    doc.seed = seed;
    doc.tool = tool_string();
    if (emit == "matrix") {
        doc.kind = "unitary";
        doc.matrix = compose(p);
    } else if (emit == "frame") {
        if (scheme.tag != SchemeTag::StiefelReduced && scheme.tag != SchemeTag::StiefelFull)
            throw std::invalid_argument("--emit frame needs a Stiefel scheme");
        doc.kind = "isometry";
        doc.matrix = stiefel_frame(p).matrix;
    } else if (emit == "projection") {
        doc.kind = "projection";
        if (scheme.tag == SchemeTag::Grassmann) {
            doc.matrix = grassmann_projection(make_grassmann_point(scheme.n, scheme.k, p));
        } else if (scheme.tag == SchemeTag::StiefelReduced ||
                   scheme.tag == SchemeTag::StiefelFull) {
            doc.matrix = stiefel_projection(stiefel_frame(p));
        } else {
            throw std::invalid_argument("--emit projection needs a Stiefel or Grassmann scheme");
        }
    } else {
        throw std::invalid_argument("unknown --emit mode: " + emit);
    }
    return doc;
}

int run_generate(const GenerateOptions& opt) {
    if (opt.scheme == "hermitian") {
        if (opt.count != 1)
            throw std::invalid_argument("--count applies to unitary-family schemes");
        MatrixDocument doc = generate_hermitian_doc(opt);
        if (opt.validate)
            validate_loaded(doc, opt.tol > 0 ? opt.tol : 1e-8 * double(opt.n), "generate");
        save_document(doc, opt.out);
        return 0;
    }

    const SchemeTag tag = scheme_tag_from_string(opt.scheme);
    const Scheme scheme{tag, opt.n, scheme_uses_k(tag) ? opt.k : 0};
    validate_scheme(scheme);

    if (!opt.params_path.empty()) {
        const MatrixDocument src = load_document(opt.params_path);
        if (!src.params) throw std::invalid_argument("--params document has no params object");
        if (src.params->scheme.tag != scheme.tag || src.params->scheme.n != scheme.n ||
            src.params->scheme.k != scheme.k)
            throw std::invalid_argument("--params scheme does not match the requested scheme");
        MatrixDocument doc = make_scheme_doc(scheme, *src.params, opt.emit, opt.seed);
        if (opt.validate)
            validate_loaded(doc, opt.tol > 0 ? opt.tol : 1e-8 * double(opt.n), "generate");
        save_document(doc, opt.out);
        return 0;
    }

    if (opt.count == 1) {
        Rng rng(opt.seed);
        MatrixDocument doc = make_scheme_doc(scheme, random_param_set(scheme, rng), opt.emit,
                                             opt.seed);
        if (opt.validate)
            validate_loaded(doc, opt.tol > 0 ? opt.tol : 1e-8 * double(opt.n), "generate");
        save_document(doc, opt.out);
        return 0;
    }

    // independent draws; item i uses derive_seed(seed, i)
    const std::vector<ParamSet> sets = batch::random_param_sets(scheme, opt.count, opt.seed);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        MatrixDocument doc = make_scheme_doc(scheme, sets[i], opt.emit, derive_seed(opt.seed, i));
        if (opt.validate)
            validate_loaded(doc, opt.tol > 0 ? opt.tol : 1e-8 * double(opt.n), "generate");
        save_document(doc, indexed_path(opt.out, i));
    }
    return 0;
}

int run_factorize(const std::string& in, const std::string& scheme, std::size_t k,
                  const std::string& out, double tol, bool validate) {
    const MatrixDocument doc = load_document(in);
    if (doc.kind == "params") throw std::invalid_argument("factorize: input has no matrix");
    if (validate) validate_loaded(doc, 1e-8 * double(doc.matrix.rows()), "factorize");
    const SchemeTag tag = scheme_tag_from_string(scheme);
    ParamSet p = factorize(doc.matrix, tag, k, tol);
    MatrixDocument result;
    result.kind = "params";
    result.params = std::move(p);
    result.seed = doc.seed;
    result.tool = tool_string();
    save_document(result, out);
    return 0;
}

// Collapse a sorted eigenvalue list into clusters separated by gaps above tol.
std::vector<double> cluster_means(const std::vector<double>& sorted_desc, double tol) {
    std::vector<double> means;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= sorted_desc.size(); ++i) {
        if (i == sorted_desc.size() || sorted_desc[i - 1] - sorted_desc[i] > tol) {
            double sum = 0.0;
            for (std::size_t j = start; j < i; ++j) sum += sorted_desc[j];
            means.push_back(sum / double(i - start));
            start = i;
        }
    }
    return means;
}

int run_verify(const std::string& in, const std::string& suite, double tol, bool validate) {
    const MatrixDocument doc = load_document(in);
    if (doc.kind == "params") throw std::invalid_argument("verify: input has no matrix");
    const ComplexMatrix& m = doc.matrix;
    const double n = double(m.rows());
    if (validate) validate_loaded(doc, 1e-8 * n, "verify");

    VerificationReport report;
    if (suite == "unitary") {
        const double t = tol > 0 ? tol : 1e-12 * n;
        report.add("unitarity", unitarity_residual(m), t);
    } else if (suite == "isometry") {
        const double t = tol > 0 ? tol : 1e-12 * n;
        report.add("isometry", unitarity_residual(m), t);
    } else if (suite == "projection") {
        const double t = tol > 0 ? tol : 1e-12 * n;
        report.add("hermiticity", hermiticity_residual(m), t);
        report.add("idempotence", idempotence_residual(m), t);
        const Complex tr = trace(m);
        report.add("trace-integer", std::abs(tr - Complex(std::round(tr.real()), 0.0)), t);
        std::printf("trace = %.17g (rank k = %g)\n", tr.real(), std::round(tr.real()));
    } else if (suite == "quadratic") {
        const double herm = hermiticity_residual(m);
        report.add("hermiticity", herm, 1e-8 * n);
        if (herm <= 1e-8 * n) {
            const EigenDecomposition eig = hermitian_eig(m, 1e-8 * n);
            double scale = 1.0;
            for (double lam : eig.eigenvalues) scale = std::max(scale, std::abs(lam));
            const std::vector<double> means = cluster_means(eig.eigenvalues, 1e-8 * scale);
            report.add("two-level", double(means.size() > 2 ? means.size() - 2 : 0), 0.0);
            const double mu1 = means.front();
            const double mu2 = means.size() > 1 ? means[1] : means.front();
            const double pc = 0.5 * (mu1 + mu2);
            const double qc = 0.5 * (mu1 - mu2);
            const double t = tol > 0 ? tol : 1e-12 * n * std::max(1.0, scale * scale);
            report.add("quadratic", quadratic_residual(m, pc, qc), t);
            std::printf("p = %.17g, q = %.17g\n", pc, qc);
        }
    } else if (suite == "main-theorem") {
        const double t = tol > 0 ? tol : 1e-10 * n;
        report = verify_main_theorem(m, t);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    std::cout << to_string(report);
    return report.passed() ? 0 : 1;
}

int run_spectrum(GenerateOptions opt) {
    Rng rng(opt.seed);
    const SpectrumSpec spec = build_spectrum_spec(opt, rng);
    const std::vector<double> vals = realize_spectrum(spec);
    double tr = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        std::printf("lambda_%zu = %.17g\n", i + 1, vals[i]);
        tr += vals[i];
    }
    std::printf("trace = %.17g\n", tr);
    return 0;
}

int run_dim(std::size_t n, const std::string& scheme, std::size_t k) {
    if (!scheme.empty()) {
        const SchemeTag tag = scheme_tag_from_string(scheme);
        const Scheme s{tag, n, scheme_uses_k(tag) ? k : 0};
        std::printf("%s n=%zu%s: %zu\n", scheme.c_str(), n,
                    scheme_uses_k(tag) ? (" k=" + std::to_string(k)).c_str() : "",
                    param_count(s));
        return 0;
    }
    std::printf("full            n=%zu: %zu\n", n, param_count({SchemeTag::FullUnitary, n, 0}));
    std::printf("flag            n=%zu: %zu\n", n, param_count({SchemeTag::Flag, n, 0}));
    std::printf("orthogonal      n=%zu: %zu\n", n,
                param_count({SchemeTag::SpecialOrthogonal, n, 0}));
    for (std::size_t kk = 1; kk <= n; ++kk)
        std::printf("stiefel-reduced n=%zu k=%zu: %zu\n", n, kk,
                    param_count({SchemeTag::StiefelReduced, n, kk}));
    for (std::size_t kk = 1; kk <= n; ++kk)
        std::printf("stiefel-full    n=%zu k=%zu: %zu\n", n, kk,
                    param_count({SchemeTag::StiefelFull, n, kk}));
    for (std::size_t kk = 1; kk <= n / 2; ++kk)
        std::printf("grassmann       n=%zu k=%zu: %zu\n", n, kk,
                    param_count({SchemeTag::Grassmann, n, kk}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary factorization toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("generate", "compose a matrix from parameters");
    cmd_gen->add_option("--scheme", gen.scheme,
                        "full|flag|stiefel-reduced|stiefel-full|grassmann|orthogonal|hermitian")
        ->required();
    cmd_gen->add_option("--n", gen.n, "dimension")->required();
    cmd_gen->add_option("--k", gen.k, "block count / multiplicity");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed (mt19937-64/53 stream)");
    cmd_gen->add_option("--count", gen.count, "number of independent draws");
    cmd_gen->add_option("--out", gen.out, "output document path")->required();
    cmd_gen->add_option("--emit", gen.emit, "matrix|frame|projection");
    cmd_gen->add_option("--params", gen.params_path, "compose explicit params from a document");
    cmd_gen->add_flag("--validate", gen.validate, "check the declared kind before writing");
    cmd_gen->add_option("--tol", gen.tol, "tolerance override");
    cmd_gen->add_option("--kind", gen.kind,
                        "spectrum kind: positive|traceless|indefinite|degenerate|two-level");
    cmd_gen->add_option("--h", gen.h, "trace / trace scale");
    cmd_gen->add_option("--p", gen.p, "positive-eigenvalue count");
    cmd_gen->add_option("--theta", gen.theta, "single spectrum angle (two-level)");
    cmd_gen->add_option("--theta-hyp", gen.theta_hyp, "hyperbolic parameter");
    cmd_gen->add_option("--angles", gen.angles_csv, "comma-separated spectrum angles");
    cmd_gen->add_flag("--normalize", gen.normalize, "rescale eigenvalues to unit trace");

    std::string fin, fscheme, fout;
    std::size_t fk = 0;
    double ftol = -1.0;
    bool fvalidate = false;
    CLI::App* cmd_fac = app.add_subcommand("factorize", "recover canonical parameters");
    cmd_fac->add_option("--in", fin, "input document")->required();
    cmd_fac->add_option("--scheme", fscheme, "target scheme")->required();
    cmd_fac->add_option("--k", fk, "block count for Stiefel/Grassmann schemes");
    cmd_fac->add_option("--out", fout, "output params document")->required();
    cmd_fac->add_option("--tol", ftol, "unitarity tolerance (default 1e-10*n)");
    cmd_fac->add_flag("--validate", fvalidate, "check the declared kind at load");

    std::string vin, vsuite;
    double vtol = -1.0;
    bool vvalidate = false;
    CLI::App* cmd_ver = app.add_subcommand("verify", "run a verification suite");
    cmd_ver->add_option("--in", vin, "input document")->required();
    cmd_ver->add_option("--suite", vsuite, "unitary|projection|isometry|quadratic|main-theorem")
        ->required();
    cmd_ver->add_option("--tol", vtol, "tolerance override");
    cmd_ver->add_flag("--validate", vvalidate, "check the declared kind at load");

    GenerateOptions spec_opt;
    CLI::App* cmd_spec = app.add_subcommand("spectrum", "realize an eigenvalue cascade");
    cmd_spec->add_option("--kind", spec_opt.kind, "spectrum kind")->required();
    cmd_spec->add_option("--n", spec_opt.n, "dimension")->required();
    cmd_spec->add_option("--h", spec_opt.h, "trace / trace scale");
    cmd_spec->add_option("--p", spec_opt.p, "positive-eigenvalue count");
    cmd_spec->add_option("--k", spec_opt.k, "multiplicity");
    cmd_spec->add_option("--theta", spec_opt.theta, "single angle");
    cmd_spec->add_option("--theta-hyp", spec_opt.theta_hyp, "hyperbolic parameter");
    cmd_spec->add_option("--angles", spec_opt.angles_csv, "comma-separated angles");
    cmd_spec->add_option("--seed", spec_opt.seed, "RNG seed for drawn angles");
    cmd_spec->add_flag("--normalize", spec_opt.normalize, "rescale to unit trace");

    std::size_t dn = 0, dk = 1;
    std::string dscheme;
    CLI::App* cmd_dim = app.add_subcommand("dim", "print parameter counts");
    cmd_dim->add_option("--n", dn, "dimension")->required();
    cmd_dim->add_option("--scheme", dscheme, "single scheme instead of the table");
    cmd_dim->add_option("--k", dk, "block count for the single-scheme form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_fac->parsed()) return run_factorize(fin, fscheme, fk, fout, ftol, fvalidate);
        if (cmd_ver->parsed()) return run_verify(vin, vsuite, vtol, vvalidate);
        if (cmd_spec->parsed()) return run_spectrum(spec_opt);
        if (cmd_dim->parsed()) return run_dim(dn, dscheme, dk);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
