#include "ufact/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace ufact {

namespace {

const char* const kKinds[] = {"unitary", "hermitian", "projection", "isometry", "params"};

bool known_kind(const std::string& kind) {
    return std::find(std::begin(kKinds), std::end(kKinds), kind) != std::end(kKinds);
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void append_double_array(std::string& out, const std::vector<double>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += fmt(xs[i]);
    }
    out += ']';
}

}  // namespace

std::string to_json(const MatrixDocument& doc) {
    if (!known_kind(doc.kind)) throw std::invalid_argument("to_json: unknown kind " + doc.kind);
    std::string out = "{\n";
    out += "  \"kind\": \"" + doc.kind + "\",\n";
    out += "  \"rows\": " + std::to_string(doc.matrix.rows()) + ",\n";
    out += "  \"cols\": " + std::to_string(doc.matrix.cols()) + ",\n";
    out += "  \"data\": [";
    const std::vector<Complex>& data = doc.matrix.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) out += ',';
        out += '[' + fmt(data[i].real()) + ',' + fmt(data[i].imag()) + ']';
    }
    out += "]";
    if (doc.params) {
        const ParamSet& p = *doc.params;
        out += ",\n  \"params\": {\n";
        out += "    \"scheme\": \"" + to_string(p.scheme.tag) + "\",\n";
        out += "    \"n\": " + std::to_string(p.scheme.n) + ",\n";
        out += "    \"k\": " + std::to_string(p.scheme.k) + ",\n";
        out += "    \"factors\": [\n";
        for (std::size_t i = 0; i < p.vectors.size(); ++i) {
            out += "      {\"angles\": ";
            append_double_array(out, p.vectors[i].angles);
            out += ", \"phases\": ";
            append_double_array(out, p.vectors[i].phases);
            out += '}';
            if (i + 1 < p.vectors.size()) out += ',';
            out += '\n';
        }
        out += "    ]\n  }";
    }
    if (doc.spectrum) {
        const SpectrumSpec& s = *doc.spectrum;
        out += ",\n  \"spectrum\": {\n";
        out += "    \"kind\": \"" + to_string(s.kind) + "\",\n";
        out += "    \"n\": " + std::to_string(s.n) + ",\n";
        out += "    \"h\": " + fmt(s.h) + ",\n";
        out += "    \"p\": " + std::to_string(s.p) + ",\n";
        out += "    \"k\": " + std::to_string(s.k) + ",\n";
        out += "    \"theta_hyp\": " + fmt(s.theta_hyp) + ",\n";
        out += "    \"normalize\": " + std::string(s.normalize ? "true" : "false") + ",\n";
        out += "    \"angles\": ";
        append_double_array(out, s.angles);
        out += "\n  }";
    }
    out += ",\n  \"meta\": {\"seed\": " + std::to_string(doc.seed) + ", \"tool\": \"" +
           doc.tool + "\"}\n";
    out += "}\n";
    return out;
}

MatrixDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("document parse error: ") + e.what());
    }
    MatrixDocument doc;
    try {
        doc.kind = j.at("kind").get<std::string>();
        if (!known_kind(doc.kind))
            throw std::invalid_argument("document: unknown kind " + doc.kind);
        const std::size_t rows = j.at("rows").get<std::size_t>();
        const std::size_t cols = j.at("cols").get<std::size_t>();
        const auto& data = j.at("data");
        if (data.size() != rows * cols)
            throw std::invalid_argument("document: data length does not match rows*cols");
        if (rows > 0 && cols > 0) {
            std::vector<Complex> entries;
            entries.reserve(data.size());
            for (const auto& pair : data) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument("document: data entries must be [re, im]");
                entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
            }
            doc.matrix = ComplexMatrix(rows, cols, std::move(entries));
        } else if (doc.kind != "params") {
            throw std::invalid_argument("document: only params documents may omit the matrix");
        }
        if (j.contains("params")) {
            const auto& jp = j.at("params");
            ParamSet p;
            p.scheme.tag = scheme_tag_from_string(jp.at("scheme").get<std::string>());
            p.scheme.n = jp.at("n").get<std::size_t>();
            p.scheme.k = jp.at("k").get<std::size_t>();
            const std::vector<FactorSlot> layout = factor_layout(p.scheme);
            const auto& factors = jp.at("factors");
            if (factors.size() != layout.size())
                throw std::invalid_argument("document: factor count does not match scheme");
            for (std::size_t i = 0; i < layout.size(); ++i) {
                SphericalVector v;
                v.dim = layout[i].dim;
                v.convention = layout[i].convention;
                v.angles = factors[i].at("angles").get<std::vector<double>>();
                v.phases = factors[i].at("phases").get<std::vector<double>>();
                p.vectors.push_back(std::move(v));
            }
            validate_param_set(p);
            doc.params = std::move(p);
        } else if (doc.kind == "params") {
            throw std::invalid_argument("document: params kind requires a params object");
        }
        if (j.contains("spectrum")) {
            const auto& js = j.at("spectrum");
            SpectrumSpec s;
            s.kind = spectrum_kind_from_string(js.at("kind").get<std::string>());
            s.n = js.at("n").get<std::size_t>();
            s.h = js.at("h").get<double>();
            s.p = js.at("p").get<std::size_t>();
            s.k = js.at("k").get<std::size_t>();
            s.theta_hyp = js.at("theta_hyp").get<double>();
            s.normalize = js.at("normalize").get<bool>();
            s.angles = js.at("angles").get<std::vector<double>>();
            validate_spectrum(s);
            doc.spectrum = std::move(s);
        }
        if (j.contains("meta")) {
            const auto& jm = j.at("meta");
            if (jm.contains("seed")) doc.seed = jm.at("seed").get<std::uint64_t>();
            if (jm.contains("tool")) doc.tool = jm.at("tool").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("document field error: ") + e.what());
    }
    return doc;
}

void save_document(const MatrixDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json(doc);
    if (!out) throw std::runtime_error("write failed: " + path);
}

MatrixDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

double kind_residual(const MatrixDocument& doc) {
    if (doc.kind == "unitary" || doc.kind == "isometry") return unitarity_residual(doc.matrix);
    if (doc.kind == "hermitian") return hermiticity_residual(doc.matrix);
    if (doc.kind == "projection")
        return std::max(hermiticity_residual(doc.matrix), idempotence_residual(doc.matrix));
    return 0.0;  // params
}

}  // namespace ufact
