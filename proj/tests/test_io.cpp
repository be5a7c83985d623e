#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "test_util.hpp"
#include "ufact/io.hpp"
#include "ufact/random.hpp"
#include "ufact/version.hpp"

using namespace ufact;
using testutil::max_abs_diff;

namespace {

MatrixDocument sample_doc() {
    Rng rng(401);
    const Scheme scheme{SchemeTag::Flag, 3, 0};
    const ParamSet p = random_param_set(scheme, rng);
    MatrixDocument doc;
    doc.kind = "unitary";
    doc.matrix = compose(p);
    doc.params = p;
    doc.seed = 401;
    doc.tool = std::string(kToolName) + " " + kVersion;
    return doc;
}

}  // namespace

TEST_CASE("document serialization round trip is exact") {
    const MatrixDocument doc = sample_doc();
    const std::string text = to_json(doc);
    const MatrixDocument back = parse_document(text);
    CHECK(back.kind == doc.kind);
    CHECK(back.seed == doc.seed);
    CHECK(back.tool == doc.tool);
    CHECK(max_abs_diff(back.matrix, doc.matrix) == 0.0);
    REQUIRE(back.params.has_value());
    for (std::size_t i = 0; i < doc.params->vectors.size(); ++i) {
        CHECK(back.params->vectors[i].angles == doc.params->vectors[i].angles);
        CHECK(back.params->vectors[i].phases == doc.params->vectors[i].phases);
    }
    // a second pass through the writer is byte-identical
    CHECK(to_json(back) == text);
}

TEST_CASE("params documents omit the matrix") {
    MatrixDocument doc;
    doc.kind = "params";
    doc.params = zero_param_set({SchemeTag::SpecialOrthogonal, 4, 0});
    doc.tool = "t";
    const MatrixDocument back = parse_document(to_json(doc));
    CHECK(back.matrix.rows() == 0);
    REQUIRE(back.params.has_value());
    CHECK(back.params->vectors.size() == 3);
    CHECK(back.params->vectors[0].phases.empty());
}

TEST_CASE("spectrum block round trips") {
    MatrixDocument doc = sample_doc();
    doc.kind = "hermitian";
    SpectrumSpec s{3, SpectrumKind::TwoLevel, 1.0, 0, 1, {0.7}, 0.0, true};
    doc.spectrum = s;
    const MatrixDocument back = parse_document(to_json(doc));
    REQUIRE(back.spectrum.has_value());
    CHECK(back.spectrum->kind == SpectrumKind::TwoLevel);
    CHECK(back.spectrum->k == 1);
    CHECK(back.spectrum->normalize);
    CHECK(back.spectrum->angles == std::vector<double>{0.7});
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_document("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_document(R"({"kind":"weird","rows":0,"cols":0,"data":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_document(R"({"kind":"unitary","rows":2,"cols":2,"data":[[1,0]]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_document(R"({"kind":"params","rows":0,"cols":0,"data":[]})"),
                    std::invalid_argument);
}

TEST_CASE("kind residual flags mismatched declarations") {
    MatrixDocument doc = sample_doc();
    CHECK(kind_residual(doc) <= 1e-12 * 3);
    doc.matrix(0, 0) += 1e-3;
    CHECK(kind_residual(doc) > 1e-4);
}

TEST_CASE("save and load through the filesystem") {
    const MatrixDocument doc = sample_doc();
    const std::string path =
        (std::filesystem::temp_directory_path() / "ufact_io_test.json").string();
    save_document(doc, path);
    const MatrixDocument back = load_document(path);
    CHECK(max_abs_diff(back.matrix, doc.matrix) == 0.0);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_document("/nonexistent/dir/x.json"), std::runtime_error);
}
