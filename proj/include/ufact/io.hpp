#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ufact/factorization.hpp"
#include "ufact/hermitian.hpp"
#include "ufact/linalg.hpp"

namespace ufact {

/// On-disk JSON document. kind is one of "unitary", "hermitian",
/// "projection", "isometry", "params"; data is row-major [re, im] pairs.
/// "params" documents carry no matrix (rows = cols = 0). Numbers are written
/// as decimals with 17 significant digits and keys in a fixed order, so a
/// document is byte-identical across runs and round-trip exact.
struct MatrixDocument {
    std::string kind;
    ComplexMatrix matrix;  // 0x0 for kind "params"
    std::optional<ParamSet> params;
    std::optional<SpectrumSpec> spectrum;
    std::uint64_t seed = 0;
    std::string tool;  // "<name> <version>"
};

std::string to_json(const MatrixDocument& doc);
MatrixDocument parse_document(const std::string& text);

void save_document(const MatrixDocument& doc, const std::string& path);
MatrixDocument load_document(const std::string& path);

/// Residual of the declared kind's defining property: unitarity for
/// "unitary"/"isometry", Hermiticity for "hermitian", Hermiticity +
/// idempotence for "projection", 0 for "params".
double kind_residual(const MatrixDocument& doc);

}  // namespace ufact
