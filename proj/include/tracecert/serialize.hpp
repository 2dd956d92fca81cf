#pragma once

// Text, JSON and CSV forms of the objects the CLI exports. Rationals are
// always strings ("p" or "p/q") so nothing passes through a double.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracecert/certificate.hpp"
#include "tracecert/exact_matrix.hpp"
#include "tracecert/poly.hpp"
#include "tracecert/report.hpp"
#include "tracecert/verifier.hpp"

namespace tracecert::io {

nlohmann::json to_json(const ExactMatrix& m);
/// Throws std::invalid_argument on a shape mismatch or a bad rational.
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LabeledMonomialVector& v);
LabeledMonomialVector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AccountingReport& report);

/// Header row of column labels (first cell "label"), then one row per matrix
/// row led by its label. Cells containing commas are quoted.
std::string to_csv(const ExactMatrix& m);
std::string to_csv(const AccountingReport& report);

/// Whitespace-separated grid, one matrix row per line.
std::string to_text(const ExactMatrix& m);
/// One monomial per line.
std::string to_text(const LabeledMonomialVector& v);

/// Reads a whitespace-separated grid of rationals. Throws std::runtime_error
/// on ragged rows.
ExactMatrix read_grid(std::istream& in);
ExactMatrix read_grid(const std::filesystem::path& path);
/// One monomial per non-empty line.
std::vector<Monomial> read_monomials(std::istream& in);
std::vector<Monomial> read_monomials(const std::filesystem::path& path);

/// Bit-compares the built n = 4 objects with the transcribed files
/// n4_U, n4_R, n4_y and n4_z12 in `dir`.
ProofReport verify_golden(const std::filesystem::path& dir);

}  // namespace tracecert::io
