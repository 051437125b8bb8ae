#pragma once

#include <string>

#include <json.hpp>

#include "rcanon/instance.hpp"

namespace rcanon::io {

using json = nlohmann::json;

/// Entry encoding: R as a number, C as [re, im], H as [a, b, c, d].
json matrix_to_json(const Mat& m, FieldTag field);
/// Throws ParseError on ragged rows or entries of the wrong arity.
Mat matrix_from_json(const json& j, FieldTag field);

std::string_view form_name(InvolutionTag inv, int epsilon);

/// PairDocument: field, involution, form, r, A, F and optional tolerances.
json pair_to_json(const MatrixPair& p);
/// Throws ParseError, ContextError or UnsupportedContext.
MatrixPair pair_from_json(const json& j);

json block_to_json(const CanonicalBlock& b);
/// `m` is the root modulus used to range-check indices.
CanonicalBlock block_from_json(const json& j, int m);

/// CanonDocument without a witness (ground-truth files).
json form_to_json(const CanonicalForm& cf);
CanonicalForm form_from_json(const json& j);

/// CanonDocument with the witness S and its residuals.
json canonicalization_to_json(const Canonicalization& c);
Canonicalization canonicalization_from_json(const json& j);

json report_to_json(const ValidationReport& rep);

/// Reads and parses a file. Throws ParseError (including I/O failures).
json read_json_file(const std::string& path);
/// Throws ParseError on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

} // namespace rcanon::io
