#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "groupent/detection.hpp"
#include "groupent/maps.hpp"
#include "groupent/positivity.hpp"

namespace groupent {

/// Documents are emitted with insertion-ordered keys so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses text; FormatError carries "line L, column C" on syntax errors.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Group document: {name, order, identity, labels, mul, inverse, irreps}, or
/// {"product": [spec, spec]} for a direct product of two resolvable groups.
TablePtr parse_group(const Json& doc, const std::string& fallback_name = {});
Json group_to_json(const IrrepTable& t);

/// Names of the bundled groups (z2..z6, s3, d4, q8).
std::vector<std::string> bundled_group_names();

/// Resolves a bundled name ("s3"), a product of resolvable names ("s3xs3",
/// "s3xz2xz2" nests left to right), or a path to a group document.
TablePtr resolve_group(const std::string& spec);

/// "s3" for a plain group, ["s3","s3"] for a product.
Json domain_to_json(const IrrepTable& t);

/// Function document: {domain, values}; values is a flat list of [re,im] or,
/// for product domains, a |G1|×|G2| nested list. When `expected` is given the
/// document's domain must match it (DomainMismatch otherwise).
GroupFunction parse_function(const Json& doc, const TablePtr& expected = nullptr);
Json function_to_json(const GroupFunction& f);

/// Blocks document: {domain, normalization, blocks: {label: matrix}}. Labels
/// not present are zero blocks. `normalization`, when present, must equal
/// kBlocksNormalization.
inline constexpr const char* kBlocksNormalization = "n_alpha_haar";
FourierBlocks parse_blocks(const Json& doc, const TablePtr& expected = nullptr);
Json blocks_to_json(const FourierBlocks& b);

/// State document: {block: "a,b" | ["a","b"], matrix}. Without `block` the
/// unique irrep whose dimension matches the matrix is used.
struct PlacedOperator {
  Matrix matrix;
  int irrep = -1;
};
PlacedOperator parse_state(const Json& doc, const TablePtr& domain);
Json state_to_json(const Matrix& rho, const IrrepTable& domain, int irrep);

/// Map document: tagged union on "form"; see README for the field list.
MapPtr parse_map(const Json& doc, const TablePtr& default_group = nullptr);
Json map_to_json(const PDMapSpec& m);

Matrix parse_matrix(const Json& j, const std::string& field);
Json matrix_to_json(const Matrix& m);
Complex parse_complex(const Json& j, const std::string& field);
Json complex_to_json(Complex z);
Json vector_to_json(const Vector& v);

Json to_json(const VerificationReport& r);
Json to_json(const PDVerdict& v);
Json to_json(const GNSData& g);
Json to_json(const PurityResult& p);
Json to_json(const MapClassification& c);
Json to_json(const PPTResult& r);
Json to_json(const SeparabilityReport& r);
Json to_json(const DetectionResult& d);

}  // namespace groupent
