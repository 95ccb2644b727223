#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mvalg/completion.hpp"
#include "mvalg/finite_algebra.hpp"
#include "mvalg/ideals.hpp"
#include "mvalg/symbolic.hpp"

// JSON schema for algebra documents, symbolic elements and reports. All
// parse functions throw SchemaError on documents that do not match the
// schema; semantic validation (axioms, index ranges) is left to the caller.
namespace mvalg::io {

using nlohmann::json;

inline constexpr std::string_view kReportVersion = "mvalg-report/1";

/// {"type": "tables", "size", "zero", "oplus", "neg", "labels"?}
struct TablesDocument {
  std::size_t size = 0;
  Element zero = 0;
  std::vector<std::vector<Element>> oplus;
  std::vector<Element> neg;
  std::vector<std::string> labels;
};

/// {"type": "product", "orders": [n_1, ...]}
struct ProductDocument {
  std::vector<int> orders;
};

/// {"type": "full_product", "period", "classes", "prefix_overrides"?, "index_set", "description"?}
using AlgebraDocument = std::variant<TablesDocument, ProductDocument, IndexSpec>;

AlgebraDocument parse_algebra_document(const json& doc);
AlgebraDocument parse_algebra_document_text(std::string_view text);

/// Builds the finite algebra described by a tables or product document.
/// Throws ResourceError above `max_size`, PreconditionError for
/// full_product documents, AxiomViolation/StructuralError for bad tables.
FiniteMVAlgebra materialize(const AlgebraDocument& doc, std::size_t max_size = kDefaultMaxSize);

/// The symbolic presentation of a full_product or product document.
IndexSpec as_index_spec(const AlgebraDocument& doc);

json to_json(const FiniteMVAlgebra& algebra);
json to_json(const IndexSpec& spec);
IndexSpec index_spec_from_json(const json& doc);

/// {"modulus", "prefix": {"x": k}, "classes": [k | "zero" | "top", ...]}
json to_json(const SymbolicElement& f);
SymbolicElement symbolic_element_from_json(const json& doc);

/// "principal:x" or "free:r:m".
SymbolicUltrafilter parse_ultrafilter(std::string_view text);
std::string to_string(const SymbolicUltrafilter& u);

json to_json(const Ideal& ideal);
json to_json(const IdealClassification& c);
json to_json(const Decomposition& d, const FiniteMVAlgebra& algebra);
json to_json(const MaximalIdealDescriptor& d);
json to_json(const Census& census);
json to_json(const Verdict& verdict);
json to_json(const CompletionReport& report);
json to_json(const Main3Report& report);
json to_json(const BooReport& report);

/// {"command", "version", "result"}.
json make_report(std::string_view command, json result);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const json& doc);

}  // namespace mvalg::io
