#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cartanlab/cartan.hpp"
#include "cartanlab/character_table.hpp"
#include "cartanlab/hunt.hpp"
#include "cartanlab/monoid.hpp"

namespace cartanlab {

using Json = nlohmann::ordered_json;

/// Parse a JSON file; ParseError names the path on failure.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// --- groups -----------------------------------------------------------------

/// {"degree": n, "generators": [...], "images": false, "name": "..."}
/// Generators are cycle strings "(1,2)(3,4)" or lists of 1-based cycles
/// [[1,2],[3,4]]; with "images": true each generator is a 0-based image array.
GroupPtr group_from_json(const Json& j, std::string name = {});
Json group_to_json(const PermGroup& g);

/// A built-in name ("S3", "C6", ...) or a path to a group spec file.
GroupPtr load_group(const std::string& spec);

// --- subgroups of G x G -----------------------------------------------------

/// One of
///   {"pairs": [[left, right], ...]}                  generators
///   {"elements": [[left, right], ...], "closed": true} the full element list
///   {"product": {"left": [...], "right": [...]}}      H1 x H2 from generators
/// with permutations written as in group specs (honouring "images").
PairSubgroup subgroup_from_json(const GroupPtr& group, const Json& j, std::string name = {});
Json subgroup_to_json(const PairSubgroup& L);

/// A built-in subgroup name or a path to a subgroup spec file.
PairSubgroup load_subgroup(const GroupPtr& group, const std::string& spec);

// --- decomposition matrices -------------------------------------------------

/// {"prime", "ordinary_labels", "modular_labels", "matrix"}
DecompositionMatrix decomposition_from_json(const Json& j);
Json decomposition_to_json(const DecompositionMatrix& d);

/// "S3-p3", "identity:p" or a path to a decomposition file.
DecompositionMatrix load_decomposition(const CharacterTable& table, const std::string& spec);

// --- character tables -------------------------------------------------------

/// {"group_order", "class_reps", "class_sizes", "conductor",
///  "rows": [{"label", "values"}]}; a value is an integer, an "a/b" string or
/// a coefficient list over powers of zeta_conductor.
///
/// Without a group, G is generated by the class representatives (which always
/// generate), on "degree" points if given, otherwise on the largest point
/// mentioned. Checks run in this order: sum of squared degrees against
/// group_order, group_order against |G|, classes, then orthogonality.
CharacterTable character_table_from_json(const Json& j, GroupPtr group = nullptr);
Json character_table_to_json(const CharacterTable& table);
CharacterTable load_character_table(const std::string& path, GroupPtr group = nullptr);

/// Classes, the exact rows in canonical order and the label map.
std::string character_table_to_text(const CharacterTable& table);

// --- matrices ---------------------------------------------------------------

/// {"labels": [...], "rows": [[...]]}, plus "col_labels" when the column
/// labels differ from the row labels. Entries beyond 64 bits are strings.
Json matrix_to_json(const LabeledMatrix& m);
LabeledMatrix matrix_from_json(const Json& j);

// --- monoids ----------------------------------------------------------------

/// One row of element indices per line.
std::string monoid_table_text(const Monoid& m);
Json monoid_to_json(const Monoid& m, const Biset& X);

// --- reports ----------------------------------------------------------------

Json counterexample_to_json(const Counterexample& ce);
Json search_report_to_json(const SearchResult& result, const Json& configuration);
Json verification_report_to_json(const VerificationReport& report, const Json& configuration);

}  // namespace cartanlab
