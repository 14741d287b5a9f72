#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/cartan.hpp"
#include "cartanlab/character_table.hpp"
#include "cartanlab/pair_subgroup.hpp"

namespace cartanlab {

/// Names and preferred display order for a recognised character table.
struct Labelling {
  std::vector<std::string> labels;  ///< per canonical row
  std::vector<std::string> display_order;
};

/// Partition labels for the symmetric group on three points, recognised by
/// its class sizes and values. Other tables keep their auto labels.
std::optional<Labelling> match_builtin_labelling(const CharacterTable& table);

/// Named groups: trivial, Cn, Dn (order 2n), Sn, An, Q8 (regular, 8 points).
GroupPtr builtin_group(const std::string& name);
std::vector<std::string> builtin_group_examples();

/// Named subgroups of G x G:
///   diag (alias La)  {(g,g)}
///   trivial, full, left (G x 1), right (1 x G)
///   Lb               1 x <(1,2)>
///   Lc               G x <(1,2,3)>
/// Lb and Lc need (1,2) and (1,2,3) in G.
PairSubgroup builtin_subgroup(const GroupPtr& group, const std::string& name);
std::vector<std::string> builtin_subgroup_names();

/// "S3-p3" or "identity:p".
DecompositionMatrix builtin_decomposition(const CharacterTable& table, const std::string& name);

/// A stored configuration with its expected Cartan matrices.
struct BuiltinConfiguration {
  std::string name;
  std::string group;
  std::vector<std::string> subgroups;
  std::vector<std::int64_t> z;
  std::string decomposition;
  LabeledMatrix expected_complex;
  LabeledMatrix expected_modular;
  Integer det_complex;
  Integer det_modular;
  std::size_t rank_modular = 0;
};

const BuiltinConfiguration& builtin_configuration(const std::string& name);
std::vector<std::string> builtin_configuration_names();

}  // namespace cartanlab
