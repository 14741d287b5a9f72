#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cartanlab/character_table.hpp"
#include "cartanlab/matrix.hpp"
#include "cartanlab/pair_subgroup.hpp"

namespace cartanlab {

/// Delta(L): entry (chi, eta) is the average of chi (x) conj(eta) over L,
/// the multiplicity of chi (x) conj(eta) in the permutation character of
/// (G x G)/L. Rows and columns are labelled by Irr(G).
struct DeltaMatrix {
  std::string subgroup;
  std::size_t subgroup_order = 0;
  LabeledMatrix matrix;
};

struct FieldTag {
  /// 0 means characteristic zero (the complex Cartan matrix).
  std::uint64_t prime = 0;

  bool is_complex() const { return prime == 0; }
  std::string to_string() const {
    return prime == 0 ? "complex" : "mod-" + std::to_string(prime);
  }
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// Cartan matrix of the contracted algebra over C or over a field of
/// characteristic p.
struct CartanMatrix {
  LabeledMatrix matrix;
  FieldTag field;
};

/// Rows: ordinary characters; columns: p-modular irreducibles.
struct DecompositionMatrix {
  std::uint64_t prime = 0;
  LabeledMatrix matrix;

  const std::vector<std::string>& ordinary_labels() const { return matrix.row_labels; }
  const std::vector<std::string>& modular_labels() const { return matrix.col_labels; }
};

/// Shape, prime, non-negativity and full column rank. With a group order,
/// also insists on a permutation matrix when p does not divide |G|.
void validate_decomposition(const DecompositionMatrix& d, std::uint64_t group_order = 0);

/// Identity decomposition matrix for a prime not dividing |G|. Modular
/// labels are derived from the ordinary ones ("chi_..." becomes "psi_...").
DecompositionMatrix identity_decomposition(const CharacterTable& table, std::uint64_t prime);

struct DeltaOptions {
  /// Use chi(H1^) conj(eta)(H2^) when L carries product factors.
  bool use_product_shortcut = true;
};

DeltaMatrix delta_matrix(const CharacterTable& table, const PairSubgroup& L,
                         const DeltaOptions& options = {});

/// Identity plus sum_L z_L Delta(L). All deltas must share one label list
/// (as a set; the first delta's order is used). Negative z is rejected.
CartanMatrix complex_cartan(std::span<const DeltaMatrix> deltas, std::span<const std::int64_t> z);

/// D^T C D, with D's ordinary labels matched to C's labels by name.
CartanMatrix modular_cartan(const CartanMatrix& complex, const DecompositionMatrix& d);

/// Cartan matrix of the uncontracted algebra: append a 1x1 block for the
/// simple module with apex z, labelled "z".
CartanMatrix uncontracted(const CartanMatrix& contracted);

/// Dimension check sum chi(1) eta(1) Delta_{chi,eta} = |G|^2 / |L|.
bool satisfies_dimension_rule(const CharacterTable& table, const DeltaMatrix& delta);

}  // namespace cartanlab
