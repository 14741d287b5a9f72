#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/cyclotomic.hpp"
#include "cartanlab/pair_subgroup.hpp"
#include "cartanlab/perm_group.hpp"

namespace cartanlab {

/// One irreducible character: exact values on the conjugacy classes of the
/// parent group, in the group's canonical class order.
struct Character {
  std::string label;       ///< display label (built-in name or auto label)
  std::string auto_label;  ///< "X1", "X2", ... by canonical row position
  std::vector<Cyclotomic> values;

  const Cyclotomic& degree_value() const { return values.front(); }
};

/// A character value tagged with the class it was evaluated on.
struct ClassValue {
  std::size_t class_index;
  Cyclotomic value;
};

struct DixonOptions {
  /// How many admissible primes to try before giving up.
  std::size_t max_prime_attempts = 25;
};

/// Irr(G) for a permutation group G.
///
/// Rows are sorted by degree ascending, then by value vector descending
/// (lexicographic on canonical coefficients, class order fixed by G), so the
/// trivial character is always row 0. Every table is checked against both
/// orthogonality relations before it is handed out.
class CharacterTable {
 public:
  /// Validates and takes ownership of the rows. Throws ValidationError with a
  /// witness on any orthogonality or degree failure.
  CharacterTable(GroupPtr group, std::uint32_t conductor, std::vector<Character> rows);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::uint32_t conductor() const { return conductor_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Character>& rows() const { return rows_; }
  const Character& row(std::size_t i) const { return rows_[i]; }

  std::vector<std::string> labels() const;
  std::optional<std::size_t> find_label(const std::string& label) const;
  std::size_t index_of_label(const std::string& label) const;

  /// Preferred display order of labels, when a built-in labelling supplied one.
  const std::vector<std::string>& display_order() const { return display_order_; }

  /// chi(g) for an element of G.
  ClassValue evaluate(std::size_t row, ElemId g) const;

  /// The modular prime that split the class algebra (0 for loaded tables).
  std::uint64_t dixon_prime() const { return dixon_prime_; }

  /// Replace labels (size must match) and set the display order.
  void relabel(const std::vector<std::string>& labels, std::vector<std::string> display_order);

 private:
  friend CharacterTable character_table(GroupPtr, const DixonOptions&);

  GroupPtr group_;
  std::uint32_t conductor_;
  std::vector<Character> rows_;
  std::vector<std::string> display_order_;
  std::uint64_t dixon_prime_ = 0;
};

/// Compute Irr(G) exactly.
///
/// Class matrices built from class multiplication coefficients are split into
/// common eigenspaces modulo a prime e = 1 (mod exp(G)) with e > 2 sqrt|G|;
/// character values are recovered from their images mod e by lifting the
/// eigenvalue multiplicities of each class representative.
CharacterTable character_table(GroupPtr group, const DixonOptions& options = {});

/// Validate a candidate table: sum of squared degrees, degree divisibility,
/// both orthogonality relations. Throws ValidationError naming the offending
/// pair of rows or columns.
void validate_character_table(const PermGroup& group, const std::vector<Character>& rows);

/// Sort rows into canonical order (degree ascending, values descending).
void sort_rows(std::vector<Character>& rows);

/// (chi, eta)_G = 1/|G| sum_g chi(g) conj(eta(g)).
Rational inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                       const std::vector<Cyclotomic>& eta);
Rational inner_product(const CharacterTable& table, std::size_t chi, std::size_t eta);

/// (chi (x) conj eta)(L^) = 1/|L| sum_{(a,b) in L} chi(a) conj(eta(b)).
/// The result must be a non-negative integer; anything else raises
/// InconsistencyError.
Integer subgroup_average(const CharacterTable& table, std::size_t chi, std::size_t eta,
                         const PairSubgroup& L);

/// chi(H1^) * conj(eta)(H2^) for subgroups of G given as element id lists.
Integer product_subgroup_average(const CharacterTable& table, std::size_t chi, std::size_t eta,
                                 std::span<const ElemId> H1, std::span<const ElemId> H2);

/// 1/|H| sum_{h in H} chi(h).
Cyclotomic class_function_average(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                                  std::span<const ElemId> H);

/// Number of pairs of L in each (class(a), class(b)) cell, row-major over
/// class indices.
std::vector<std::uint64_t> class_pair_counts(const PairSubgroup& L);

}  // namespace cartanlab
