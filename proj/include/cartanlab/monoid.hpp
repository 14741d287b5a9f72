#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cartanlab/biset.hpp"

namespace cartanlab {

inline constexpr std::size_t kDefaultMonoidCap = 4000;

/// M(G, X) = G u X u {z} as an explicit multiplication table.
///
/// Element 0 is the identity of G, elements [0, |G|) are G in canonical
/// order, then the points of X, and the zero z comes last. Products: group
/// law on G, the biset actions between G and X, xy = z on X, and z absorbs.
class Monoid {
 public:
  enum class Kind { Group, Biset, Zero };

  Monoid(const Biset& X, std::size_t element_cap = kDefaultMonoidCap);

  std::size_t size() const { return size_; }
  std::size_t group_size() const { return group_size_; }
  std::size_t biset_size() const { return biset_size_; }
  std::size_t identity() const { return 0; }
  std::size_t zero() const { return size_ - 1; }

  Kind kind(std::size_t m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  /// Biset block of a point of X (m in the X range).
  std::size_t block_of(std::size_t m) const { return blocks_[m - group_size_]; }
  std::size_t block_count() const { return block_count_; }
  /// Human-readable element name: a cycle string, "x<i>[(g,h)L_b]" or "z".
  const std::string& describe(std::size_t m) const { return names_[m]; }

 private:
  std::size_t size_;
  std::size_t group_size_;
  std::size_t biset_size_;
  std::size_t block_count_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> blocks_;
  std::vector<std::string> names_;
};

struct AxiomReport {
  bool identity_ok = true;
  bool zero_absorbing = true;
  bool biset_products_zero = true;
  bool group_block_ok = true;
  bool actions_commute = true;
  bool associative = true;
  bool exhaustive = true;           ///< false when triples were sampled
  std::uint64_t triples_checked = 0;
  std::string first_failure;

  bool ok() const {
    return identity_ok && zero_absorbing && biset_products_zero && group_block_ok && actions_commute &&
           associative;
  }
};

struct AxiomOptions {
  std::size_t exhaustive_limit = 400;  ///< |M| up to this: every triple
  std::uint64_t samples = 1'000'000;   ///< random triples above the limit
  std::uint64_t seed = 0;
};

AxiomReport check_axioms(const Monoid& m, const AxiomOptions& options = {});

struct JClass {
  std::vector<std::size_t> members;  ///< sorted element indices
  bool regular = false;
};

struct JClassReport {
  std::vector<JClass> classes;  ///< ordered by smallest member
  std::size_t non_regular_count() const;
};

/// J-classes as mutual two-sided ideal membership, each flagged regular iff
/// some a gives xax = x for its smallest member.
JClassReport green_j_report(const Monoid& m);

/// True iff the non-regular J-classes are exactly the biset blocks (the
/// G x G-orbits on X).
bool non_regular_classes_are_orbits(const Monoid& m, const JClassReport& report);

}  // namespace cartanlab
