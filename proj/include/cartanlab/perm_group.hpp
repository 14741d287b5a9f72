#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cartanlab/permutation.hpp"

namespace cartanlab {

/// Index of an element in a group's canonical element list.
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 20000;

/// Enumerate the subgroup generated by `generators` on `degree` points.
/// The result is sorted lexicographically, so the identity is element 0.
std::vector<Permutation> closure(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t element_cap = kDefaultElementCap);

struct ConjugacyClass {
  ElemId representative;  ///< smallest member in canonical order
  std::vector<ElemId> members;
  std::size_t size() const { return members.size(); }
};

/// A finite permutation group with its full element list.
///
/// Everything (elements, inverses, classes, power data) is computed once at
/// construction; the object is immutable afterwards and safe to share across
/// threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::size_t element_cap = kDefaultElementCap, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElemId id) const { return elements_[id]; }

  static constexpr ElemId identity() { return 0; }

  std::optional<ElemId> find(const Permutation& p) const;
  /// Throws ValidationError if `p` is not in the group.
  ElemId index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  ElemId multiply(ElemId a, ElemId b) const;
  ElemId inverse(ElemId a) const { return inverses_[a]; }
  /// b^-1 a b
  ElemId conjugate(ElemId a, ElemId by) const;
  ElemId power(ElemId a, std::uint64_t k) const;
  std::size_t element_order(ElemId a) const { return orders_[a]; }

  /// Least common multiple of the element orders.
  std::uint64_t exponent() const { return exponent_; }

  /// Classes ordered by element order, then class size, then representative.
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(ElemId a) const { return class_of_[a]; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t centralizer_order(std::size_t cls) const {
    return order() / classes_[cls].size();
  }

  /// Indices of generators in the element list.
  std::vector<ElemId> generator_ids() const;

  /// Sorted element ids of the subgroup generated by `gens`.
  std::vector<ElemId> subgroup_closure(std::span<const ElemId> gens) const;

  /// True if the sorted id list is closed under multiplication.
  bool is_subgroup(std::span<const ElemId> sorted_ids) const;

 private:
  void build_tables();
  void build_classes();

  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> table_;  // row-major Cayley table, empty for large groups
  std::vector<ElemId> inverses_;
  std::vector<std::size_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace cartanlab
