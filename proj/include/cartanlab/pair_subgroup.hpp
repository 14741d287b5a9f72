#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartanlab/error.hpp"
#include "cartanlab/perm_group.hpp"

namespace cartanlab {

/// An element (g, h) of G x G, stored as indices into G.
struct PairElem {
  ElemId left = 0;
  ElemId right = 0;

  friend bool operator==(const PairElem&, const PairElem&) = default;
  friend auto operator<=>(const PairElem&, const PairElem&) = default;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// Thrown when an explicit element list is not closed; carries the witness.
class NotClosedError : public ValidationError {
 public:
  NotClosedError(const std::string& what, PairElem a, PairElem b)
      : ValidationError(what), a_(a), b_(b) {}
  PairElem witness_left() const { return a_; }
  PairElem witness_right() const { return b_; }

 private:
  PairElem a_, b_;
};

/// A subgroup L of G x G with its full element list.
///
/// The group law is componentwise, (g,h)(g',h') = (gg', hh'). Elements are
/// kept in lexicographic order of (left, right), which coincides with the
/// lexicographic order of the concatenated image arrays.
class PairSubgroup {
 public:
  /// Close `generators` inside G x G.
  static PairSubgroup generated(GroupPtr parent, std::vector<PairElem> generators,
                                std::size_t element_cap = kDefaultElementCap,
                                std::string name = {});

  /// Accept an explicit element set after verifying closure. Nothing is
  /// completed: a non-closed set raises NotClosedError with a witness pair.
  static PairSubgroup from_elements(GroupPtr parent, std::vector<PairElem> elements,
                                    std::string name = {});

  /// H1 x H2 for subgroups of G given by generators. The factors are kept so
  /// that averages can use the product shortcut.
  static PairSubgroup product(GroupPtr parent, std::span<const ElemId> left_gens,
                              std::span<const ElemId> right_gens,
                              std::size_t element_cap = kDefaultElementCap, std::string name = {});

  /// {(g, g) : g in G}.
  static PairSubgroup diagonal(GroupPtr parent);

  const PermGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t order() const { return elements_.size(); }
  const std::vector<PairElem>& elements() const { return elements_; }
  const std::vector<PairElem>& generators() const { return generators_; }
  bool contains(PairElem x) const;

  /// Present when the subgroup was built as H1 x H2.
  struct ProductFactors {
    std::vector<ElemId> left;
    std::vector<ElemId> right;
  };
  const std::optional<ProductFactors>& factors() const { return factors_; }

  /// {by^-1 x by : x in L}.
  PairSubgroup conjugate(PairElem by) const;

  PairElem multiply(PairElem a, PairElem b) const;
  PairElem inverse(PairElem a) const;

  std::uint64_t code(PairElem x) const {
    return static_cast<std::uint64_t>(x.left) * parent_->order() + x.right;
  }

 private:
  PairSubgroup(GroupPtr parent, std::string name) : parent_(std::move(parent)), name_(std::move(name)) {}
  void index_elements();

  GroupPtr parent_;
  std::string name_;
  std::vector<PairElem> generators_;
  std::vector<PairElem> elements_;
  std::vector<std::uint64_t> sorted_codes_;
  std::optional<ProductFactors> factors_;
};

/// Convenience: look up permutation pairs in G and close them.
PairSubgroup pair_subgroup(GroupPtr parent,
                           const std::vector<std::pair<Permutation, Permutation>>& generators,
                           std::size_t element_cap = kDefaultElementCap, std::string name = {});

}  // namespace cartanlab
