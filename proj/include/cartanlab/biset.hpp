#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cartanlab/character_table.hpp"
#include "cartanlab/matrix.hpp"
#include "cartanlab/pair_subgroup.hpp"

namespace cartanlab {

inline constexpr std::size_t kDefaultPointCap = 50000;

/// The (G,G)-biset X = disjoint union of (G x G)/L_i, read as a G x G-set via
/// (g,h).x = g x h^-1.
///
/// Points are cosets (a,b)L_i, labelled by their smallest element in the
/// canonical G x G order. Within a block, points are numbered in order of
/// that label; blocks follow the order of the subgroup list.
class Biset {
 public:
  struct PointInfo {
    std::size_t block;
    PairElem representative;  ///< minimal element of the coset
  };

  Biset(GroupPtr parent, std::vector<PairSubgroup> subgroups, std::size_t point_cap = kDefaultPointCap);

  const PermGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  std::size_t size() const { return points_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<PointInfo>& points() const { return points_; }
  const PairSubgroup& block_subgroup(std::size_t block) const { return blocks_[block]; }
  /// Point indices [first, last) belonging to a block.
  std::pair<std::size_t, std::size_t> block_range(std::size_t block) const;

  /// g . x
  std::size_t left(ElemId g, std::size_t x) const;
  /// x . h
  std::size_t right(std::size_t x, ElemId h) const;
  /// (g,h) . x = g x h^-1
  std::size_t act(PairElem gh, std::size_t x) const;

  /// Number of x with g x h^-1 = x.
  std::uint64_t fixed_points(PairElem gh) const;

 private:
  std::size_t locate(std::size_t block, PairElem element) const;
  PairElem canonical(std::size_t block, PairElem element) const;

  GroupPtr parent_;
  std::vector<PairSubgroup> blocks_;
  std::vector<std::size_t> block_start_;
  std::vector<PointInfo> points_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> lookup_;
  // action tables for every group element when |G| * |X| is small enough
  std::vector<std::uint32_t> left_table_;
  std::vector<std::uint32_t> right_table_;
};

/// Permutation-character multiplicity of chi (x) conj(eta) in C X:
/// 1/|G|^2 sum_{(g,h)} fix_X(g,h) conj(chi(g)) eta(h), evaluated classwise
/// over pairs of conjugacy classes. `threads` workers share the class pairs.
/// Raises InconsistencyError if the result is not a non-negative integer.
Integer perm_char_multiplicity(const Biset& X, const CharacterTable& table, std::size_t chi,
                               std::size_t eta, unsigned threads = 1);

/// All multiplicities at once, rows chi and columns eta in table order.
LabeledMatrix perm_char_matrix(const Biset& X, const CharacterTable& table, unsigned threads = 1);

}  // namespace cartanlab
