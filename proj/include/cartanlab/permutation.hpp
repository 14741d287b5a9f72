#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cartanlab {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Products compose left to right: (p * q)(i) = q(p(i)), i.e. apply p first.
/// Ordering is lexicographic on the image arrays, which fixes every element
/// order used downstream.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parse 1-based cycle notation such as "(1,2)(3,4)" or "()" on `degree`
  /// points. Whitespace-separated entries "(1 2 3)" are accepted as well.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  /// Build from 1-based cycles given as integer lists.
  static Permutation from_cycle_list(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cartanlab
