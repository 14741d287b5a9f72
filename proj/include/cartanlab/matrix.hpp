#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cartanlab/numeric.hpp"

namespace cartanlab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator*(const Integer& k) const;
  std::vector<Integer> operator*(const std::vector<Integer>& v) const;

  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_exact(const IntMatrix& m);

/// Rank over Q by fraction-free elimination.
std::size_t rank_rational(const IntMatrix& m);

/// Basis of the right kernel over Q, each vector scaled to a primitive
/// integer vector whose first non-zero entry is positive.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

/// A matrix whose rows and columns carry labels. Composition across modules
/// matches by label, never by position.
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMatrix entries;

  /// Entry addressed by labels.
  const Integer& at(const std::string& row, const std::string& col) const;

  /// Same matrix with rows and columns permuted into the given label orders.
  LabeledMatrix reordered(const std::vector<std::string>& rows,
                          const std::vector<std::string>& cols) const;
  /// Square convenience: same order for rows and columns.
  LabeledMatrix reordered(const std::vector<std::string>& order) const {
    return reordered(order, order);
  }

  /// Right-aligned text with label headers.
  std::string to_text() const;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

/// Position of each label of `wanted` inside `have`; throws ValidationError
/// naming the first unmatched label.
std::vector<std::size_t> match_labels(const std::vector<std::string>& have,
                                      const std::vector<std::string>& wanted);

}  // namespace cartanlab
