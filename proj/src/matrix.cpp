#include "cartanlab/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cartanlab/error.hpp"

namespace cartanlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ParseError("ragged matrix literal");
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ParseError("ragged matrix: row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix sum shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const Integer& k) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw ValidationError("matrix-vector shape mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Integer det_exact(const IntMatrix& input) {
  if (!input.is_square())
    throw ValidationError("determinant of a non-square " + std::to_string(input.rows()) + "x" +
                          std::to_string(input.cols()) + " matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(i, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_rational(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t i = rank;
    while (i < m.rows() && m(i, c) == 0) ++i;
    if (i == m.rows()) continue;
    if (i != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(rank, j));
    for (i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rational(input(i, j));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t i = r;
    while (i < rows && m[i][c] == 0) ++i;
    if (i == rows) continue;
    std::swap(m[i], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Integer>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    Integer den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    std::vector<Integer> iv(cols);
    Integer g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      iv[j] = numerator(v[j]) * (den / denominator(v[j]));
      g = boost::multiprecision::gcd(g, iv[j]);
    }
    if (g != 0)
      for (auto& x : iv) x /= g;
    auto first = std::find_if(iv.begin(), iv.end(), [](const Integer& x) { return x != 0; });
    if (first != iv.end() && *first < 0)
      for (auto& x : iv) x = -x;
    basis.push_back(std::move(iv));
  }
  return basis;
}

std::vector<std::size_t> match_labels(const std::vector<std::string>& have,
                                      const std::vector<std::string>& wanted) {
  std::vector<std::size_t> out;
  for (const auto& w : wanted) {
    auto it = std::find(have.begin(), have.end(), w);
    if (it == have.end()) throw ValidationError("unmatched label " + w);
    out.push_back(static_cast<std::size_t>(it - have.begin()));
  }
  return out;
}

const Integer& LabeledMatrix::at(const std::string& row, const std::string& col) const {
  auto i = match_labels(row_labels, {row})[0];
  auto j = match_labels(col_labels, {col})[0];
  return entries(i, j);
}

LabeledMatrix LabeledMatrix::reordered(const std::vector<std::string>& rows,
                                       const std::vector<std::string>& cols) const {
  if (rows.size() != row_labels.size() || cols.size() != col_labels.size())
    throw ValidationError("reordering must list every label exactly once");
  auto ri = match_labels(row_labels, rows);
  auto ci = match_labels(col_labels, cols);
  LabeledMatrix out{rows, cols, IntMatrix(rows.size(), cols.size())};
  for (std::size_t i = 0; i < ri.size(); ++i)
    for (std::size_t j = 0; j < ci.size(); ++j) out.entries(i, j) = entries(ri[i], ci[j]);
  return out;
}

std::string LabeledMatrix::to_text() const {
  std::size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    width[j] = col_labels[j].size();
    for (std::size_t i = 0; i < entries.rows(); ++i) width[j] = std::max(width[j], entries(i, j).str().size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) { os << std::string(w - std::min(w, s.size()), ' ') << s; };
  pad("", label_width);
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    os << "  ";
    pad(col_labels[j], width[j]);
  }
  os << '\n';
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    os << row_labels[i] << std::string(label_width - row_labels[i].size(), ' ');
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      os << "  ";
      pad(entries(i, j).str(), width[j]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cartanlab
