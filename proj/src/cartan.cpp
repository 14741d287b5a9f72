#include "cartanlab/cartan.hpp"

#include <algorithm>

#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

std::string modular_label(const std::string& ordinary) {
  if (ordinary.rfind("chi_", 0) == 0) return "psi_" + ordinary.substr(4);
  return "psi_" + ordinary;
}

}  // namespace

void validate_decomposition(const DecompositionMatrix& d, std::uint64_t group_order) {
  const auto& m = d.matrix.entries;
  if (!is_prime(d.prime)) throw ValidationError("decomposition prime " + std::to_string(d.prime) + " is not prime");
  if (m.rows() != d.matrix.row_labels.size() || m.cols() != d.matrix.col_labels.size())
    throw ValidationError("decomposition matrix shape does not match its labels");
  if (m.cols() > m.rows()) throw ValidationError("decomposition matrix has more columns than rows");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw ValidationError("decomposition matrix has a negative entry");
  if (rank_rational(m) != m.cols()) throw ValidationError("decomposition matrix lacks full column rank");
  if (group_order != 0 && group_order % d.prime != 0) {
    bool permutation = m.rows() == m.cols();
    for (std::size_t i = 0; permutation && i < m.rows(); ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) == 1) ++ones;
        else if (m(i, j) != 0) permutation = false;
      }
      if (ones != 1) permutation = false;
    }
    if (!permutation)
      throw ValidationError("p = " + std::to_string(d.prime) +
                            " does not divide |G|, so the decomposition matrix must be a permutation matrix");
  }
}

DecompositionMatrix identity_decomposition(const CharacterTable& table, std::uint64_t prime) {
  if (!is_prime(prime)) throw ValidationError(std::to_string(prime) + " is not prime");
  if (table.group().order() % prime == 0)
    throw ValidationError("p = " + std::to_string(prime) +
                          " divides |G|; the identity is not a decomposition matrix here");
  DecompositionMatrix d;
  d.prime = prime;
  d.matrix.row_labels = table.labels();
  for (const auto& l : d.matrix.row_labels) d.matrix.col_labels.push_back(modular_label(l));
  d.matrix.entries = IntMatrix::identity(table.size());
  return d;
}

DeltaMatrix delta_matrix(const CharacterTable& table, const PairSubgroup& L,
                         const DeltaOptions& options) {
  const std::size_t n = table.size();
  DeltaMatrix delta;
  delta.subgroup = L.name();
  delta.subgroup_order = L.order();
  delta.matrix.row_labels = table.labels();
  delta.matrix.col_labels = table.labels();
  delta.matrix.entries = IntMatrix(n, n);

  if (options.use_product_shortcut && L.factors()) {
    const auto& f = *L.factors();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        delta.matrix.entries(a, b) = product_subgroup_average(table, a, b, f.left, f.right);
    return delta;
  }

  // Delta = (1/|L|) X N conj(X)^T with N the class-pair count matrix of L
  const PermGroup& g = table.group();
  const std::size_t r = g.class_count();
  const auto counts = class_pair_counts(L);
  const std::uint32_t cond = table.conductor();
  std::vector<std::vector<Cyclotomic>> right(n, std::vector<Cyclotomic>(r, Cyclotomic(cond)));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (counts[i * r + j] != 0) right[b][i] += table.row(b).values[j].conj() * Rational(counts[i * r + j]);
  const Rational scale(1, L.order());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Cyclotomic acc(cond);
      for (std::size_t i = 0; i < r; ++i)
        if (!right[b][i].is_zero()) acc += table.row(a).values[i] * right[b][i];
      auto q = (acc * scale).to_rational();
      if (!q || !is_integral(*q) || *q < 0)
        throw InconsistencyError("Delta(" + L.name() + ") entry (" + table.row(a).label + ", " +
                                 table.row(b).label + ") is not a non-negative integer: " +
                                 (acc * scale).to_string());
      delta.matrix.entries(a, b) = numerator(*q);
    }
  }
  return delta;
}

CartanMatrix complex_cartan(std::span<const DeltaMatrix> deltas, std::span<const std::int64_t> z) {
  if (deltas.size() != z.size())
    throw ValidationError("got " + std::to_string(z.size()) + " multiplicities for " +
                          std::to_string(deltas.size()) + " subgroups");
  if (deltas.empty()) throw ValidationError("complex_cartan needs at least one Delta to fix the labels");
  const auto& labels = deltas.front().matrix.row_labels;
  CartanMatrix c{{labels, labels, IntMatrix::identity(labels.size())}, FieldTag{0}};
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (z[i] < 0) throw ValidationError("multiplicity for " + deltas[i].subgroup + " is negative");
    if (deltas[i].matrix.row_labels.size() != labels.size())
      throw ValidationError("Delta(" + deltas[i].subgroup + ") has a different label set");
    if (z[i] == 0) continue;
    const LabeledMatrix aligned = deltas[i].matrix.reordered(labels);
    c.matrix.entries = c.matrix.entries + aligned.entries * Integer(z[i]);
  }
  return c;
}

CartanMatrix modular_cartan(const CartanMatrix& complex, const DecompositionMatrix& d) {
  if (!complex.field.is_complex()) throw ValidationError("modular_cartan expects a complex Cartan matrix");
  const auto& labels = complex.matrix.row_labels;
  if (d.ordinary_labels().size() != labels.size())
    throw ValidationError("decomposition matrix has " + std::to_string(d.ordinary_labels().size()) +
                          " ordinary labels, Cartan matrix has " + std::to_string(labels.size()));
  // align D's rows with C's label order
  const auto rows = match_labels(d.ordinary_labels(), labels);
  IntMatrix aligned(labels.size(), d.modular_labels().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < aligned.cols(); ++j) aligned(i, j) = d.matrix.entries(rows[i], j);
  const IntMatrix c = complex.matrix.reordered(labels, labels).entries;
  CartanMatrix out;
  out.field = FieldTag{d.prime};
  out.matrix.row_labels = d.modular_labels();
  out.matrix.col_labels = d.modular_labels();
  out.matrix.entries = aligned.transpose() * c * aligned;
  return out;
}

CartanMatrix uncontracted(const CartanMatrix& contracted) {
  const auto& m = contracted.matrix;
  CartanMatrix out;
  out.field = contracted.field;
  out.matrix.row_labels = m.row_labels;
  out.matrix.row_labels.push_back("z");
  out.matrix.col_labels = m.col_labels;
  out.matrix.col_labels.push_back("z");
  out.matrix.entries = IntMatrix(m.entries.rows() + 1, m.entries.cols() + 1);
  for (std::size_t i = 0; i < m.entries.rows(); ++i)
    for (std::size_t j = 0; j < m.entries.cols(); ++j) out.matrix.entries(i, j) = m.entries(i, j);
  out.matrix.entries(m.entries.rows(), m.entries.cols()) = 1;
  return out;
}

bool satisfies_dimension_rule(const CharacterTable& table, const DeltaMatrix& delta) {
  const auto& g = table.group();
  Integer sum = 0;
  for (std::size_t a = 0; a < table.size(); ++a) {
    const Integer da = numerator(*table.row(a).degree_value().to_rational());
    for (std::size_t b = 0; b < table.size(); ++b) {
      const Integer db = numerator(*table.row(b).degree_value().to_rational());
      sum += da * db * delta.matrix.at(table.row(a).label, table.row(b).label);
    }
  }
  const Integer total = Integer(g.order()) * Integer(g.order());
  return delta.subgroup_order != 0 && total % delta.subgroup_order == 0 &&
         sum == total / delta.subgroup_order;
}

}  // namespace cartanlab
