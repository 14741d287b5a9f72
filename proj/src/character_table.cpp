#include "cartanlab/character_table.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/builtins.hpp"
#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

using ModVec = std::vector<std::uint64_t>;
using ModMat = std::vector<ModVec>;

/// Raised inside the modular stage; triggers a retry with the next prime.
struct SplitFailure {
  std::string reason;
};

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }

/// Row-reduce in place; returns pivot columns. Rows past rank are dropped.
std::vector<std::size_t> rref(ModMat& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const std::uint64_t inv = inv_mod(m[row][col], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = sub_mod(m[r][c], f * m[row][c] % p, p);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis (as rows) of {c : M c = 0} for a square matrix M.
ModMat nullspace(ModMat m, std::uint64_t p) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - M), constant term first, via
/// reduction to upper Hessenberg form.
ModVec charpoly(ModMat h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t inv = inv_mod(h[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      const std::uint64_t u = h[i][m - 1] * inv % p;
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[i][c] = sub_mod(h[i][c], u * h[m][c] % p, p);
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + u * h[r][i]) % p;
    }
  }
  std::vector<ModVec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    ModVec next(m + 1, 0);
    const ModVec& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = (next[k + 1] + prev[k]) % p;
      next[k] = sub_mod(next[k], h[m - 1][m - 1] * prev[k] % p, p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % p;
      const std::uint64_t f = t * h[m - i - 1][m - 1] % p;
      const ModVec& q = polys[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) next[k] = sub_mod(next[k], f * q[k] % p, p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::uint64_t eval_poly(const ModVec& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = (acc * x + poly[k]) % p;
  return acc;
}

std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

/// Class multiplication coefficients c[j][k][l] = #{(x,y) in C_j x C_k : xy = z_l}.
std::vector<std::uint64_t> class_coefficients(const PermGroup& g) {
  const std::size_t r = g.class_count();
  std::vector<std::uint64_t> c(r * r * r, 0);
  for (std::size_t l = 0; l < r; ++l) {
    const ElemId z = g.classes()[l].representative;
    for (ElemId x = 0; x < g.order(); ++x) {
      const ElemId y = g.multiply(g.inverse(x), z);
      c[(g.class_of(x) * r + g.class_of(y)) * r + l] += 1;
    }
  }
  return c;
}

struct ModularTable {
  std::vector<std::uint64_t> degrees;
  std::vector<ModVec> values;  // per row, per class, mod p
};

ModularTable split_modular(const PermGroup& g, const std::vector<std::uint64_t>& coeff,
                           std::uint64_t p) {
  const std::size_t r = g.class_count();
  std::vector<ModMat> spaces;
  {
    ModMat id(r, ModVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    std::vector<ModMat> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = rref(basis, p);
      // restriction of A_j to span(basis), coordinates read off the pivots
      ModMat restricted(d, ModVec(d, 0));
      bool scalar = true;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
          std::uint64_t acc = 0;
          const std::size_t row = pivots[k];
          for (std::size_t l = 0; l < r; ++l)
            acc = (acc + coeff[(j * r + row) * r + l] % p * basis[i][l]) % p;
          restricted[k][i] = acc;
          if ((k == i && acc != restricted[0][0]) || (k != i && acc != 0)) scalar = false;
        }
      }
      if (scalar) {
        next.push_back(std::move(basis));
        continue;
      }
      const ModVec poly = charpoly(restricted, p);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < p && found < d; ++lambda) {
        if (eval_poly(poly, lambda, p) != 0) continue;
        ModMat shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = sub_mod(shifted[i][i], lambda, p);
        ModMat coords = nullspace(shifted, p);
        if (coords.empty()) throw SplitFailure{"root of the characteristic polynomial has no eigenvector"};
        ModMat sub;
        for (const auto& c : coords) {
          ModVec v(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < r; ++l) v[l] = (v[l] + c[i] * basis[i][l]) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw SplitFailure{"class matrix is not diagonalisable modulo the prime"};
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw SplitFailure{"common eigenspaces did not split into lines"};

  const std::uint64_t order = g.order();
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t l = 0; l < r; ++l) inverse_class[l] = g.class_of(g.inverse(g.classes()[l].representative));

  ModularTable out;
  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  for (auto& space : spaces) {
    ModVec w = space[0];
    if (w[0] == 0) throw SplitFailure{"eigenvector vanishes on the identity class"};
    const std::uint64_t inv0 = inv_mod(w[0], p);
    for (auto& x : w) x = x * inv0 % p;
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < r; ++l)
      s = (s + w[l] * w[inverse_class[l]] % p * inv_mod(g.classes()[l].size() % p, p)) % p;
    if (s == 0) throw SplitFailure{"degenerate norm for an eigenvector"};
    const std::uint64_t target = order % p * inv_mod(s, p) % p;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree && d * d <= order; ++d)
      if (d * d % p == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw SplitFailure{"no admissible degree for an eigenvector"};
    ModVec values(r);
    for (std::size_t l = 0; l < r; ++l)
      values[l] = degree * w[l] % p * inv_mod(g.classes()[l].size() % p, p) % p;
    out.degrees.push_back(degree);
    out.values.push_back(std::move(values));
  }
  return out;
}

std::vector<Character> lift_table(const PermGroup& g, const ModularTable& mt, std::uint64_t p,
                                  std::uint32_t n) {
  const std::size_t r = g.class_count();
  const std::uint64_t zeta = pow_mod(primitive_root(p), (p - 1) / n, p);
  std::vector<Character> rows;
  for (std::size_t row = 0; row < mt.values.size(); ++row) {
    const std::uint64_t degree = mt.degrees[row];
    Character chi;
    for (std::size_t l = 0; l < r; ++l) {
      const ElemId x = g.classes()[l].representative;
      const std::uint64_t o = g.element_order(x);
      const std::uint64_t step = n / o;
      std::vector<std::uint64_t> powers(o);
      for (std::uint64_t k = 0; k < o; ++k) powers[k] = mt.values[row][g.class_of(g.power(x, k))];
      const std::uint64_t inv_o = inv_mod(o % p, p);
      std::vector<Rational> coeffs(n, Rational(0));
      std::uint64_t total = 0;
      for (std::uint64_t i = 0; i < o; ++i) {
        // multiplicity of the eigenvalue zeta_o^i of the representing matrix
        std::uint64_t acc = 0;
        const std::uint64_t base = pow_mod(zeta, (p - 1 - (step * i) % (p - 1)) % (p - 1), p);
        std::uint64_t w = 1;
        for (std::uint64_t k = 0; k < o; ++k) {
          acc = (acc + powers[k] * w) % p;
          w = w * base % p;
        }
        const std::uint64_t m = acc * inv_o % p;
        if (m > degree) throw SplitFailure{"eigenvalue multiplicity out of range"};
        coeffs[step * i] += m;
        total += m;
      }
      if (total != degree) throw SplitFailure{"eigenvalue multiplicities do not sum to the degree"};
      chi.values.push_back(Cyclotomic::from_coefficients(n, std::move(coeffs)));
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

std::uint64_t first_admissible_prime(std::uint64_t exponent, std::uint64_t group_order,
                                     std::uint64_t after) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  std::uint64_t e = exponent + 1;
  while (e <= after || static_cast<double>(e) <= bound || !is_prime(e)) e += exponent;
  return e;
}

}  // namespace

void sort_rows(std::vector<Character>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    const Rational da = a.degree_value().coefficients()[0];
    const Rational db = b.degree_value().coefficients()[0];
    if (da != db) return da < db;
    return a.values > b.values;
  });
}

void validate_character_table(const PermGroup& g, const std::vector<Character>& rows) {
  const std::size_t r = g.class_count();
  if (rows.size() != r)
    throw ValidationError("table has " + std::to_string(rows.size()) + " rows but the group has " +
                          std::to_string(r) + " classes");
  Integer sum_sq = 0;
  for (const auto& chi : rows) {
    if (chi.values.size() != r)
      throw ValidationError("row " + chi.label + " has the wrong number of values");
    auto d = chi.degree_value().to_rational();
    if (!d || !is_integral(*d) || *d <= 0)
      throw ValidationError("row " + chi.label + " has a degree that is not a positive integer");
    const Integer deg = numerator(*d);
    if (Integer(g.order()) % deg != 0)
      throw ValidationError("degree of " + chi.label + " does not divide |G|");
    sum_sq += deg * deg;
  }
  if (sum_sq != g.order())
    throw ValidationError("sum of squared degrees is " + sum_sq.str() + ", expected |G| = " +
                          std::to_string(g.order()));

  std::vector<std::vector<Cyclotomic>> conj(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (const auto& v : rows[a].values) conj[a].push_back(v.conj());
  const std::uint32_t n = rows[0].values[0].conductor();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a; b < rows.size(); ++b) {
      Cyclotomic acc(n);
      for (std::size_t l = 0; l < r; ++l)
        acc += (rows[a].values[l] * conj[b][l]) * Rational(g.classes()[l].size());
      const Cyclotomic expected = Cyclotomic::from_rational(a == b ? Rational(g.order()) : Rational(0), n);
      if (acc != expected)
        throw ValidationError("row orthogonality fails for (" + rows[a].label + ", " + rows[b].label +
                              "): |G|(chi,eta) = " + acc.to_string());
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic acc(n);
      for (std::size_t a = 0; a < rows.size(); ++a) acc += rows[a].values[i] * conj[a][j];
      const Cyclotomic expected =
          Cyclotomic::from_rational(i == j ? Rational(g.centralizer_order(i)) : Rational(0), n);
      if (acc != expected)
        throw ValidationError("column orthogonality fails for classes " + std::to_string(i + 1) +
                              " and " + std::to_string(j + 1) + ": sum = " + acc.to_string());
    }
  }
}

CharacterTable::CharacterTable(GroupPtr group, std::uint32_t conductor, std::vector<Character> rows)
    : group_(std::move(group)), conductor_(conductor), rows_(std::move(rows)) {
  if (conductor_ == 0) throw ValidationError("table conductor must be positive");
  for (auto& chi : rows_)
    for (auto& v : chi.values) {
      if (conductor_ % v.conductor() != 0)
        throw ValidationError("character value conductor does not divide the table conductor");
      v = v.embed(conductor_);
    }
  sort_rows(rows_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].auto_label = "X" + std::to_string(i + 1);
    if (rows_[i].label.empty()) rows_[i].label = rows_[i].auto_label;
  }
  validate_character_table(*group_, rows_);
  std::vector<std::string> seen;
  for (const auto& chi : rows_) {
    if (std::find(seen.begin(), seen.end(), chi.label) != seen.end())
      throw ValidationError("duplicate character label " + chi.label);
    seen.push_back(chi.label);
  }
}

std::vector<std::string> CharacterTable::labels() const {
  std::vector<std::string> out;
  for (const auto& chi : rows_) out.push_back(chi.label);
  return out;
}

std::optional<std::size_t> CharacterTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].label == label || rows_[i].auto_label == label) return i;
  return std::nullopt;
}

std::size_t CharacterTable::index_of_label(const std::string& label) const {
  auto i = find_label(label);
  if (!i) throw ValidationError("unknown character label " + label);
  return *i;
}

ClassValue CharacterTable::evaluate(std::size_t row, ElemId g) const {
  const std::size_t cls = group_->class_of(g);
  return {cls, rows_.at(row).values[cls]};
}

void CharacterTable::relabel(const std::vector<std::string>& labels,
                             std::vector<std::string> display_order) {
  if (labels.size() != rows_.size()) throw ValidationError("label count does not match row count");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].label = labels[i];
  display_order_ = std::move(display_order);
}

CharacterTable character_table(GroupPtr group, const DixonOptions& options) {
  const PermGroup& g = *group;
  const auto n = static_cast<std::uint32_t>(g.exponent());
  const auto coeff = class_coefficients(g);
  std::uint64_t prime = 0;
  std::string last_failure;
  for (std::size_t attempt = 0; attempt < options.max_prime_attempts; ++attempt) {
    prime = first_admissible_prime(n, g.order(), prime);
    std::vector<Character> rows;
    try {
      rows = lift_table(g, split_modular(g, coeff, prime), prime, n);
    } catch (const SplitFailure& f) {
      last_failure = f.reason + " (prime " + std::to_string(prime) + ")";
      continue;
    }
    CharacterTable table(group, n, std::move(rows));
    table.dixon_prime_ = prime;
    if (auto labelling = match_builtin_labelling(table)) table.relabel(labelling->labels, labelling->display_order);
    return table;
  }
  throw InconsistencyError("character table computation failed after " +
                           std::to_string(options.max_prime_attempts) + " primes: " + last_failure);
}

Rational inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                       const std::vector<Cyclotomic>& eta) {
  const PermGroup& g = table.group();
  if (chi.size() != g.class_count() || eta.size() != g.class_count())
    throw ValidationError("class function does not match the table's classes");
  Cyclotomic acc(table.conductor());
  for (std::size_t l = 0; l < g.class_count(); ++l) {
    auto [a, b] = embed_common(chi[l], eta[l].conj());
    auto term = (a * b) * Rational(g.classes()[l].size());
    auto [x, y] = embed_common(acc, term);
    acc = x + y;
  }
  auto q = acc.to_rational();
  if (!q) throw InconsistencyError("inner product is not rational: " + acc.to_string());
  return *q / Rational(g.order());
}

Rational inner_product(const CharacterTable& table, std::size_t chi, std::size_t eta) {
  return inner_product(table, table.row(chi).values, table.row(eta).values);
}

std::vector<std::uint64_t> class_pair_counts(const PairSubgroup& L) {
  const PermGroup& g = L.parent();
  const std::size_t r = g.class_count();
  std::vector<std::uint64_t> counts(r * r, 0);
  for (auto x : L.elements()) counts[g.class_of(x.left) * r + g.class_of(x.right)] += 1;
  return counts;
}

namespace {

Integer require_nonnegative_integer(const Cyclotomic& value, const std::string& what) {
  auto q = value.to_rational();
  if (!q || !is_integral(*q) || *q < 0)
    throw InconsistencyError(what + " is not a non-negative integer: " + value.to_string());
  return numerator(*q);
}

}  // namespace

Integer subgroup_average(const CharacterTable& table, std::size_t chi, std::size_t eta,
                         const PairSubgroup& L) {
  if (L.parent_ptr() != table.group_ptr() && L.parent().elements() != table.group().elements())
    throw ValidationError("subgroup and character table belong to different groups");
  const std::size_t r = table.group().class_count();
  const auto counts = class_pair_counts(L);
  const auto& a = table.row(chi).values;
  const auto& b = table.row(eta).values;
  Cyclotomic acc(table.conductor());
  for (std::size_t i = 0; i < r; ++i) {
    Cyclotomic inner(table.conductor());
    for (std::size_t j = 0; j < r; ++j)
      if (counts[i * r + j] != 0) inner += b[j].conj() * Rational(counts[i * r + j]);
    if (!inner.is_zero()) acc += a[i] * inner;
  }
  return require_nonnegative_integer(acc * Rational(1, L.order()),
                                     "average of " + table.row(chi).label + " x conj " +
                                         table.row(eta).label + " over " + L.name());
}

Cyclotomic class_function_average(const CharacterTable& table, const std::vector<Cyclotomic>& chi,
                                  std::span<const ElemId> H) {
  const PermGroup& g = table.group();
  std::vector<std::uint64_t> counts(g.class_count(), 0);
  for (ElemId h : H) counts[g.class_of(h)] += 1;
  Cyclotomic acc(table.conductor());
  for (std::size_t l = 0; l < counts.size(); ++l)
    if (counts[l] != 0) acc += chi[l] * Rational(counts[l]);
  return acc * Rational(1, H.size());
}

Integer product_subgroup_average(const CharacterTable& table, std::size_t chi, std::size_t eta,
                                 std::span<const ElemId> H1, std::span<const ElemId> H2) {
  Cyclotomic left = class_function_average(table, table.row(chi).values, H1);
  Cyclotomic right = class_function_average(table, table.row(eta).values, H2).conj();
  return require_nonnegative_integer(left * right, "product average of " + table.row(chi).label +
                                                       " x conj " + table.row(eta).label);
}

}  // namespace cartanlab
