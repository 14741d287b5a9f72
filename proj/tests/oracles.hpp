#pragma once
// Independent reference computations used only by the tests. Everything here
// works from first principles (explicit permutations, explicit cosets,
// cofactor expansion) and deliberately avoids the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cartanlab/character_table.hpp"
#include "cartanlab/matrix.hpp"

namespace oracle {

using cartanlab::Cyclotomic;
using cartanlab::ElemId;
using cartanlab::Integer;
using cartanlab::PairElem;
using cartanlab::PairSubgroup;
using cartanlab::Permutation;
using cartanlab::PermGroup;
using cartanlab::Rational;

/// Conjugacy classes by explicit conjugation of permutations, as sets of
/// permutations.
inline std::set<std::set<Permutation>> conjugacy_classes(const std::vector<Permutation>& elements) {
  std::set<std::set<Permutation>> out;
  for (const auto& x : elements) {
    std::set<Permutation> cls;
    for (const auto& g : elements) cls.insert(g.inverse() * x * g);
    out.insert(cls);
  }
  return out;
}

/// Group closure by repeated multiplication until nothing new appears.
inline std::set<Permutation> naive_closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> s{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : gens)
        if (s.insert(a * b).second) grew = true;
  }
  return s;
}

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

/// chi(g) for a permutation, found by scanning the class representatives
/// with explicit conjugation.
inline Cyclotomic value_at(const cartanlab::CharacterTable& t, std::size_t row, const Permutation& p) {
  const PermGroup& g = t.group();
  for (std::size_t k = 0; k < g.class_count(); ++k) {
    const Permutation& rep = g.element(g.classes()[k].representative);
    for (const auto& y : g.elements())
      if (y.inverse() * rep * y == p) return t.row(row).values[k];
  }
  throw std::logic_error("element not in any class");
}

/// Delta(L)_{chi,eta} as the literal double sum 1/|L| sum chi(a) conj(eta(b)).
inline Rational direct_delta(const cartanlab::CharacterTable& t, std::size_t chi, std::size_t eta,
                             const PairSubgroup& L) {
  const PermGroup& g = t.group();
  Cyclotomic sum(t.conductor());
  for (auto x : L.elements())
    sum += value_at(t, chi, g.element(x.left)) * value_at(t, eta, g.element(x.right)).conj();
  auto q = sum.to_rational();
  if (!q) throw std::logic_error("irrational subgroup average");
  return *q / Rational(L.order());
}

/// Multiplicity of chi (x) conj(eta) in the permutation character of the
/// G x G-set built from explicit cosets (a,b)L with (g,h).(a,b)L = (ga,hb)L.
/// Several subgroups form a disjoint union.
inline Rational coset_multiplicity(const cartanlab::CharacterTable& t, std::size_t chi, std::size_t eta,
                                   const std::vector<PairSubgroup>& blocks) {
  const PermGroup& g = t.group();
  const std::size_t n = g.order();
  using Coset = std::set<std::pair<ElemId, ElemId>>;
  std::vector<std::pair<std::size_t, Coset>> points;
  std::vector<std::map<Coset, std::size_t>> index(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (ElemId a0 = 0; a0 < n; ++a0)
      for (ElemId b0 = 0; b0 < n; ++b0) {
        Coset c;
        for (auto l : blocks[b].elements()) c.insert({g.multiply(a0, l.left), g.multiply(b0, l.right)});
        if (!index[b].count(c)) {
          index[b][c] = points.size();
          points.push_back({b, c});
        }
      }
  }
  Cyclotomic total(t.conductor());
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      std::int64_t fixed = 0;
      for (const auto& [b, c] : points) {
        Coset moved;
        for (auto [u, v] : c) moved.insert({g.multiply(x, u), g.multiply(y, v)});
        if (moved == c) ++fixed;
      }
      if (fixed == 0) continue;
      total += (value_at(t, chi, g.element(x)).conj() * value_at(t, eta, g.element(y))) * Rational(fixed);
    }
  auto q = total.to_rational();
  if (!q) throw std::logic_error("irrational multiplicity");
  return *q / Rational(n * n);
}

/// Brute-force box scan on plain nested vectors: the first z (last
/// coordinate fastest) with det(D^T C D) = 0 and det C != 0.
inline std::vector<std::int64_t> first_box_hit(const std::vector<std::vector<std::vector<Integer>>>& deltas,
                                               const std::vector<std::vector<Integer>>& d, std::int64_t bound) {
  const std::size_t k = deltas.size();
  const std::size_t n = d.size();
  const std::size_t m = n ? d[0].size() : 0;
  std::vector<std::int64_t> z(k, 0);
  while (true) {
    std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      c[i][i] = 1;
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += z[l] * deltas[l][i][j];
    }
    std::vector<std::vector<Integer>> mod(m, std::vector<Integer>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) mod[a][b] += d[i][a] * c[i][j] * d[j][b];
    if (cofactor_det(mod) == 0 && cofactor_det(c) != 0) return z;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (z[pos] < bound) {
        ++z[pos];
        break;
      }
      z[pos] = 0;
      if (pos == 0) return {};
    }
    if (k == 0) return {};
  }
}

}  // namespace oracle
