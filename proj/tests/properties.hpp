#pragma once
// Randomized property checks shared by the unit suite and the acceptance
// runner. Each returns an empty string on success, otherwise a description
// of the first failure.

#include <random>
#include <sstream>
#include <string>

#include "cartanlab/builtins.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/character_table.hpp"

namespace props {

using namespace cartanlab;

inline const std::vector<std::string>& groups() {
  static const std::vector<std::string> g{"S3", "S4", "C6", "D4", "Q8"};
  return g;
}

inline PairSubgroup random_pair_subgroup(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g->order() - 1));
  std::vector<PairElem> gens;
  const int count = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < count; ++i) gens.push_back({pick(rng), pick(rng)});
  return PairSubgroup::generated(g, gens);
}

inline std::vector<ElemId> random_subgroup(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g->order() - 1));
  std::vector<ElemId> gens;
  const int count = static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) gens.push_back(pick(rng));
  return g->subgroup_closure(gens);
}

/// Both orthogonality relations and the degree sum, recomputed here rather
/// than trusting the table's own validation.
inline std::string table_properties(const CharacterTable& t) {
  const PermGroup& g = t.group();
  std::ostringstream err;
  Rational degrees = 0;
  for (const auto& r : t.rows()) degrees += *r.degree_value().to_rational() * *r.degree_value().to_rational();
  if (degrees != Rational(g.order())) err << g.name() << ": sum of squared degrees " << degrees;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      Cyclotomic s(t.conductor());
      for (std::size_t k = 0; k < g.class_count(); ++k)
        s += t.row(i).values[k] * t.row(j).values[k].conj() * Rational(g.classes()[k].size());
      if (s != Cyclotomic::from_rational(i == j ? g.order() : 0, t.conductor()))
        err << g.name() << ": rows " << i << "," << j << " not orthogonal; ";
    }
  for (std::size_t a = 0; a < g.class_count(); ++a)
    for (std::size_t b = 0; b < g.class_count(); ++b) {
      Cyclotomic s(t.conductor());
      for (std::size_t i = 0; i < t.size(); ++i) s += t.row(i).values[a] * t.row(i).values[b].conj();
      const Rational want = a == b ? Rational(g.centralizer_order(a)) : Rational(0);
      if (s != Cyclotomic::from_rational(want, t.conductor()))
        err << g.name() << ": columns " << a << "," << b << " not orthogonal; ";
    }
  return err.str();
}

/// Non-negativity, the dimension rule, conjugation invariance and the
/// product formula on `trials` random subgroups.
inline std::string delta_properties(const CharacterTable& t, std::uint64_t seed, int trials) {
  const GroupPtr& g = t.group_ptr();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g->order() - 1));
  std::ostringstream err;
  for (int trial = 0; trial < trials; ++trial) {
    auto L = random_pair_subgroup(g, rng);
    auto d = delta_matrix(t, L, DeltaOptions{false});
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (d.matrix.entries(i, j) < 0) err << g->name() << ": negative Delta entry; ";
    Integer dim = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        dim += numerator(*t.row(i).degree_value().to_rational()) * numerator(*t.row(j).degree_value().to_rational()) *
               d.matrix.entries(i, j);
    if (dim != Integer(g->order() * g->order() / L.order()))
      err << g->name() << ": dimension rule fails for |L| = " << L.order() << "; ";

    auto conj = L.conjugate({pick(rng), pick(rng)});
    if (!(delta_matrix(t, conj, DeltaOptions{false}).matrix == d.matrix))
      err << g->name() << ": Delta not conjugation invariant; ";

    auto h1 = random_subgroup(g, rng);
    auto h2 = random_subgroup(g, rng);
    auto prod = PairSubgroup::product(g, h1, h2);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (product_subgroup_average(t, i, j, h1, h2) != subgroup_average(t, i, j, prod))
          err << g->name() << ": product formula differs from the plain average; ";
  }
  return err.str();
}

}  // namespace props
