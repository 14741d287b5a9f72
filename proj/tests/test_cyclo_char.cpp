#include <doctest.h>

#include <numeric>
#include <random>

#include "cartanlab/builtins.hpp"
#include "cartanlab/character_table.hpp"
#include "cartanlab/cyclotomic.hpp"
#include "cartanlab/error.hpp"
#include "oracles.hpp"

using namespace cartanlab;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("roots of unity") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  auto one = Cyclotomic::from_rational(1, 3);
  CHECK(z3 * z3 * z3 == one);
  CHECK(one + z3 + z3 * z3 == Cyclotomic(3));
  CHECK(z3.conj() == z3 * z3);
  CHECK(z3.to_string() == "z3");
  CHECK((z3 * z3).to_string() == "z3^2");
  CHECK(Cyclotomic::root_of_unity(4, 2).to_string() == "-1");
  CHECK(Cyclotomic::root_of_unity(6, 2).to_string() == "z3");
  CHECK(Cyclotomic::from_rational(Rational(3, 4)).to_string() == "3/4");
  CHECK((-Cyclotomic::root_of_unity(4, 1)).to_string() == "-z4");
}

TEST_CASE("conductor mismatch and embedding") {
  auto a = Cyclotomic::root_of_unity(3, 1);
  auto b = Cyclotomic::root_of_unity(4, 1);
  CHECK_THROWS_AS(a + b, ValidationError);
  auto [x, y] = embed_common(a, b);
  CHECK(x.conductor() == 12);
  CHECK(y.conductor() == 12);
  CHECK((x * y) == Cyclotomic::root_of_unity(12, 7));
  CHECK(a.embed(6) == Cyclotomic::root_of_unity(6, 2));
}

TEST_CASE("random field identities") {
  std::mt19937_64 rng(7);
  for (std::uint32_t n : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> ca, cb;
      for (std::uint32_t i = 0; i < n; ++i) {
        ca.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
        cb.emplace_back(static_cast<long>(rng() % 7) - 3);
      }
      auto a = Cyclotomic::from_coefficients(n, ca);
      auto b = Cyclotomic::from_coefficients(n, cb);
      CHECK((a + b) - b == a);
      CHECK(a * b == b * a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
      CHECK((a + b).galois(n > 2 ? n - 1 : 1) == a.conj() + b.conj());
      // z * conj(z) is totally positive hence rational only when it is real
      auto nrm = a * a.conj();
      CHECK(nrm == nrm.conj());
    }
  }
}

TEST_CASE("reduction modulo a prime") {
  // 7 = 1 mod 3, 2 has order 3 mod 7
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3.reduce_mod(7, 2) == 2);
  CHECK((z3 * z3).reduce_mod(7, 2) == 4);
  CHECK(Cyclotomic::from_rational(Rational(1, 2), 3).reduce_mod(7, 2) == 4);
}

namespace {

std::vector<std::vector<long long>> integer_rows(const CharacterTable& t, const std::vector<std::string>& order) {
  std::vector<std::vector<long long>> out;
  for (const auto& l : order) {
    std::vector<long long> row;
    for (const auto& v : t.row(t.index_of_label(l)).values)
      row.push_back(static_cast<long long>(v.to_rational()->convert_to<double>()));
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("S3 character table") {
  auto g = builtin_group("S3");
  auto t = character_table(g);
  REQUIRE(t.size() == 3);
  // canonical order: degree ascending, values descending
  CHECK(t.row(0).label == "chi_(3)");
  CHECK(t.row(1).label == "chi_(1^3)");
  CHECK(t.row(2).label == "chi_(2,1)");
  CHECK(t.row(0).auto_label == "X1");
  CHECK(t.display_order() == std::vector<std::string>{"chi_(3)", "chi_(2,1)", "chi_(1^3)"});
  // classes: (), transpositions, 3-cycles
  CHECK(integer_rows(t, t.display_order()) ==
        std::vector<std::vector<long long>>{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}});
  CHECK(t.find_label("X2") == std::optional<std::size_t>(1));
  CHECK_THROWS_AS(t.index_of_label("nope"), ValidationError);
}

TEST_CASE("trivial and cyclic tables") {
  auto t1 = character_table(builtin_group("trivial"));
  CHECK(t1.size() == 1);
  CHECK(t1.row(0).values[0] == Cyclotomic::from_rational(1, t1.conductor()));

  auto g = builtin_group("C3");
  auto t = character_table(g);
  REQUIRE(t.size() == 3);
  // abelian characters are homomorphisms: chi(xy) = chi(x) chi(y)
  for (std::size_t r = 0; r < t.size(); ++r)
    for (ElemId x = 0; x < g->order(); ++x)
      for (ElemId y = 0; y < g->order(); ++y)
        CHECK(t.evaluate(r, g->multiply(x, y)).value == t.evaluate(r, x).value * t.evaluate(r, y).value);
  std::set<std::string> rendered;
  for (const auto& r : t.rows())
    for (const auto& v : r.values) rendered.insert(v.to_string());
  CHECK(rendered == std::set<std::string>{"1", "z3", "z3^2"});
}

TEST_CASE("tables of the test groups") {
  const std::vector<std::pair<const char*, std::vector<int>>> expected = {
      {"S4", {1, 1, 2, 3, 3}}, {"C6", {1, 1, 1, 1, 1, 1}}, {"D4", {1, 1, 1, 1, 2}},
      {"Q8", {1, 1, 1, 1, 2}}, {"A4", {1, 1, 1, 3}},       {"D5", {1, 1, 2, 2}}};
  for (const auto& [name, degrees] : expected) {
    auto t = character_table(builtin_group(name));
    std::vector<int> got;
    for (const auto& r : t.rows()) got.push_back(r.degree_value().to_rational()->convert_to<int>());
    CHECK_MESSAGE(got == degrees, name);
    CHECK(t.row(0).values == std::vector<Cyclotomic>(t.size(), Cyclotomic::from_rational(1, t.conductor())));
  }
}

TEST_CASE("D4 and Q8 share a table but not a group") {
  auto d4 = character_table(builtin_group("D4"));
  auto q8 = character_table(builtin_group("Q8"));
  for (std::size_t r = 0; r < d4.size(); ++r) CHECK(d4.row(r).values == q8.row(r).values);
}

TEST_CASE("inner products") {
  auto g = builtin_group("S3");
  auto t = character_table(g);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(inner_product(t, i, j) == Rational(i == j ? 1 : 0));
  // natural permutation character: fixed points per class
  std::vector<Cyclotomic> pi;
  for (const auto& c : g->classes()) {
    long fixed = 0;
    const auto& p = g->element(c.representative);
    for (Point x = 0; x < 3; ++x) fixed += p[x] == x;
    pi.push_back(Cyclotomic::from_rational(fixed, t.conductor()));
  }
  CHECK(inner_product(t, pi, t.row(t.index_of_label("chi_(2,1)")).values) == 1);
  CHECK(inner_product(t, pi, t.row(t.index_of_label("chi_(3)")).values) == 1);
  CHECK(inner_product(t, pi, t.row(t.index_of_label("chi_(1^3)")).values) == 0);
}

TEST_CASE("subgroup averages on S3") {
  auto g = builtin_group("S3");
  auto t = character_table(g);
  const auto triv = t.index_of_label("chi_(3)");
  const auto std2 = t.index_of_label("chi_(2,1)");
  const auto sign = t.index_of_label("chi_(1^3)");
  auto diag = PairSubgroup::diagonal(g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(subgroup_average(t, i, j, diag) == (i == j ? 1 : 0));
  auto lb = builtin_subgroup(g, "Lb");
  CHECK(subgroup_average(t, std2, triv, lb) == 2);
  auto trivial = builtin_subgroup(g, "trivial");
  CHECK(subgroup_average(t, std2, std2, trivial) == 4);

  const std::vector<ElemId> one{0};
  const std::vector<ElemId> t12{0, g->index_of(Permutation::from_cycles("(1,2)", 3))};
  auto c3 = g->subgroup_closure(std::vector<ElemId>{g->index_of(Permutation::from_cycles("(1,2,3)", 3))});
  std::vector<ElemId> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(product_subgroup_average(t, sign, triv, one, t12) == 1);
  CHECK(product_subgroup_average(t, triv, triv, all, c3) == 1);
  CHECK(product_subgroup_average(t, std2, std2, all, all) == 0);
}

TEST_CASE("subgroup averages agree with the literal double sum") {
  for (const char* name : {"S3", "C3", "D4"}) {
    auto g = builtin_group(name);
    auto t = character_table(g);
    std::vector<PairSubgroup> subs{PairSubgroup::diagonal(g), builtin_subgroup(g, "left"),
                                   PairSubgroup::generated(g, {{1, 1}, {0, static_cast<ElemId>(g->order() - 1)}})};
    for (const auto& L : subs)
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
          CHECK(Rational(subgroup_average(t, i, j, L)) == oracle::direct_delta(t, i, j, L));
  }
}

TEST_CASE("validation rejects corrupted tables") {
  auto g = builtin_group("S3");
  auto t = character_table(g);
  auto rows = t.rows();
  rows[1].values[2] = -rows[1].values[2];  // flip a sign in the sign character
  CHECK_THROWS_AS(validate_character_table(*g, rows), ValidationError);

  auto rows2 = t.rows();
  rows2.pop_back();
  CHECK_THROWS_AS(validate_character_table(*g, rows2), ValidationError);

  auto rows3 = t.rows();
  rows3[1].values[1] = Cyclotomic::from_rational(1, t.conductor());  // sign row made trivial
  try {
    validate_character_table(*g, rows3);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("orthogonal") != std::string::npos);
  }
}
