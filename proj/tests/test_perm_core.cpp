#include <doctest.h>

#include "cartanlab/builtins.hpp"
#include "cartanlab/error.hpp"
#include "cartanlab/pair_subgroup.hpp"
#include "cartanlab/perm_group.hpp"
#include "oracles.hpp"

using namespace cartanlab;

TEST_CASE("permutation parsing and printing") {
  auto p = Permutation::from_cycles("(1,2,3)", 3);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p.to_cycles() == "(1,2,3)");
  CHECK(Permutation::from_cycles("(1 2 3)", 3) == p);
  CHECK(Permutation::from_cycles("()", 4).is_identity());
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK(Permutation::from_cycles("(1,2)(3,4)", 4).order() == 2);
  CHECK(p.order() == 3);
  CHECK(p * p.inverse() == Permutation::identity(3));
}

TEST_CASE("permutation product applies the left factor first") {
  auto a = Permutation::from_cycles("(1,2)", 3);
  auto b = Permutation::from_cycles("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)[0] == 2);
}

TEST_CASE("bad permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,4)", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,1)", 3), Error);
}

TEST_CASE("closure sizes") {
  std::vector<Permutation> s3{Permutation::from_cycles("(1,2)", 3), Permutation::from_cycles("(1,2,3)", 3)};
  auto els = closure(3, s3);
  CHECK(els.size() == 6);
  CHECK(els.front().is_identity());
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(closure(3, std::span<const Permutation>{}).size() == 1);
  std::vector<Permutation> s5{Permutation::from_cycles("(1,2)", 5), Permutation::from_cycles("(1,2,3,4,5)", 5)};
  CHECK_THROWS_AS(closure(5, s5, 100), SizeError);
  std::vector<Permutation> mixed{Permutation::from_cycles("(1,2)", 3), Permutation::from_cycles("(1,2)", 4)};
  CHECK_THROWS_AS(closure(3, mixed), ValidationError);
}

TEST_CASE("closure agrees with the naive oracle") {
  for (const char* name : {"S3", "S4", "C6", "D4", "Q8", "A4"}) {
    auto g = builtin_group(name);
    auto naive = oracle::naive_closure(g->generators(), g->degree());
    CHECK(std::vector<Permutation>(naive.begin(), naive.end()) == g->elements());
  }
}

TEST_CASE("group orders of the built-ins") {
  CHECK(builtin_group("trivial")->order() == 1);
  CHECK(builtin_group("C2")->order() == 2);
  CHECK(builtin_group("C6")->order() == 6);
  CHECK(builtin_group("S3")->order() == 6);
  CHECK(builtin_group("S4")->order() == 24);
  CHECK(builtin_group("A4")->order() == 12);
  CHECK(builtin_group("D4")->order() == 8);
  CHECK(builtin_group("D5")->order() == 10);
  CHECK(builtin_group("Q8")->order() == 8);
  CHECK_THROWS_AS(builtin_group("S9"), ValidationError);
  CHECK_THROWS_AS(builtin_group("foo"), ValidationError);
}

TEST_CASE("Q8 is not D4") {
  // Q8 has a single involution, D4 has five
  auto count_involutions = [](const PermGroup& g) {
    int n = 0;
    for (ElemId x = 0; x < g.order(); ++x) n += g.element_order(x) == 2;
    return n;
  };
  CHECK(count_involutions(*builtin_group("Q8")) == 1);
  CHECK(count_involutions(*builtin_group("D4")) == 5);
}

TEST_CASE("conjugacy classes agree with explicit conjugation") {
  for (const char* name : {"S3", "S4", "C6", "D4", "Q8"}) {
    auto g = builtin_group(name);
    auto expected = oracle::conjugacy_classes(g->elements());
    std::set<std::set<Permutation>> got;
    for (const auto& c : g->classes()) {
      std::set<Permutation> s;
      for (auto x : c.members) s.insert(g->element(x));
      got.insert(s);
      CHECK(c.representative == *std::min_element(c.members.begin(), c.members.end()));
    }
    CHECK(got == expected);
  }
}

TEST_CASE("class order is by element order, then size") {
  auto g = builtin_group("S3");
  REQUIRE(g->class_count() == 3);
  CHECK(g->classes()[0].size() == 1);
  CHECK(g->classes()[1].size() == 3);
  CHECK(g->classes()[2].size() == 2);
  CHECK(g->exponent() == 6);
  auto s4 = builtin_group("S4");
  CHECK(s4->class_count() == 5);
  CHECK(s4->exponent() == 12);
}

TEST_CASE("group element arithmetic") {
  auto g = builtin_group("S4");
  for (ElemId a = 0; a < g->order(); a += 5)
    for (ElemId b = 0; b < g->order(); b += 3) {
      CHECK(g->element(g->multiply(a, b)) == g->element(a) * g->element(b));
      CHECK(g->element(g->conjugate(a, b)) == g->element(b).inverse() * g->element(a) * g->element(b));
    }
  CHECK(g->multiply(3, g->inverse(3)) == PermGroup::identity());
  CHECK(g->power(5, g->element_order(5)) == PermGroup::identity());
  CHECK_THROWS_AS(g->index_of(Permutation::from_cycles("(1,2)", 5)), ValidationError);
}

TEST_CASE("pair subgroups") {
  auto g = builtin_group("S3");
  auto diag = PairSubgroup::diagonal(g);
  CHECK(diag.order() == 6);
  CHECK(diag.name() == "diag");
  auto lb = builtin_subgroup(g, "Lb");
  CHECK(lb.order() == 2);
  auto lc = builtin_subgroup(g, "Lc");
  CHECK(lc.order() == 18);
  CHECK(lc.factors().has_value());
  CHECK(builtin_subgroup(g, "full").order() == 36);
  CHECK(builtin_subgroup(g, "trivial").order() == 1);

  auto t = g->index_of(Permutation::from_cycles("(1,2)", 3));
  CHECK(lb.contains({0, t}));
  CHECK_FALSE(lb.contains({t, 0}));

  // the same subgroup from generators and from elements
  auto gen = PairSubgroup::generated(g, {{0, t}});
  auto els = PairSubgroup::from_elements(g, {{0, 0}, {0, t}});
  CHECK(gen.elements() == lb.elements());
  CHECK(els.elements() == lb.elements());
}

TEST_CASE("non-closed element lists carry a witness") {
  auto g = builtin_group("S3");
  auto c3 = g->index_of(Permutation::from_cycles("(1,2,3)", 3));
  try {
    PairSubgroup::from_elements(g, {{0, 0}, {c3, 0}});
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK_FALSE(std::string(e.what()).empty());
    auto prod = PairElem{g->multiply(e.witness_left().left, e.witness_right().left),
                         g->multiply(e.witness_left().right, e.witness_right().right)};
    CHECK(prod != PairElem{0, 0});
    CHECK(prod != PairElem{c3, 0});
  }
}

TEST_CASE("pair subgroup from permutations outside G is rejected") {
  auto g = builtin_group("C3");
  std::vector<std::pair<Permutation, Permutation>> gens{
      {Permutation::from_cycles("(1,2)", 3), Permutation::identity(3)}};
  CHECK_THROWS_AS(pair_subgroup(g, gens), ValidationError);
}

TEST_CASE("conjugating a pair subgroup") {
  auto g = builtin_group("S3");
  auto lb = builtin_subgroup(g, "Lb");
  auto c3 = g->index_of(Permutation::from_cycles("(1,2,3)", 3));
  auto conj = lb.conjugate({0, c3});
  CHECK(conj.order() == 2);
  CHECK(conj.elements() != lb.elements());
  for (auto x : conj.elements()) CHECK(x.left == 0);
}

TEST_CASE("anti-diagonal element set is not a subgroup of S3 x S3") {
  auto g = builtin_group("S3");
  std::vector<PairElem> anti;
  for (ElemId x = 0; x < g->order(); ++x) anti.push_back({x, g->inverse(x)});
  CHECK_THROWS_AS(PairSubgroup::from_elements(g, anti), NotClosedError);
  // for an abelian group the same set is closed
  auto c3 = builtin_group("C3");
  std::vector<PairElem> anti3;
  for (ElemId x = 0; x < c3->order(); ++x) anti3.push_back({x, c3->inverse(x)});
  CHECK(PairSubgroup::from_elements(c3, anti3).order() == 3);
}

TEST_CASE("exponents and abelian classes") {
  CHECK(builtin_group("trivial")->exponent() == 1);
  CHECK(builtin_group("S3")->exponent() == 6);
  CHECK(builtin_group("Q8")->exponent() == 4);
  auto c4 = builtin_group("C4");
  CHECK(c4->class_count() == 4);
  for (const auto& c : c4->classes()) CHECK(c.size() == 1);
  CHECK(builtin_group("trivial")->class_count() == 1);
}

TEST_CASE("closure ignores generator order and diagonals have order |G|") {
  for (const char* name : {"S3", "S4", "C6", "D4", "Q8"}) {
    auto g = builtin_group(name);
    auto gens = g->generators();
    std::reverse(gens.begin(), gens.end());
    CHECK(closure(g->degree(), gens) == g->elements());
    CHECK(PairSubgroup::diagonal(g).order() == g->order());
    std::size_t total = 0;
    for (const auto& c : g->classes()) {
      CHECK(g->order() % c.size() == 0);
      total += c.size();
    }
    CHECK(total == g->order());
  }
}
