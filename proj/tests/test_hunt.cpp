#include <doctest.h>

#include "cartanlab/builtins.hpp"
#include "cartanlab/error.hpp"
#include "cartanlab/hunt.hpp"
#include "oracles.hpp"

using namespace cartanlab;

namespace {

const std::vector<std::string> kPaperOrder = {"chi_(3)", "chi_(2,1)", "chi_(1^3)"};

struct S3Pool {
  GroupPtr g = builtin_group("S3");
  CharacterTable t = character_table(g);
  CandidatePool pool =
      make_pool(t, {builtin_subgroup(g, "diag"), builtin_subgroup(g, "Lb"), builtin_subgroup(g, "Lc")});
  DecompositionMatrix d3 = builtin_decomposition(t, "S3-p3");
  DecompositionMatrix d5 = builtin_decomposition(t, "identity:5");
};

std::vector<std::vector<Integer>> as_rows(const LabeledMatrix& m) { return m.entries.to_rows(); }

}  // namespace

TEST_CASE_FIXTURE(S3Pool, "default active set") {
  CHECK(default_active(pool) == std::vector<std::size_t>{0, 1, 2});
  auto p2 = make_pool(t, {builtin_subgroup(g, "full"), builtin_subgroup(g, "trivial")});
  // Delta(full) is not the identity, so it stays; so does the trivial subgroup
  CHECK(default_active(p2).size() == 2);
}

TEST_CASE_FIXTURE(S3Pool, "box search finds (0,1,6)") {
  auto r = search_bruteforce(pool, d3);
  REQUIRE(r.found());
  const auto& h = r.hits.front();
  CHECK(h.z == std::vector<std::int64_t>{0, 1, 6});
  CHECK(h.complex.matrix.reordered(kPaperOrder).entries == IntMatrix{{8, 1, 6}, {2, 3, 0}, {1, 1, 1}});
  CHECK(h.det_complex == 16);
  CHECK(h.modular.matrix.entries == IntMatrix{{14, 10}, {7, 5}});
  CHECK(h.det_modular == 0);
  CHECK(h.kernel == std::vector<Integer>{5, -7});
}

TEST_CASE_FIXTURE(S3Pool, "box search agrees with the brute-force oracle") {
  std::vector<std::vector<std::vector<Integer>>> deltas;
  for (const auto& c : pool.members) deltas.push_back(as_rows(c.delta.matrix.reordered(kPaperOrder)));
  const auto d = as_rows(d3.matrix.reordered(kPaperOrder, d3.modular_labels()));
  for (std::int64_t bound : {3, 6, 8}) {
    auto expected = oracle::first_box_hit(deltas, d, bound);
    auto r = search_bruteforce(pool, d3, BoxSearchOptions{bound});
    if (expected.empty()) {
      CHECK_FALSE(r.found());
    } else {
      REQUIRE(r.found());
      CHECK(r.hits.front().z == expected);
    }
  }
}

TEST_CASE_FIXTURE(S3Pool, "box search is independent of the thread count") {
  BoxSearchOptions o;
  o.bound = 7;
  o.all = true;
  auto one = search_bruteforce(pool, d3, o);
  o.threads = 3;
  auto three = search_bruteforce(pool, d3, o);
  REQUIRE(one.hits.size() == three.hits.size());
  for (std::size_t i = 0; i < one.hits.size(); ++i) CHECK(one.hits[i].z == three.hits[i].z);
  o.all = false;
  CHECK(search_bruteforce(pool, d3, o).hits.front().z == one.hits.front().z);
}

TEST_CASE_FIXTURE(S3Pool, "every box hit verifies") {
  BoxSearchOptions o;
  o.bound = 6;
  o.all = true;
  auto r = search_bruteforce(pool, d3, o);
  REQUIRE(r.found());
  for (const auto& h : r.hits) {
    CHECK(h.det_complex != 0);
    CHECK(h.det_modular == 0);
    VerificationInput in;
    in.subgroups = {pool.members[0].subgroup, pool.members[1].subgroup, pool.members[2].subgroup};
    in.z = h.z;
    in.decomposition = d3;
    in.oracle = false;
    CHECK(verify_counterexample(t, in).passed());
  }
}

TEST_CASE_FIXTURE(S3Pool, "kernel-guided search reaches (4,2,165)") {
  auto first = search_kernel_guided(pool, d3);
  REQUIRE(first.found());
  CHECK(first.hits.front().det_modular == 0);
  CHECK(first.hits.front().det_complex != 0);

  KernelSearchOptions o;
  o.all = true;
  auto r = search_kernel_guided(pool, d3, o);
  bool seen = false;
  for (const auto& h : r.hits)
    if (h.z == std::vector<std::int64_t>{4, 2, 165}) {
      seen = true;
      CHECK(h.search_vector == std::vector<Integer>{16, -17});
      CHECK(h.det_complex == 6050);
    }
  CHECK(seen);
  CHECK(r.hits.front().z == first.hits.front().z);
}

TEST_CASE_FIXTURE(S3Pool, "searches agree inside a common box") {
  BoxSearchOptions b;
  b.bound = 6;
  b.all = true;
  KernelSearchOptions k;
  k.kernel_bound = 150;
  k.z_bound = 6;
  k.all = true;
  auto box = search_bruteforce(pool, d3, b);
  auto ker = search_kernel_guided(pool, d3, k);
  std::set<std::vector<std::int64_t>> from_box, from_kernel;
  for (const auto& h : box.hits) from_box.insert(h.z);
  for (const auto& h : ker.hits) from_kernel.insert(h.z);
  CHECK(from_box == from_kernel);
}

TEST_CASE_FIXTURE(S3Pool, "invertible decomposition matrices exhaust") {
  CHECK_FALSE(search_bruteforce(pool, d5).found());
  CHECK_FALSE(search_kernel_guided(pool, d5, KernelSearchOptions{8, 50}).found());
}

TEST_CASE_FIXTURE(S3Pool, "empty pool exhausts") {
  CandidatePool empty;
  CHECK_FALSE(search_bruteforce(empty, d3).found());
  CHECK_FALSE(search_kernel_guided(empty, d3).found());
}

TEST_CASE_FIXTURE(S3Pool, "box work cap") {
  BoxSearchOptions o;
  o.bound = 1000;
  o.work_cap = 1000;
  CHECK_THROWS_AS(search_bruteforce(pool, d3, o), SizeError);
}

TEST_CASE_FIXTURE(S3Pool, "evaluate_candidate") {
  CHECK(evaluate_candidate(pool, d3, {4, 2, 165}).has_value());
  CHECK_FALSE(evaluate_candidate(pool, d3, {0, 0, 0}).has_value());
  CHECK_THROWS_AS(evaluate_candidate(pool, d3, {1, 2}), ValidationError);
}

TEST_CASE("pair subgroup enumeration") {
  auto trivial = character_table(builtin_group("trivial"));
  CHECK(enumerate_pair_subgroups(trivial).members.size() == 1);

  auto c2 = character_table(builtin_group("C2"));
  CHECK(enumerate_pair_subgroups(c2).members.size() == 5);

  auto g = builtin_group("S3");
  auto t = character_table(g);
  auto pool = enumerate_pair_subgroups(t);
  CHECK_FALSE(pool.truncated);
  // sorted by order; no two members conjugate (distinct Delta is not required,
  // but conjugate members would have equal Delta and equal order)
  for (std::size_t i = 1; i < pool.members.size(); ++i)
    CHECK(pool.members[i - 1].subgroup.order() <= pool.members[i].subgroup.order());
  // the three named subgroups occur up to conjugacy: match by order and Delta
  for (const char* name : {"diag", "Lb", "Lc"}) {
    auto L = builtin_subgroup(g, name);
    auto delta = delta_matrix(t, L);
    bool found = false;
    for (const auto& c : pool.members)
      if (c.subgroup.order() == L.order() && c.delta.matrix == delta.matrix) found = true;
    CHECK_MESSAGE(found, name);
  }
  auto again = enumerate_pair_subgroups(t);
  REQUIRE(again.members.size() == pool.members.size());
  for (std::size_t i = 0; i < pool.members.size(); ++i)
    CHECK(again.members[i].subgroup.elements() == pool.members[i].subgroup.elements());
}

TEST_CASE("enumeration truncation is flagged") {
  auto t = character_table(builtin_group("S3"));
  PoolOptions o;
  o.max_candidates = 4;
  auto pool = enumerate_pair_subgroups(t, o);
  CHECK(pool.truncated);
  CHECK(pool.members.size() == 4);
  CHECK_FALSE(pool.truncation_note.empty());
}

TEST_CASE_FIXTURE(S3Pool, "verification reports") {
  VerificationInput in;
  in.subgroups = {builtin_subgroup(g, "diag"), builtin_subgroup(g, "Lb"), builtin_subgroup(g, "Lc")};
  in.z = {4, 2, 165};
  in.decomposition = d3;
  const auto& cfg = builtin_configuration("paper-s3");
  in.expected_complex = cfg.expected_complex;
  in.expected_modular = cfg.expected_modular;
  auto r = verify_counterexample(t, in);
  CHECK(r.passed());
  CHECK(r.oracle_ran);
  CHECK(r.det_complex == 6050);
  CHECK(r.det_modular == 0);
  CHECK(r.rank_modular == 1);
  CHECK(r.kernel == std::vector<Integer>{16, -17});
  CHECK(r.biset_points == 4 * 6 + 2 * 18 + 165 * 2);

  in.z = {0, 0, 0};
  in.expected_complex.reset();
  in.expected_modular.reset();
  auto negative = verify_counterexample(t, in);
  CHECK_FALSE(negative.passed());
  CHECK(negative.det_modular == 3);

  in.z = {1, 1};
  CHECK_THROWS_AS(verify_counterexample(t, in), ValidationError);
}
