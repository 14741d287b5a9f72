#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/cartan.hpp"
#include "cartanlab/character_table.hpp"
#include "cartanlab/pair_subgroup.hpp"

namespace cartanlab {

struct Candidate {
  PairSubgroup subgroup;
  DeltaMatrix delta;
};

/// Subgroups of G x G, pairwise non-conjugate, each with its Delta matrix.
struct CandidatePool {
  std::vector<Candidate> members;
  bool truncated = false;  ///< some subgroups were skipped because of caps
  std::string truncation_note;

  std::vector<std::string> names() const;
};

struct PoolOptions {
  std::size_t max_generators = 2;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t max_candidates = 4096;
};

/// Brute-force subgroups of G x G generated by at most `max_generators`
/// elements, deduplicated up to conjugacy in G x G. Ordered by subgroup order,
/// then by the lexicographically smallest element list in the conjugacy class
/// (which is also the representative kept). Subgroups beyond the caps are
/// dropped and flagged in `truncated`.
CandidatePool enumerate_pair_subgroups(const CharacterTable& table, const PoolOptions& options = {});

/// A pool from explicitly chosen subgroups, in the given order.
CandidatePool make_pool(const CharacterTable& table, std::vector<PairSubgroup> subgroups);

/// Members whose Delta differs from the identity, plus the diagonal (any
/// member with Delta = I whose subgroup is conjugate to the diagonal).
std::vector<std::size_t> default_active(const CandidatePool& pool);

/// A biset (multiset of subgroups) whose complex Cartan matrix is
/// non-singular while its modular Cartan matrix is singular.
struct Counterexample {
  std::vector<std::string> names;  ///< pool member names
  std::vector<std::int64_t> z;     ///< multiplicity per pool member
  CartanMatrix complex;
  CartanMatrix modular;
  Integer det_complex;
  Integer det_modular;
  std::vector<Integer> kernel;         ///< primitive kernel vector of the modular Cartan matrix
  std::vector<Integer> search_vector;  ///< the v used by the kernel-guided search
};

struct SearchResult {
  bool found() const { return !hits.empty(); }
  std::vector<Counterexample> hits;
  std::uint64_t examined = 0;  ///< z vectors (box) or kernel vectors (kernel route)
  bool truncated = false;      ///< some part of the space was skipped because of caps
  double seconds = 0;
};

struct BoxSearchOptions {
  std::int64_t bound = 10;
  std::vector<std::size_t> active;  ///< empty: default_active()
  bool all = false;
  unsigned threads = 1;
  std::uint64_t work_cap = 200'000'000;
};

/// Scan z in [0, bound]^active lexicographically (last coordinate fastest)
/// and return the first z with det(D^T C D) = 0 and det C != 0; with `all`,
/// every such z. Hits are verified with exact arithmetic before returning.
SearchResult search_bruteforce(const CandidatePool& pool, const DecompositionMatrix& d,
                               const BoxSearchOptions& options = {});

struct KernelSearchOptions {
  std::int64_t kernel_bound = 32;
  std::int64_t z_bound = 500;
  std::vector<std::size_t> active;
  bool all = false;
  unsigned threads = 1;
  std::uint64_t enumeration_cap = 10'000'000;  ///< per kernel vector
};

/// For each primitive v in [-K, K]^m (first non-zero entry positive, ordered
/// by max-norm then lexicographically) solve
///   sum_L z_L D^T Delta(L) D v = -D^T D v
/// for integers 0 <= z_L <= z_bound by exact elimination and enumeration of
/// the free coordinates; keep solutions with det C != 0.
SearchResult search_kernel_guided(const CandidatePool& pool, const DecompositionMatrix& d,
                                  const KernelSearchOptions& options = {});

/// Assemble and check one z over a pool. Returns nullopt unless det C != 0
/// and det D^T C D = 0.
std::optional<Counterexample> evaluate_candidate(const CandidatePool& pool, const DecompositionMatrix& d,
                                                 const std::vector<std::int64_t>& z);

struct Claim {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationInput {
  std::vector<PairSubgroup> subgroups;
  std::vector<std::int64_t> z;
  DecompositionMatrix decomposition;
  std::optional<LabeledMatrix> expected_complex;
  std::optional<LabeledMatrix> expected_modular;
  bool oracle = true;  ///< cross-check with explicit coset bisets when they fit the cap
  std::size_t point_cap = 50000;
  unsigned threads = 1;
};

struct VerificationReport {
  std::vector<Claim> claims;
  std::vector<DeltaMatrix> deltas;
  CartanMatrix complex;
  CartanMatrix modular;
  Integer det_complex;
  Integer det_modular;
  std::size_t rank_modular = 0;
  std::vector<Integer> kernel;
  bool oracle_ran = false;
  std::uint64_t biset_points = 0;

  bool passed() const;
};

/// Recompute everything from scratch and report each claim. Disagreement
/// between the independent Delta routes raises InconsistencyError.
VerificationReport verify_counterexample(const CharacterTable& table, const VerificationInput& input);

}  // namespace cartanlab
