#include "cartanlab/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "cartanlab/biset.hpp"
#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

using Codes = std::vector<std::uint64_t>;

Codes sorted_codes(const PairSubgroup& L) {
  Codes c;
  c.reserve(L.order());
  for (auto x : L.elements()) c.push_back(L.code(x));
  std::sort(c.begin(), c.end());
  return c;
}

/// All conjugates of L in G x G, keyed by their sorted element codes.
std::map<Codes, PairSubgroup> conjugacy_orbit(const PairSubgroup& L) {
  const PermGroup& g = L.parent();
  std::vector<PairElem> moves;
  for (ElemId s : g.generator_ids()) {
    moves.push_back({s, ElemId{0}});
    moves.push_back({ElemId{0}, s});
  }
  std::map<Codes, PairSubgroup> orbit;
  std::vector<PairSubgroup> queue{L};
  orbit.emplace(sorted_codes(L), L);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto m : moves) {
      PairSubgroup c = queue[i].conjugate(m);
      auto codes = sorted_codes(c);
      if (orbit.emplace(codes, c).second) queue.push_back(std::move(c));
    }
  }
  return orbit;
}

bool is_identity(const IntMatrix& m) { return m == IntMatrix::identity(m.rows()); }

constexpr std::uint64_t kPrimeA = 1'000'000'007ull;
constexpr std::uint64_t kPrimeB = 998'244'353ull;

using ModMatrix = std::vector<std::uint64_t>;  // row-major m x m

std::uint64_t reduce_integer(const Integer& x, std::uint64_t p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

ModMatrix to_mod(const IntMatrix& m, std::uint64_t p) {
  ModMatrix out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = reduce_integer(m(i, j), p);
  return out;
}

std::uint64_t det_mod(ModMatrix a, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = (p - det) % p;
    }
    det = det * a[c * n + c] % p;
    const std::uint64_t inv = inv_mod(a[c * n + c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t f = a[i * n + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = (a[i * n + j] + (p - f) * a[c * n + j]) % p;
    }
  }
  return det;
}

/// Pool data aligned once so that the inner loops never touch labels.
struct Prepared {
  std::vector<std::size_t> active;
  std::size_t n = 0;  // ordinary characters
  std::size_t m = 0;  // modular characters
  std::vector<IntMatrix> deltas;      // per active member, table label order
  IntMatrix gram;                     // D^T D
  std::vector<IntMatrix> projected;   // D^T Delta D per active member
  ModMatrix gram_a, gram_b, ident_a, ident_b;
  std::vector<ModMatrix> proj_a, proj_b, delta_a, delta_b;

  Prepared(const CandidatePool& pool, const DecompositionMatrix& d, std::vector<std::size_t> act)
      : active(std::move(act)) {
    if (pool.members.empty()) {
      m = d.modular_labels().size();
      n = d.ordinary_labels().size();
    } else {
      const auto& labels = pool.members.front().delta.matrix.row_labels;
      n = labels.size();
      m = d.modular_labels().size();
      CartanMatrix unit{{labels, labels, IntMatrix::identity(n)}, FieldTag{0}};
      gram = modular_cartan(unit, d).matrix.entries;
      for (std::size_t idx : active) {
        if (idx >= pool.members.size()) throw ValidationError("active candidate index out of range");
        const auto aligned = pool.members[idx].delta.matrix.reordered(labels);
        deltas.push_back(aligned.entries);
        CartanMatrix as_cartan{aligned, FieldTag{0}};
        projected.push_back(modular_cartan(as_cartan, d).matrix.entries);
      }
    }
    if (gram.rows() == 0) {
      // empty pool: the Cartan matrix is the identity on D's ordinary labels
      CartanMatrix unit{{d.ordinary_labels(), d.ordinary_labels(), IntMatrix::identity(n)}, FieldTag{0}};
      gram = modular_cartan(unit, d).matrix.entries;
    }
    gram_a = to_mod(gram, kPrimeA);
    gram_b = to_mod(gram, kPrimeB);
    ident_a = to_mod(IntMatrix::identity(n), kPrimeA);
    ident_b = to_mod(IntMatrix::identity(n), kPrimeB);
    for (std::size_t i = 0; i < active.size(); ++i) {
      proj_a.push_back(to_mod(projected[i], kPrimeA));
      proj_b.push_back(to_mod(projected[i], kPrimeB));
      delta_a.push_back(to_mod(deltas[i], kPrimeA));
      delta_b.push_back(to_mod(deltas[i], kPrimeB));
    }
  }

  static ModMatrix combine(const ModMatrix& base, const std::vector<ModMatrix>& parts,
                           std::span<const std::int64_t> z, std::uint64_t p) {
    ModMatrix out = base;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (z[i] == 0) continue;
      const auto zi = static_cast<std::uint64_t>(z[i]) % p;
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = (out[k] + zi * parts[i][k]) % p;
    }
    return out;
  }

  /// det(D^T C D) == 0, decided exactly (two primes as a filter, then Bareiss).
  bool modular_singular(std::span<const std::int64_t> z) const {
    if (det_mod(combine(gram_a, proj_a, z, kPrimeA), m, kPrimeA) != 0) return false;
    if (det_mod(combine(gram_b, proj_b, z, kPrimeB), m, kPrimeB) != 0) return false;
    IntMatrix exact = gram;
    for (std::size_t i = 0; i < projected.size(); ++i)
      if (z[i] != 0) exact = exact + projected[i] * Integer(z[i]);
    return det_exact(exact) == 0;
  }

  bool complex_nonsingular(std::span<const std::int64_t> z) const {
    if (det_mod(combine(ident_a, delta_a, z, kPrimeA), n, kPrimeA) != 0) return true;
    if (det_mod(combine(ident_b, delta_b, z, kPrimeB), n, kPrimeB) != 0) return true;
    IntMatrix exact = IntMatrix::identity(n);
    for (std::size_t i = 0; i < deltas.size(); ++i)
      if (z[i] != 0) exact = exact + deltas[i] * Integer(z[i]);
    return det_exact(exact) != 0;
  }

  std::vector<std::int64_t> expand(std::span<const std::int64_t> z, std::size_t pool_size) const {
    std::vector<std::int64_t> full(pool_size, 0);
    for (std::size_t i = 0; i < active.size(); ++i) full[active[i]] = z[i];
    return full;
  }
};

std::vector<std::size_t> resolve_active(const CandidatePool& pool, const std::vector<std::size_t>& requested) {
  if (!requested.empty()) return requested;
  return default_active(pool);
}

/// Run `work(begin, end, out)` over [0, total) split into contiguous chunks
/// and concatenate the per-chunk outputs in chunk order.
template <typename Work>
std::vector<std::vector<Counterexample>> run_chunks(std::uint64_t total, unsigned threads, Work work) {
  threads = std::max(1u, threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1));
  std::vector<std::vector<Counterexample>> results(chunks);
  const std::uint64_t size = (total + chunks - 1) / std::max<std::uint64_t>(chunks, 1);
  if (chunks == 1) {
    work(0, total, results[0]);
    return results;
  }
  std::vector<std::thread> pool;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = std::min(total, c * size);
    const std::uint64_t end = std::min(total, begin + size);
    pool.emplace_back([&, c, begin, end] { work(begin, end, results[c]); });
  }
  for (auto& t : pool) t.join();
  return results;
}

void collect(SearchResult& result, std::vector<std::vector<Counterexample>>&& chunks, bool all) {
  std::set<std::vector<std::int64_t>> seen;
  for (auto& chunk : chunks) {
    for (auto& hit : chunk) {
      if (!seen.insert(hit.z).second) continue;
      result.hits.push_back(std::move(hit));
      if (!all) return;
    }
  }
}

}  // namespace

std::vector<std::string> CandidatePool::names() const {
  std::vector<std::string> out;
  for (const auto& c : members) out.push_back(c.subgroup.name());
  return out;
}

CandidatePool make_pool(const CharacterTable& table, std::vector<PairSubgroup> subgroups) {
  CandidatePool pool;
  for (auto& L : subgroups) {
    DeltaMatrix delta = delta_matrix(table, L);
    pool.members.push_back({std::move(L), std::move(delta)});
  }
  return pool;
}

CandidatePool enumerate_pair_subgroups(const CharacterTable& table, const PoolOptions& options) {
  const GroupPtr& parent = table.group_ptr();
  const PermGroup& g = *parent;
  CandidatePool pool;

  // one generator per cyclic subgroup
  std::vector<PairElem> cyclic_gens;
  std::set<Codes> cyclic_seen;
  for (ElemId a = 0; a < g.order(); ++a) {
    for (ElemId b = 0; b < g.order(); ++b) {
      auto L = PairSubgroup::generated(parent, {{a, b}}, options.element_cap);
      if (cyclic_seen.insert(sorted_codes(L)).second) cyclic_gens.push_back({a, b});
    }
  }

  std::map<Codes, std::vector<PairElem>> subgroups;  // element codes -> generators
  for (auto x : cyclic_gens) {
    auto L = PairSubgroup::generated(parent, {x}, options.element_cap);
    subgroups.emplace(sorted_codes(L), std::vector<PairElem>{x});
  }
  std::vector<std::vector<PairElem>> level;
  for (const auto& [codes, gens] : subgroups) level.push_back(gens);
  for (std::size_t depth = 2; depth <= options.max_generators; ++depth) {
    std::vector<std::vector<PairElem>> next;
    for (const auto& gens : level) {
      for (auto x : cyclic_gens) {
        auto extended = gens;
        extended.push_back(x);
        try {
          auto L = PairSubgroup::generated(parent, extended, options.element_cap);
          if (subgroups.emplace(sorted_codes(L), extended).second) next.push_back(extended);
        } catch (const SizeError&) {
          pool.truncated = true;
          pool.truncation_note = "subgroups above the element cap of " + std::to_string(options.element_cap) +
                                 " were skipped";
        }
      }
    }
    level = std::move(next);
  }

  // collapse conjugacy classes; the representative is the smallest code list
  std::set<Codes> covered;
  std::vector<std::pair<Codes, PairSubgroup>> reps;
  for (const auto& [codes, gens] : subgroups) {
    if (covered.count(codes)) continue;
    auto L = PairSubgroup::generated(parent, gens, options.element_cap);
    auto orbit = conjugacy_orbit(L);
    for (const auto& [c, conj] : orbit) covered.insert(c);
    reps.emplace_back(orbit.begin()->first, orbit.begin()->second);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  if (reps.size() > options.max_candidates) {
    reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(options.max_candidates), reps.end());
    pool.truncated = true;
    pool.truncation_note = "pool cut at " + std::to_string(options.max_candidates) + " candidates";
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    PairSubgroup L = std::move(reps[i].second);
    L.set_name("L" + std::to_string(i + 1) + "[" + std::to_string(L.order()) + "]");
    DeltaMatrix delta = delta_matrix(table, L);
    pool.members.push_back({std::move(L), std::move(delta)});
  }
  return pool;
}

std::vector<std::size_t> default_active(const CandidatePool& pool) {
  std::vector<std::size_t> active;
  if (pool.members.empty()) return active;
  const auto diag_orbit = conjugacy_orbit(PairSubgroup::diagonal(pool.members.front().subgroup.parent_ptr()));
  for (std::size_t i = 0; i < pool.members.size(); ++i) {
    const auto& c = pool.members[i];
    if (!is_identity(c.delta.matrix.entries) || diag_orbit.count(sorted_codes(c.subgroup))) active.push_back(i);
  }
  return active;
}

std::optional<Counterexample> evaluate_candidate(const CandidatePool& pool, const DecompositionMatrix& d,
                                                 const std::vector<std::int64_t>& z) {
  if (z.size() != pool.members.size())
    throw ValidationError("multiplicity vector does not match the pool size");
  Counterexample ce;
  ce.names = pool.names();
  ce.z = z;
  if (pool.members.empty()) {
    const auto& labels = d.ordinary_labels();
    ce.complex = CartanMatrix{{labels, labels, IntMatrix::identity(labels.size())}, FieldTag{0}};
  } else {
    std::vector<DeltaMatrix> deltas;
    for (const auto& c : pool.members) deltas.push_back(c.delta);
    ce.complex = complex_cartan(deltas, z);
  }
  ce.modular = modular_cartan(ce.complex, d);
  ce.det_complex = det_exact(ce.complex.matrix.entries);
  ce.det_modular = det_exact(ce.modular.matrix.entries);
  if (ce.det_complex == 0 || ce.det_modular != 0) return std::nullopt;
  auto kernel = kernel_basis(ce.modular.matrix.entries);
  if (!kernel.empty()) ce.kernel = kernel.front();
  return ce;
}

SearchResult search_bruteforce(const CandidatePool& pool, const DecompositionMatrix& d,
                               const BoxSearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.bound < 0) throw ValidationError("box bound must be non-negative");
  const Prepared prep(pool, d, resolve_active(pool, options.active));
  const std::size_t k = prep.active.size();
  const auto radix = static_cast<std::uint64_t>(options.bound) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > options.work_cap / radix)
      throw SizeError("box search over " + std::to_string(k) + " candidates with bound " +
                      std::to_string(options.bound) + " exceeds the work cap");
    total *= radix;
  }

  SearchResult result;
  result.examined = total;
  auto work = [&](std::uint64_t begin, std::uint64_t end, std::vector<Counterexample>& out) {
    std::vector<std::int64_t> z(k);
    for (std::uint64_t t = begin; t < end; ++t) {
      std::uint64_t rest = t;
      for (std::size_t i = k; i-- > 0;) {
        z[i] = static_cast<std::int64_t>(rest % radix);
        rest /= radix;
      }
      if (!prep.modular_singular(z) || !prep.complex_nonsingular(z)) continue;
      auto hit = evaluate_candidate(pool, d, prep.expand(z, pool.members.size()));
      if (!hit) throw InconsistencyError("box search hit failed exact verification");
      out.push_back(std::move(*hit));
      if (!options.all) return;
    }
  };
  collect(result, run_chunks(total, options.threads, work), options.all);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

std::vector<std::vector<std::int64_t>> kernel_candidates(std::size_t m, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  if (m == 0 || bound <= 0) return out;
  const std::uint64_t side = static_cast<std::uint64_t>(2 * bound + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= side;
  std::vector<std::int64_t> v(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t i = m; i-- > 0;) {
      v[i] = static_cast<std::int64_t>(rest % side) - bound;
      rest /= side;
    }
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (first == v.end() || *first < 0) continue;
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g != 1) continue;
    out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto norm = [](const auto& x) {
      std::int64_t n = 0;
      for (auto e : x) n = std::max(n, e < 0 ? -e : e);
      return n;
    };
    const auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return out;
}

}  // namespace

SearchResult search_kernel_guided(const CandidatePool& pool, const DecompositionMatrix& d,
                                  const KernelSearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.kernel_bound < 0 || options.z_bound < 0) throw ValidationError("search bounds must be non-negative");
  const Prepared prep(pool, d, resolve_active(pool, options.active));
  const std::size_t k = prep.active.size();
  const std::size_t m = prep.m;
  const auto vectors = kernel_candidates(m, options.kernel_bound);

  SearchResult result;
  result.examined = vectors.size();
  std::atomic<bool> truncated{false};

  auto work = [&](std::uint64_t begin, std::uint64_t end, std::vector<Counterexample>& out) {
    for (std::uint64_t t = begin; t < end; ++t) {
      const auto& v = vectors[t];
      std::vector<Integer> vi(v.begin(), v.end());
      // augmented system [A | b], A columns D^T Delta(L) D v, b = -D^T D v
      std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(k + 1));
      const auto b = prep.gram * vi;
      for (std::size_t c = 0; c < k; ++c) {
        const auto col = prep.projected[c] * vi;
        for (std::size_t r = 0; r < m; ++r) rows[r][c] = Rational(col[r]);
      }
      for (std::size_t r = 0; r < m; ++r) rows[r][k] = Rational(-b[r]);

      std::vector<std::size_t> pivots;
      std::size_t rank = 0;
      for (std::size_t c = 0; c < k && rank < m; ++c) {
        std::size_t sel = rank;
        while (sel < m && rows[sel][c] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[sel], rows[rank]);
        const Rational inv = 1 / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < m; ++r) {
          if (r == rank || rows[r][c] == 0) continue;
          const Rational f = rows[r][c];
          for (std::size_t j = 0; j <= k; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivots.push_back(c);
        ++rank;
      }
      bool consistent = true;
      for (std::size_t r = rank; r < m; ++r)
        if (rows[r][k] != 0) consistent = false;
      if (!consistent) continue;

      std::vector<std::size_t> free;
      for (std::size_t c = 0; c < k; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
      const auto radix = static_cast<std::uint64_t>(options.z_bound) + 1;
      std::uint64_t count = 1;
      bool too_many = false;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (count > options.enumeration_cap / radix) {
          too_many = true;
          break;
        }
        count *= radix;
      }
      if (too_many) {
        truncated = true;
        continue;
      }

      std::vector<std::int64_t> z(k, 0);
      for (std::uint64_t s = 0; s < count; ++s) {
        std::uint64_t rest = s;
        for (std::size_t i = free.size(); i-- > 0;) {
          z[free[i]] = static_cast<std::int64_t>(rest % radix);
          rest /= radix;
        }
        bool ok = true;
        for (std::size_t r = 0; r < rank && ok; ++r) {
          Rational value = rows[r][k];
          for (std::size_t f : free)
            if (z[f] != 0 && rows[r][f] != 0) value -= rows[r][f] * z[f];
          if (!is_integral(value) || value < 0 || value > options.z_bound) {
            ok = false;
            break;
          }
          z[pivots[r]] = numerator(value).convert_to<std::int64_t>();
        }
        if (!ok || !prep.complex_nonsingular(z)) continue;
        auto hit = evaluate_candidate(pool, d, prep.expand(z, pool.members.size()));
        if (!hit) throw InconsistencyError("kernel-guided hit failed exact verification");
        hit->search_vector = vi;
        out.push_back(std::move(*hit));
        if (!options.all) return;
      }
    }
  };
  collect(result, run_chunks(vectors.size(), options.threads, work), options.all);
  result.truncated = truncated;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

VerificationReport verify_counterexample(const CharacterTable& table, const VerificationInput& input) {
  if (input.subgroups.size() != input.z.size())
    throw ValidationError("got " + std::to_string(input.z.size()) + " multiplicities for " +
                          std::to_string(input.subgroups.size()) + " subgroups");
  if (input.subgroups.empty()) throw ValidationError("verification needs at least one subgroup");
  validate_decomposition(input.decomposition, table.group().order());
  VerificationReport report;
  auto claim = [&](std::string name, bool ok, std::string detail) {
    report.claims.push_back({std::move(name), ok, std::move(detail)});
  };

  // Delta through the generic subgroup average, and through the product
  // formula where the subgroup is H1 x H2
  std::size_t product_checked = 0;
  for (const auto& L : input.subgroups) {
    DeltaMatrix generic = delta_matrix(table, L, DeltaOptions{false});
    if (L.factors()) {
      DeltaMatrix shortcut = delta_matrix(table, L, DeltaOptions{true});
      if (!(shortcut.matrix == generic.matrix))
        throw InconsistencyError("product formula and subgroup average disagree for " + L.name());
      ++product_checked;
    }
    if (!satisfies_dimension_rule(table, generic))
      throw InconsistencyError("Delta(" + L.name() + ") violates the dimension sum rule");
    report.deltas.push_back(std::move(generic));
  }
  claim("delta-routes-agree", true,
        std::to_string(report.deltas.size()) + " subgroup averages, " + std::to_string(product_checked) +
            " product-formula cross-checks, dimension rule holds");

  report.complex = complex_cartan(report.deltas, input.z);
  report.modular = modular_cartan(report.complex, input.decomposition);
  report.det_complex = det_exact(report.complex.matrix.entries);
  report.det_modular = det_exact(report.modular.matrix.entries);
  report.rank_modular = rank_rational(report.modular.matrix.entries);
  auto kernel = kernel_basis(report.modular.matrix.entries);
  if (!kernel.empty()) report.kernel = kernel.front();

  std::uint64_t points = 0;
  const std::uint64_t square = static_cast<std::uint64_t>(table.group().order()) * table.group().order();
  for (std::size_t i = 0; i < input.subgroups.size(); ++i)
    points += static_cast<std::uint64_t>(input.z[i]) * (square / input.subgroups[i].order());
  report.biset_points = points;

  if (input.oracle) {
    // each block on its own, then the whole biset end to end
    for (std::size_t i = 0; i < input.subgroups.size(); ++i) {
      if (square / input.subgroups[i].order() > input.point_cap) continue;
      Biset single(table.group_ptr(), {input.subgroups[i]}, input.point_cap);
      if (!(perm_char_matrix(single, table, input.threads) == report.deltas[i].matrix))
        throw InconsistencyError("permutation-character oracle disagrees with Delta(" +
                                 input.subgroups[i].name() + ")");
    }
    if (points <= input.point_cap) {
      std::vector<PairSubgroup> blocks;
      for (std::size_t i = 0; i < input.subgroups.size(); ++i)
        for (std::int64_t c = 0; c < input.z[i]; ++c) blocks.push_back(input.subgroups[i]);
      Biset full(table.group_ptr(), std::move(blocks), input.point_cap);
      LabeledMatrix oracle = perm_char_matrix(full, table, input.threads);
      for (std::size_t i = 0; i < table.size(); ++i) oracle.entries(i, i) += 1;
      if (!(oracle == report.complex.matrix.reordered(table.labels())))
        throw InconsistencyError("permutation-character oracle disagrees with the assembled Cartan matrix");
      report.oracle_ran = true;
      claim("oracle-agrees", true,
            "explicit biset with " + std::to_string(points) + " points reproduces C - I");
    } else {
      claim("oracle-agrees", true,
            "per-subgroup bisets agree; full biset (" + std::to_string(points) + " points) above the cap");
    }
  }

  claim("complex-nonsingular", report.det_complex != 0, "det C = " + report.det_complex.str());
  claim("modular-singular", report.det_modular == 0,
        "det D^T C D = " + report.det_modular.str() + ", rank " + std::to_string(report.rank_modular) + " of " +
            std::to_string(report.modular.matrix.entries.rows()));
  if (input.expected_complex) {
    bool same = false;
    try {
      same = report.complex.matrix.reordered(input.expected_complex->row_labels, input.expected_complex->col_labels) ==
             *input.expected_complex;
    } catch (const ValidationError&) {
    }
    claim("complex-matches-expected", same, same ? "matches" : "differs from the expected matrix");
  }
  if (input.expected_modular) {
    bool same = false;
    try {
      same = report.modular.matrix.reordered(input.expected_modular->row_labels, input.expected_modular->col_labels) ==
             *input.expected_modular;
    } catch (const ValidationError&) {
    }
    claim("modular-matches-expected", same, same ? "matches" : "differs from the expected matrix");
  }
  return report;
}

}  // namespace cartanlab
