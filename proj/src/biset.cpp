#include "cartanlab/biset.hpp"

#include <algorithm>
#include <thread>

#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

constexpr std::size_t kActionTableLimit = std::size_t{1} << 22;

}  // namespace

Biset::Biset(GroupPtr parent, std::vector<PairSubgroup> subgroups, std::size_t point_cap)
    : parent_(std::move(parent)), blocks_(std::move(subgroups)) {
  const PermGroup& g = *parent_;
  const std::uint64_t square = static_cast<std::uint64_t>(g.order()) * g.order();
  std::uint64_t total = 0;
  for (const auto& L : blocks_) {
    if (L.parent().elements() != g.elements())
      throw ValidationError("biset block " + L.name() + " is not a subgroup of G x G for this G");
    total += square / L.order();
  }
  if (total > point_cap)
    throw SizeError("biset would have " + std::to_string(total) + " points, above the cap of " +
                    std::to_string(point_cap));

  std::vector<PairElem> moves;
  for (ElemId s : g.generator_ids()) {
    moves.push_back({s, PermGroup::identity()});
    moves.push_back({PermGroup::identity(), s});
  }

  lookup_.resize(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& L = blocks_[b];
    block_start_.push_back(points_.size());
    // orbit of the base coset L under left multiplication by G x G
    std::vector<PairElem> reps{PairElem{PermGroup::identity(), PermGroup::identity()}};
    std::unordered_map<std::uint64_t, bool> seen{{L.code(reps[0]), true}};
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (auto m : moves) {
        PairElem next = canonical(b, L.multiply(m, reps[i]));
        if (seen.emplace(L.code(next), true).second) reps.push_back(next);
      }
    }
    if (reps.size() * L.order() != square)
      throw InconsistencyError("coset enumeration for " + L.name() + " found " +
                               std::to_string(reps.size()) + " cosets");
    std::sort(reps.begin(), reps.end());
    for (auto rep : reps) {
      lookup_[b].emplace(L.code(rep), points_.size());
      points_.push_back({b, rep});
    }
  }

  if (g.order() * points_.size() <= kActionTableLimit) {
    const std::size_t n = points_.size();
    left_table_.resize(g.order() * n);
    right_table_.resize(g.order() * n);
    for (ElemId a = 0; a < g.order(); ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        const auto& p = points_[x];
        left_table_[a * n + x] = static_cast<std::uint32_t>(
            locate(p.block, {g.multiply(a, p.representative.left), p.representative.right}));
        right_table_[a * n + x] = static_cast<std::uint32_t>(
            locate(p.block, {p.representative.left, g.multiply(g.inverse(a), p.representative.right)}));
      }
    }
  }
}

PairElem Biset::canonical(std::size_t block, PairElem element) const {
  const auto& L = blocks_[block];
  PairElem best = L.multiply(element, L.elements().front());
  for (auto l : L.elements()) best = std::min(best, L.multiply(element, l));
  return best;
}

std::size_t Biset::locate(std::size_t block, PairElem element) const {
  const PairElem rep = canonical(block, element);
  return lookup_[block].at(blocks_[block].code(rep));
}

std::pair<std::size_t, std::size_t> Biset::block_range(std::size_t block) const {
  const std::size_t first = block_start_.at(block);
  const std::size_t last = block + 1 < block_start_.size() ? block_start_[block + 1] : points_.size();
  return {first, last};
}

std::size_t Biset::left(ElemId g, std::size_t x) const {
  if (!left_table_.empty()) return left_table_[g * points_.size() + x];
  const auto& p = points_[x];
  return locate(p.block, {parent_->multiply(g, p.representative.left), p.representative.right});
}

std::size_t Biset::right(std::size_t x, ElemId h) const {
  if (!right_table_.empty()) return right_table_[h * points_.size() + x];
  const auto& p = points_[x];
  return locate(p.block,
                {p.representative.left, parent_->multiply(parent_->inverse(h), p.representative.right)});
}

std::size_t Biset::act(PairElem gh, std::size_t x) const {
  return left(gh.left, right(x, parent_->inverse(gh.right)));
}

std::uint64_t Biset::fixed_points(PairElem gh) const {
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < points_.size(); ++x)
    if (act(gh, x) == x) ++count;
  return count;
}

namespace {

/// fix_X(g_i, h_j) for every pair of class representatives, row-major.
std::vector<std::uint64_t> class_fixed_points(const Biset& X, unsigned threads) {
  const PermGroup& g = X.parent();
  const std::size_t r = g.class_count();
  std::vector<std::uint64_t> fix(r * r, 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t cell = begin; cell < end; ++cell) {
      const ElemId a = g.classes()[cell / r].representative;
      const ElemId b = g.classes()[cell % r].representative;
      fix[cell] = X.fixed_points({a, b});
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || r * r < 2) {
    work(0, r * r);
    return fix;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (r * r + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(r * r, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return fix;
}

Integer multiplicity_from_fixed(const Biset& X, const CharacterTable& table,
                                const std::vector<std::uint64_t>& fix, std::size_t chi, std::size_t eta) {
  const PermGroup& g = X.parent();
  const std::size_t r = g.class_count();
  Cyclotomic acc(table.conductor());
  for (std::size_t i = 0; i < r; ++i) {
    const Cyclotomic left = table.row(chi).values[i].conj();
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t f = fix[i * r + j];
      if (f == 0) continue;
      const Rational weight = Rational(f) * g.classes()[i].size() * g.classes()[j].size();
      acc += (left * table.row(eta).values[j]) * weight;
    }
  }
  const Cyclotomic value = acc * Rational(1, static_cast<std::uint64_t>(g.order()) * g.order());
  auto q = value.to_rational();
  if (!q || !is_integral(*q) || *q < 0)
    throw InconsistencyError("permutation character multiplicity for (" + table.row(chi).label + ", " +
                             table.row(eta).label + ") is not a non-negative integer: " + value.to_string());
  return numerator(*q);
}

}  // namespace

Integer perm_char_multiplicity(const Biset& X, const CharacterTable& table, std::size_t chi,
                               std::size_t eta, unsigned threads) {
  if (X.parent().elements() != table.group().elements())
    throw ValidationError("biset and character table belong to different groups");
  if (X.size() == 0) return 0;
  return multiplicity_from_fixed(X, table, class_fixed_points(X, threads), chi, eta);
}

LabeledMatrix perm_char_matrix(const Biset& X, const CharacterTable& table, unsigned threads) {
  if (X.parent().elements() != table.group().elements())
    throw ValidationError("biset and character table belong to different groups");
  const std::size_t n = table.size();
  LabeledMatrix m{table.labels(), table.labels(), IntMatrix(n, n)};
  if (X.size() == 0) return m;
  const auto fix = class_fixed_points(X, threads);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.entries(a, b) = multiplicity_from_fixed(X, table, fix, a, b);
  return m;
}

}  // namespace cartanlab
