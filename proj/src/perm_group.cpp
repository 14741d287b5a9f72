#include "cartanlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_set>

#include "cartanlab/error.hpp"
#include "cartanlab/numeric.hpp"

namespace cartanlab {

namespace {

constexpr std::size_t kCayleyTableLimit = 2048;

}  // namespace

std::vector<Permutation> closure(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t element_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(), elements.end());
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      Permutation p = elements[next] * g;
      if (seen.insert(p).second) {
        if (elements.size() >= element_cap)
          throw SizeError("group closure exceeds the element cap of " + std::to_string(element_cap));
        elements.push_back(std::move(p));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::size_t element_cap, std::string name)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  elements_ = closure(degree_, generators_, element_cap);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<ElemId>(i));
  build_tables();
  build_classes();
}

std::optional<ElemId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId PermGroup::index_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw ValidationError("permutation " + p.to_cycles() + " is not an element of the group");
  return *id;
}

ElemId PermGroup::multiply(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElemId PermGroup::conjugate(ElemId a, ElemId by) const {
  return multiply(multiply(inverses_[by], a), by);
}

ElemId PermGroup::power(ElemId a, std::uint64_t k) const {
  ElemId result = identity();
  ElemId base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

void PermGroup::build_tables() {
  const std::size_t n = order();
  if (n <= kCayleyTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }
  inverses_.resize(n);
  orders_.resize(n);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    inverses_[a] = index_.at(elements_[a].inverse());
    orders_[a] = elements_[a].order();
    exponent_ = lcm_u64(exponent_, orders_[a]);
  }
}

void PermGroup::build_classes() {
  const std::size_t n = order();
  const auto gens = generator_ids();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnassigned);
  std::vector<ConjugacyClass> found;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != kUnassigned) continue;
    ConjugacyClass cls{static_cast<ElemId>(x), {static_cast<ElemId>(x)}};
    class_of_[x] = found.size();
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (ElemId s : gens) {
        ElemId y = conjugate(cls.members[i], s);
        if (class_of_[y] == kUnassigned) {
          class_of_[y] = found.size();
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    found.push_back(std::move(cls));
  }

  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = found[a];
    const auto& cb = found[b];
    return std::tuple(orders_[ca.representative], ca.size(), ca.representative) <
           std::tuple(orders_[cb.representative], cb.size(), cb.representative);
  });
  std::vector<std::size_t> new_index(found.size());
  classes_.clear();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = i;
    classes_.push_back(std::move(found[perm[i]]));
  }
  for (auto& c : class_of_) c = new_index[c];
}

std::vector<ElemId> PermGroup::generator_ids() const {
  std::vector<ElemId> ids;
  ids.reserve(generators_.size());
  for (const auto& g : generators_) ids.push_back(index_.at(g));
  return ids;
}

std::vector<ElemId> PermGroup::subgroup_closure(std::span<const ElemId> gens) const {
  std::vector<ElemId> elems{identity()};
  std::vector<bool> seen(order(), false);
  seen[identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (ElemId g : gens) {
      ElemId y = multiply(elems[i], g);
      if (!seen[y]) {
        seen[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool PermGroup::is_subgroup(std::span<const ElemId> sorted_ids) const {
  if (sorted_ids.empty() || sorted_ids.front() != identity()) return false;
  std::vector<bool> in(order(), false);
  for (ElemId x : sorted_ids) in[x] = true;
  for (ElemId a : sorted_ids)
    for (ElemId b : sorted_ids)
      if (!in[multiply(a, b)]) return false;
  return true;
}

}  // namespace cartanlab
