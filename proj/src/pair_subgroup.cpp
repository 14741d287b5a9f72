#include "cartanlab/pair_subgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

void check_component(const PermGroup& g, ElemId id) {
  if (id >= g.order()) throw ValidationError("pair component index outside the parent group");
}

std::string describe(const PermGroup& g, PairElem x) {
  return "(" + g.element(x.left).to_cycles() + ", " + g.element(x.right).to_cycles() + ")";
}

}  // namespace

PairElem PairSubgroup::multiply(PairElem a, PairElem b) const {
  return {parent_->multiply(a.left, b.left), parent_->multiply(a.right, b.right)};
}

PairElem PairSubgroup::inverse(PairElem a) const {
  return {parent_->inverse(a.left), parent_->inverse(a.right)};
}

void PairSubgroup::index_elements() {
  std::sort(elements_.begin(), elements_.end());
  sorted_codes_.clear();
  sorted_codes_.reserve(elements_.size());
  for (auto x : elements_) sorted_codes_.push_back(code(x));
}

bool PairSubgroup::contains(PairElem x) const {
  return std::binary_search(sorted_codes_.begin(), sorted_codes_.end(), code(x));
}

PairSubgroup PairSubgroup::generated(GroupPtr parent, std::vector<PairElem> generators,
                                     std::size_t element_cap, std::string name) {
  PairSubgroup L(std::move(parent), std::move(name));
  for (auto g : generators) {
    check_component(*L.parent_, g.left);
    check_component(*L.parent_, g.right);
  }
  L.generators_ = std::move(generators);
  std::unordered_set<std::uint64_t> seen;
  PairElem one{PermGroup::identity(), PermGroup::identity()};
  L.elements_.push_back(one);
  seen.insert(L.code(one));
  for (std::size_t i = 0; i < L.elements_.size(); ++i) {
    for (auto g : L.generators_) {
      PairElem y = L.multiply(L.elements_[i], g);
      if (seen.insert(L.code(y)).second) {
        if (L.elements_.size() >= element_cap)
          throw SizeError("pair subgroup closure exceeds the element cap of " +
                          std::to_string(element_cap));
        L.elements_.push_back(y);
      }
    }
  }
  L.index_elements();
  return L;
}

PairSubgroup PairSubgroup::from_elements(GroupPtr parent, std::vector<PairElem> elements,
                                         std::string name) {
  PairSubgroup L(std::move(parent), std::move(name));
  for (auto g : elements) {
    check_component(*L.parent_, g.left);
    check_component(*L.parent_, g.right);
  }
  L.elements_ = std::move(elements);
  L.index_elements();
  L.elements_.erase(std::unique(L.elements_.begin(), L.elements_.end()), L.elements_.end());
  L.index_elements();
  if (L.elements_.empty() || !L.contains({PermGroup::identity(), PermGroup::identity()}))
    throw ValidationError("explicit element set does not contain the identity pair");
  for (auto a : L.elements_)
    for (auto b : L.elements_)
      if (!L.contains(L.multiply(a, b)))
        throw NotClosedError("element set is not closed: " + describe(*L.parent_, a) + " * " +
                                 describe(*L.parent_, b) + " = " +
                                 describe(*L.parent_, L.multiply(a, b)) + " is missing",
                             a, b);
  L.generators_ = L.elements_;
  return L;
}

PairSubgroup PairSubgroup::product(GroupPtr parent, std::span<const ElemId> left_gens,
                                   std::span<const ElemId> right_gens, std::size_t element_cap,
                                   std::string name) {
  ProductFactors f{parent->subgroup_closure(left_gens), parent->subgroup_closure(right_gens)};
  if (f.left.size() * f.right.size() > element_cap)
    throw SizeError("product subgroup exceeds the element cap of " + std::to_string(element_cap));
  PairSubgroup L(std::move(parent), std::move(name));
  for (ElemId g : left_gens) L.generators_.push_back({g, PermGroup::identity()});
  for (ElemId h : right_gens) L.generators_.push_back({PermGroup::identity(), h});
  for (ElemId a : f.left)
    for (ElemId b : f.right) L.elements_.push_back({a, b});
  L.index_elements();
  L.factors_ = std::move(f);
  return L;
}

PairSubgroup PairSubgroup::diagonal(GroupPtr parent) {
  std::vector<PairElem> gens;
  for (ElemId g : parent->generator_ids()) gens.push_back({g, g});
  return generated(std::move(parent), std::move(gens), kDefaultElementCap, "diag");
}

PairSubgroup PairSubgroup::conjugate(PairElem by) const {
  PairSubgroup L(parent_, name_.empty() ? std::string{} : name_ + "^c");
  PairElem inv = inverse(by);
  for (auto x : elements_) L.elements_.push_back(multiply(multiply(inv, x), by));
  for (auto x : generators_) L.generators_.push_back(multiply(multiply(inv, x), by));
  L.index_elements();
  if (factors_) {
    ProductFactors f;
    for (ElemId a : factors_->left) f.left.push_back(parent_->conjugate(a, by.left));
    for (ElemId b : factors_->right) f.right.push_back(parent_->conjugate(b, by.right));
    std::sort(f.left.begin(), f.left.end());
    std::sort(f.right.begin(), f.right.end());
    L.factors_ = std::move(f);
  }
  return L;
}

PairSubgroup pair_subgroup(GroupPtr parent,
                           const std::vector<std::pair<Permutation, Permutation>>& generators,
                           std::size_t element_cap, std::string name) {
  std::vector<PairElem> gens;
  gens.reserve(generators.size());
  for (const auto& [a, b] : generators) {
    auto l = parent->find(a);
    auto r = parent->find(b);
    if (!l || !r)
      throw ValidationError("pair component " + (l ? b : a).to_cycles() +
                            " is not an element of the parent group");
    gens.push_back({*l, *r});
  }
  return PairSubgroup::generated(std::move(parent), std::move(gens), element_cap, std::move(name));
}

}  // namespace cartanlab
