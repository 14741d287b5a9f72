#include "cartanlab/monoid.hpp"

#include <algorithm>
#include <random>

#include "cartanlab/error.hpp"

namespace cartanlab {

Monoid::Monoid(const Biset& X, std::size_t element_cap)
    : size_(X.parent().order() + X.size() + 1),
      group_size_(X.parent().order()),
      biset_size_(X.size()),
      block_count_(X.block_count()) {
  if (size_ > element_cap)
    throw SizeError("monoid would have " + std::to_string(size_) + " elements, above the table cap of " +
                    std::to_string(element_cap));
  const PermGroup& g = X.parent();
  const std::size_t n = size_;
  const auto z = static_cast<std::uint32_t>(zero());
  table_.assign(n * n, z);
  for (std::size_t a = 0; a < group_size_; ++a) {
    for (std::size_t b = 0; b < group_size_; ++b)
      table_[a * n + b] = g.multiply(static_cast<ElemId>(a), static_cast<ElemId>(b));
    for (std::size_t x = 0; x < biset_size_; ++x) {
      table_[a * n + group_size_ + x] = static_cast<std::uint32_t>(group_size_ + X.left(static_cast<ElemId>(a), x));
      table_[(group_size_ + x) * n + a] = static_cast<std::uint32_t>(group_size_ + X.right(x, static_cast<ElemId>(a)));
    }
  }
  // X.X and everything involving z stay z

  for (const auto& p : X.points()) blocks_.push_back(p.block);
  names_.reserve(n);
  for (std::size_t a = 0; a < group_size_; ++a) names_.push_back(g.element(static_cast<ElemId>(a)).to_cycles());
  for (std::size_t x = 0; x < biset_size_; ++x) {
    const auto& p = X.points()[x];
    names_.push_back("x" + std::to_string(x) + "[(" + g.element(p.representative.left).to_cycles() + "," +
                     g.element(p.representative.right).to_cycles() + ")L" + std::to_string(p.block) + "]");
  }
  names_.push_back("z");
}

Monoid::Kind Monoid::kind(std::size_t m) const {
  if (m < group_size_) return Kind::Group;
  if (m + 1 < size_) return Kind::Biset;
  return Kind::Zero;
}

AxiomReport check_axioms(const Monoid& m, const AxiomOptions& options) {
  AxiomReport r;
  const std::size_t n = m.size();
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && r.first_failure.empty()) r.first_failure = what;
    flag = false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (m.multiply(m.identity(), a) != a || m.multiply(a, m.identity()) != a)
      fail(r.identity_ok, "identity fails on " + m.describe(a));
    if (m.multiply(m.zero(), a) != m.zero() || m.multiply(a, m.zero()) != m.zero())
      fail(r.zero_absorbing, "z does not absorb " + m.describe(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ka = m.kind(a);
      const auto kb = m.kind(b);
      const auto kp = m.kind(m.multiply(a, b));
      if (ka == Monoid::Kind::Biset && kb == Monoid::Kind::Biset && kp != Monoid::Kind::Zero)
        fail(r.biset_products_zero, m.describe(a) + " * " + m.describe(b) + " is not z");
      if (ka == Monoid::Kind::Group && kb == Monoid::Kind::Group && kp != Monoid::Kind::Group)
        fail(r.group_block_ok, "G is not closed at " + m.describe(a) + " * " + m.describe(b));
    }
  }
  for (std::size_t g = 0; g < m.group_size(); ++g)
    for (std::size_t x = m.group_size(); x < m.zero(); ++x)
      for (std::size_t h = 0; h < m.group_size(); ++h)
        if (m.multiply(m.multiply(g, x), h) != m.multiply(g, m.multiply(x, h)))
          fail(r.actions_commute, "actions do not commute at " + m.describe(x));

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++r.triples_checked;
    if (m.multiply(m.multiply(a, b), c) != m.multiply(a, m.multiply(b, c)))
      fail(r.associative, "(ab)c != a(bc) for a=" + m.describe(a) + ", b=" + m.describe(b) +
                              ", c=" + m.describe(c));
  };
  if (n <= options.exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    r.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      check(a, b, pick(rng));
    }
  }
  return r;
}

std::size_t JClassReport::non_regular_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const JClass& c) { return !c.regular; }));
}

JClassReport green_j_report(const Monoid& m) {
  // Strongly connected components of x -> ax, x -> xa (iterative Tarjan).
  // Reachability from x is exactly MxM, so components are the J-classes.
  const std::size_t n = m.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kNone), low(n, 0), comp(n, kNone);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t comps = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  auto successor = [&](std::size_t v, std::size_t e) {
    return e < n ? m.multiply(e, v) : m.multiply(v, e - n);
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < 2 * n) {
        const std::size_t w = successor(f.v, f.edge++);
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }

  std::vector<JClass> classes(comps);
  for (std::size_t v = 0; v < n; ++v) classes[comp[v]].members.push_back(v);
  for (auto& c : classes) {
    const std::size_t x = c.members.front();
    for (std::size_t a = 0; a < n && !c.regular; ++a)
      if (m.multiply(m.multiply(x, a), x) == x) c.regular = true;
  }
  std::sort(classes.begin(), classes.end(),
            [](const JClass& a, const JClass& b) { return a.members.front() < b.members.front(); });
  return {std::move(classes)};
}

bool non_regular_classes_are_orbits(const Monoid& m, const JClassReport& report) {
  std::vector<std::vector<std::size_t>> orbits(m.block_count());
  for (std::size_t x = m.group_size(); x < m.zero(); ++x) orbits[m.block_of(x)].push_back(x);
  std::vector<std::vector<std::size_t>> non_regular;
  for (const auto& c : report.classes)
    if (!c.regular) non_regular.push_back(c.members);
  std::sort(orbits.begin(), orbits.end());
  std::sort(non_regular.begin(), non_regular.end());
  return orbits == non_regular;
}

}  // namespace cartanlab
