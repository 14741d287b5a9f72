#include "cartanlab/builtins.hpp"

#include <array>
#include <charconv>
#include <map>

#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

const std::vector<std::string> kS3Labels = {"chi_(3)", "chi_(2,1)", "chi_(1^3)"};

bool value_is(const Cyclotomic& v, long long x) { return v.is_rational() && v.to_rational() == x; }

std::optional<unsigned> parse_suffix(const std::string& name, std::size_t prefix) {
  if (name.size() <= prefix) return std::nullopt;
  unsigned n = 0;
  const char* first = name.data() + prefix;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return n;
}

// 0-based points
Permutation cycle(std::size_t degree, std::vector<Point> points) {
  for (auto& x : points) ++x;
  return Permutation::from_cycle_list({std::move(points)}, degree);
}

std::vector<Point> range(Point n) {
  std::vector<Point> out(n);
  for (Point i = 0; i < n; ++i) out[i] = i;
  return out;
}

// Q8 = {+-1, +-i, +-j, +-k} acting on itself by right multiplication.
// Point 2u + s is the unit u (0=1, 1=i, 2=j, 3=k) with sign s (0 = +).
GroupPtr quaternion_group() {
  // unit products: kTable[a][b] = {sign, unit}
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kTable = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto right_mult = [&](int unit) {
    std::vector<Point> images(8);
    for (int u = 0; u < 4; ++u)
      for (int s = 0; s < 2; ++s) {
        auto [sign, w] = kTable[u][unit];
        images[2 * u + s] = static_cast<Point>(2 * w + (s ^ sign));
      }
    return Permutation(std::move(images));
  };
  return std::make_shared<PermGroup>(8, std::vector<Permutation>{right_mult(1), right_mult(2)}, kDefaultElementCap,
                                     "Q8");
}

}  // namespace

std::optional<Labelling> match_builtin_labelling(const CharacterTable& table) {
  const PermGroup& g = table.group();
  if (g.order() != 6 || table.size() != 3) return std::nullopt;
  const auto& cls = g.classes();
  if (cls[0].size() != 1 || cls[1].size() != 3 || cls[2].size() != 2) return std::nullopt;
  const std::array<std::array<long long, 3>, 3> expected = {{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}};
  const std::array<std::string, 3> names = {"chi_(3)", "chi_(1^3)", "chi_(2,1)"};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (!value_is(table.row(r).values[c], expected[r][c])) return std::nullopt;
  return Labelling{{names.begin(), names.end()}, kS3Labels};
}

GroupPtr builtin_group(const std::string& name) {
  auto fail = [&]() -> GroupPtr {
    throw ValidationError("unknown group '" + name + "' (try trivial, C<n>, D<n>, S<n>, A<n>, Q8)");
  };
  if (name == "trivial") return std::make_shared<PermGroup>(1, std::vector<Permutation>{}, kDefaultElementCap, name);
  if (name == "Q8") return quaternion_group();
  if (name.empty()) return fail();
  auto n = parse_suffix(name, 1);
  if (!n) return fail();
  std::vector<Permutation> gens;
  std::size_t degree = *n;
  switch (name[0]) {
    case 'C':
      if (*n < 1 || *n > 10000) return fail();
      if (*n > 1) gens.push_back(cycle(degree, range(*n)));
      break;
    case 'S':
      if (*n < 1 || *n > 7) return fail();
      if (*n >= 2) gens.push_back(cycle(degree, {0, 1}));
      if (*n >= 3) gens.push_back(cycle(degree, range(*n)));
      break;
    case 'A':
      if (*n < 3 || *n > 7) return fail();
      for (Point k = 2; k < *n; ++k) gens.push_back(cycle(degree, {0, 1, k}));
      break;
    case 'D':
      if (*n < 3 || *n > 5000) return fail();
      gens.push_back(cycle(degree, range(*n)));
      {
        // reflection fixing point 1: i -> 2 - i (mod n), 1-based
        std::vector<Point> images(*n);
        for (Point i = 0; i < *n; ++i) images[i] = static_cast<Point>((*n - i) % *n);
        gens.push_back(Permutation(std::move(images)));
      }
      break;
    default:
      return fail();
  }
  return std::make_shared<PermGroup>(degree, std::move(gens), kDefaultElementCap, name);
}

std::vector<std::string> builtin_group_examples() {
  return {"trivial", "C2", "C3", "C4", "C6", "S3", "S4", "A4", "D4", "Q8"};
}

PairSubgroup builtin_subgroup(const GroupPtr& group, const std::string& name) {
  const PermGroup& g = *group;
  const auto all = g.generator_ids();
  const std::vector<ElemId> none;
  auto element = [&](std::vector<Point> points) -> ElemId {
    if (g.degree() < 3) throw ValidationError("subgroup '" + name + "' needs a group on at least 3 points");
    auto id = g.find(cycle(g.degree(), std::move(points)));
    if (!id) throw ValidationError("subgroup '" + name + "' is not defined for " + g.name());
    return *id;
  };
  if (name == "diag" || name == "La") {
    auto L = PairSubgroup::diagonal(group);
    L.set_name(name);
    return L;
  }
  if (name == "trivial") return PairSubgroup::product(group, none, none, kDefaultElementCap, name);
  if (name == "full") return PairSubgroup::product(group, all, all, kDefaultElementCap, name);
  if (name == "left") return PairSubgroup::product(group, all, none, kDefaultElementCap, name);
  if (name == "right") return PairSubgroup::product(group, none, all, kDefaultElementCap, name);
  if (name == "Lb") {
    const std::vector<ElemId> right{element({0, 1})};
    return PairSubgroup::product(group, none, right, kDefaultElementCap, name);
  }
  if (name == "Lc") {
    const std::vector<ElemId> right{element({0, 1, 2})};
    return PairSubgroup::product(group, all, right, kDefaultElementCap, name);
  }
  throw ValidationError("unknown subgroup '" + name + "'");
}

std::vector<std::string> builtin_subgroup_names() { return {"diag", "La", "Lb", "Lc", "trivial", "full", "left", "right"}; }

DecompositionMatrix builtin_decomposition(const CharacterTable& table, const std::string& name) {
  if (name == "S3-p3") {
    for (const auto& l : kS3Labels)
      if (!table.find_label(l)) throw ValidationError("decomposition S3-p3 needs the S3 character table");
    DecompositionMatrix d{3, {kS3Labels, {"psi_(3)", "psi_(2,1)"}, IntMatrix{{1, 0}, {1, 1}, {0, 1}}}};
    validate_decomposition(d, table.group().order());
    return d;
  }
  if (name.rfind("identity:", 0) == 0) {
    auto p = parse_suffix(name, 9);
    if (!p) throw ValidationError("bad prime in '" + name + "'");
    return identity_decomposition(table, *p);
  }
  throw ValidationError("unknown decomposition '" + name + "' (try S3-p3 or identity:<p>)");
}

const BuiltinConfiguration& builtin_configuration(const std::string& name) {
  static const std::map<std::string, BuiltinConfiguration> configs = [] {
    std::map<std::string, BuiltinConfiguration> out;
    BuiltinConfiguration c;
    c.name = "paper-s3";
    c.group = "S3";
    c.subgroups = {"diag", "Lb", "Lc"};
    c.z = {4, 2, 165};
    c.decomposition = "S3-p3";
    c.expected_complex = {kS3Labels, kS3Labels, IntMatrix{{172, 2, 165}, {4, 9, 0}, {2, 2, 5}}};
    const std::vector<std::string> modular = {"psi_(3)", "psi_(2,1)"};
    c.expected_modular = {modular, modular, IntMatrix{{187, 176}, {17, 16}}};
    c.det_complex = 6050;
    c.det_modular = 0;
    c.rank_modular = 1;
    out.emplace(c.name, c);
    return out;
  }();
  auto it = configs.find(name);
  if (it == configs.end()) throw ValidationError("unknown configuration '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_configuration_names() { return {"paper-s3"}; }

}  // namespace cartanlab
