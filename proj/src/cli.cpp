#include "cartanlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cartanlab/biset.hpp"
#include "cartanlab/builtins.hpp"
#include "cartanlab/error.hpp"
#include "cartanlab/hunt.hpp"
#include "cartanlab/io.hpp"
#include "cartanlab/monoid.hpp"

namespace cartanlab::cli {

namespace {

struct Globals {
  std::string format = "text";
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool json() const { return format == "json"; }
};

// Subgroup multiset shared by cartan, verify and monoid-check.
struct Configuration {
  GroupPtr group;
  std::string group_name;
  std::vector<PairSubgroup> subgroups;
  std::vector<std::int64_t> z;
  std::optional<std::string> decomposition;
  std::optional<LabeledMatrix> expected_complex;
  std::optional<LabeledMatrix> expected_modular;
};

const std::vector<std::string> kDefaultSubgroups = {"diag", "Lb", "Lc"};

std::vector<std::int64_t> parse_z(const std::string& text) {
  std::vector<std::int64_t> z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (v < 0) throw ValidationError("multiplicities must be non-negative, got " + item);
      z.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad multiplicity '" + item + "' in --z");
    }
  }
  return z;
}

std::vector<PairSubgroup> resolve_subgroups(const GroupPtr& group, const std::vector<std::string>& specs) {
  std::vector<PairSubgroup> out;
  for (const auto& s : specs.empty() ? kDefaultSubgroups : specs) out.push_back(load_subgroup(group, s));
  return out;
}

std::vector<std::string> row_order(const CharacterTable& table, const std::string& order) {
  if (order == "canonical" || table.display_order().empty()) return table.labels();
  return table.display_order();
}

Json group_json_name(const Configuration& c) { return c.group_name.empty() ? Json(c.group->name()) : Json(c.group_name); }

Json configuration_json(const Configuration& c) {
  Json subs = Json::array();
  for (std::size_t i = 0; i < c.subgroups.size(); ++i)
    subs.push_back({{"name", c.subgroups[i].name()}, {"order", c.subgroups[i].order()},
                    {"multiplicity", i < c.z.size() ? c.z[i] : 0}});
  Json out{{"group", group_json_name(c)}, {"group_order", c.group->order()}, {"subgroups", subs}, {"z", c.z}};
  if (c.decomposition) out["decomposition"] = *c.decomposition;
  return out;
}

Configuration load_config_file(const std::string& path) {
  const Json j = read_json_file(path);
  Configuration c;
  if (!j.contains("group")) throw ParseError(path + ": missing field 'group'");
  if (j["group"].is_string()) {
    c.group_name = j["group"].get<std::string>();
    c.group = load_group(c.group_name);
  } else {
    c.group = group_from_json(j["group"]);
  }
  if (!j.contains("subgroups") || !j["subgroups"].is_array()) throw ParseError(path + ": missing 'subgroups' list");
  for (const auto& s : j["subgroups"]) {
    const Json& spec = s.contains("spec") ? s["spec"] : s;
    if (spec.is_string())
      c.subgroups.push_back(load_subgroup(c.group, spec.get<std::string>()));
    else
      c.subgroups.push_back(subgroup_from_json(c.group, spec));
    const std::int64_t m = s.value("multiplicity", std::int64_t{1});
    if (m < 0) throw ValidationError(path + ": negative multiplicity");
    c.z.push_back(m);
  }
  if (j.contains("decomposition")) {
    if (j["decomposition"].is_string())
      c.decomposition = j["decomposition"].get<std::string>();
    else
      c.decomposition = "file:" + path;  // resolved below from the inline object
  }
  if (j.contains("expected_complex")) c.expected_complex = matrix_from_json(j["expected_complex"]);
  if (j.contains("expected_modular")) c.expected_modular = matrix_from_json(j["expected_modular"]);
  return c;
}

DecompositionMatrix resolve_decomposition(const CharacterTable& table, const std::string& spec,
                                          const std::string& config_path) {
  if (spec.rfind("file:", 0) == 0) {
    auto d = decomposition_from_json(read_json_file(config_path)["decomposition"]);
    validate_decomposition(d, table.group().order());
    return d;
  }
  return load_decomposition(table, spec);
}

Configuration builtin_config(const std::string& name) {
  const auto& b = builtin_configuration(name);
  Configuration c;
  c.group_name = b.group;
  c.group = builtin_group(b.group);
  for (const auto& s : b.subgroups) c.subgroups.push_back(builtin_subgroup(c.group, s));
  c.z = b.z;
  c.decomposition = b.decomposition;
  c.expected_complex = b.expected_complex;
  c.expected_modular = b.expected_modular;
  return c;
}

std::string z_text(const std::vector<std::string>& names, const std::vector<std::int64_t>& z) {
  std::string tuple = "(", named;
  for (std::size_t i = 0; i < z.size(); ++i) {
    tuple += (i ? "," : "") + std::to_string(z[i]);
    named += (i ? " " : "") + (i < names.size() ? names[i] : "?") + ":" + std::to_string(z[i]);
  }
  return tuple + ")  [" + named + "]";
}

std::string vector_text(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::uint64_t det_mod_p(const Integer& det, std::uint64_t p) {
  Integer r = det % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

// --- commands ---------------------------------------------------------------

struct ChartabArgs {
  std::string group;
  std::string table_file;
  std::string save;
};

int cmd_chartab(const Globals& g, const ChartabArgs& a, std::ostream& out) {
  if (a.group.empty() && a.table_file.empty()) throw ValidationError("chartab needs --group or --table");
  GroupPtr group = a.group.empty() ? nullptr : load_group(a.group);
  CharacterTable table = a.table_file.empty() ? character_table(group) : load_character_table(a.table_file, group);
  if (!a.save.empty()) write_file(a.save, character_table_to_json(table).dump(2) + "\n");
  if (g.json()) {
    Json j = character_table_to_json(table);
    Json labels = Json::object();
    for (const auto& r : table.rows()) labels[r.auto_label] = r.label;
    j["label_map"] = labels;
    if (!table.display_order().empty()) j["display_order"] = table.display_order();
    out << j.dump(2) << "\n";
  } else {
    out << character_table_to_text(table);
  }
  return kOk;
}

struct DeltaArgs {
  std::string group = "S3";
  std::string subgroup;
  std::string order = "display";
  bool no_shortcut = false;
};

int cmd_delta(const Globals& g, const DeltaArgs& a, std::ostream& out) {
  auto group = load_group(a.group);
  auto table = character_table(group);
  auto L = load_subgroup(group, a.subgroup);
  auto delta = delta_matrix(table, L, DeltaOptions{!a.no_shortcut});
  const auto m = delta.matrix.reordered(row_order(table, a.order));
  if (g.json()) {
    Json j = matrix_to_json(m);
    out << j.dump() << "\n";
  } else {
    out << "Delta(" << L.name() << ")  |L| = " << L.order() << "  index " << group->order() * group->order() / L.order()
        << "\n"
        << m.to_text();
  }
  return kOk;
}

struct CartanArgs {
  std::string group = "S3";
  std::vector<std::string> subgroups;
  std::string z;
  std::string decomp;
  std::string builtin;
  std::string config;
  std::string order = "display";
  bool uncontracted = false;
};

int cmd_cartan(const Globals& g, const CartanArgs& a, std::ostream& out) {
  Configuration c;
  if (!a.builtin.empty()) {
    c = builtin_config(a.builtin);
  } else if (!a.config.empty()) {
    c = load_config_file(a.config);
  } else {
    c.group_name = a.group;
    c.group = load_group(a.group);
    c.subgroups = resolve_subgroups(c.group, a.subgroups);
    c.z = a.z.empty() ? std::vector<std::int64_t>(c.subgroups.size(), 0) : parse_z(a.z);
  }
  if (!a.decomp.empty()) c.decomposition = a.decomp;
  if (c.z.size() != c.subgroups.size())
    throw ValidationError("--z has " + std::to_string(c.z.size()) + " entries for " +
                          std::to_string(c.subgroups.size()) + " subgroups");
  auto table = character_table(c.group);
  std::vector<DeltaMatrix> deltas;
  for (const auto& L : c.subgroups) deltas.push_back(delta_matrix(table, L));
  CartanMatrix complex = complex_cartan(deltas, c.z);
  complex.matrix = complex.matrix.reordered(row_order(table, a.order));
  std::optional<CartanMatrix> modular;
  std::optional<DecompositionMatrix> d;
  if (c.decomposition) {
    d = resolve_decomposition(table, *c.decomposition, a.config);
    modular = modular_cartan(complex, *d);
  }
  if (a.uncontracted) {
    complex = uncontracted(complex);
    if (modular) modular = uncontracted(*modular);
  }
  const Integer det_c = det_exact(complex.matrix.entries);
  std::optional<Integer> det_m;
  std::size_t rank_m = 0;
  if (modular) {
    det_m = det_exact(modular->matrix.entries);
    rank_m = rank_rational(modular->matrix.entries);
  }
  std::vector<std::string> names;
  for (const auto& L : c.subgroups) names.push_back(L.name());

  if (g.json()) {
    Json j = configuration_json(c);
    j["complex_cartan"] = matrix_to_json(complex.matrix);
    j["det_complex"] = integer_to_json(det_c);
    j["complex_verdict"] = det_c == 0 ? "singular" : "non-singular";
    if (modular) {
      j["modular_cartan"] = matrix_to_json(modular->matrix);
      j["field"] = modular->field.to_string();
      j["det_modular"] = integer_to_json(*det_m);
      j["det_modular_mod_p"] = det_mod_p(*det_m, d->prime);
      j["rank_modular"] = rank_m;
      j["modular_verdict"] = *det_m == 0 ? "singular" : "non-singular";
    }
    j["uncontracted"] = a.uncontracted;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "complex Cartan matrix" << (a.uncontracted ? " (uncontracted)" : "") << ", z = " << z_text(names, c.z)
      << "\n"
      << complex.matrix.to_text() << "det = " << det_c << "  (" << (det_c == 0 ? "singular" : "non-singular")
      << ")\n";
  if (modular) {
    out << "\nmodular Cartan matrix D^T C D, p = " << d->prime << (a.uncontracted ? " (uncontracted)" : "") << "\n"
        << modular->matrix.to_text() << "det = " << *det_m << "  (" << (*det_m == 0 ? "singular" : "non-singular")
        << ")  rank " << rank_m << "  det mod " << d->prime << " = " << det_mod_p(*det_m, d->prime) << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string builtin;
  std::string config;
  std::string group = "S3";
  std::vector<std::string> subgroups;
  std::string z;
  std::string decomp;
  bool oracle = false;
  bool no_oracle = false;
  std::size_t point_cap = kDefaultPointCap;
  std::string report;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Configuration c;
  if (!a.builtin.empty()) {
    c = builtin_config(a.builtin);
  } else if (!a.config.empty()) {
    c = load_config_file(a.config);
  } else {
    c.group_name = a.group;
    c.group = load_group(a.group);
    c.subgroups = resolve_subgroups(c.group, a.subgroups);
    if (a.z.empty()) throw ValidationError("verify needs --z, --config or --builtin");
    c.z = parse_z(a.z);
  }
  if (!a.decomp.empty()) c.decomposition = a.decomp;
  if (!c.decomposition) throw ValidationError("verify needs a decomposition matrix (--decomp)");
  if (a.oracle && a.no_oracle) throw ValidationError("--oracle and --no-oracle exclude each other");

  auto table = character_table(c.group);
  VerificationInput input;
  input.subgroups = c.subgroups;
  input.z = c.z;
  input.decomposition = resolve_decomposition(table, *c.decomposition, a.config);
  input.expected_complex = c.expected_complex;
  input.expected_modular = c.expected_modular;
  input.oracle = !a.no_oracle;
  input.point_cap = a.point_cap;
  input.threads = g.threads;
  auto report = verify_counterexample(table, input);
  if (a.oracle && !report.oracle_ran)
    report.claims.push_back({"oracle-agrees", false,
                             "biset has " + std::to_string(report.biset_points) + " points, above the cap of " +
                                 std::to_string(a.point_cap)});
  const auto order = row_order(table, "display");
  report.complex.matrix = report.complex.matrix.reordered(order);
  for (auto& d : report.deltas) d.matrix = d.matrix.reordered(order);

  const Json j = verification_report_to_json(report, configuration_json(c));
  if (!a.report.empty()) write_file(a.report, j.dump(2) + "\n");
  if (g.json()) {
    out << j.dump(2) << "\n";
  } else {
    std::vector<std::string> names;
    for (const auto& L : c.subgroups) names.push_back(L.name());
    out << "configuration: group " << group_json_name(c).get<std::string>() << ", z = " << z_text(names, c.z)
        << ", decomposition " << *c.decomposition << "\n";
    for (const auto& d : report.deltas) out << "\nDelta(" << d.subgroup << ")\n" << d.matrix.to_text();
    out << "\ncomplex Cartan matrix\n"
        << report.complex.matrix.to_text() << "det = " << report.det_complex << "\n\nmodular Cartan matrix, p = "
        << input.decomposition.prime << "\n"
        << report.modular.matrix.to_text() << "det = " << report.det_modular << "  rank " << report.rank_modular
        << "  kernel " << vector_text(report.kernel) << "\n\n";
    for (const auto& cl : report.claims)
      out << (cl.passed ? "PASS " : "FAIL ") << cl.name << ": " << cl.detail << "\n";
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  if (!report.passed()) {
    err << "verification failed\n";
    return kFailed;
  }
  return kOk;
}

struct SearchArgs {
  std::string group = "S3";
  std::string decomp;
  std::string strategy = "box";
  std::int64_t bound = 10;
  std::int64_t kernel_bound = 32;
  std::int64_t z_bound = 500;
  std::vector<std::string> subgroups;
  std::string pool = "auto";
  std::size_t max_generators = 2;
  bool all = false;
  std::string report;
  std::string order = "display";
};

int cmd_search(const Globals& g, const SearchArgs& a, std::ostream& out, std::ostream& err) {
  auto group = load_group(a.group);
  auto table = character_table(group);
  auto d = load_decomposition(table, a.decomp);

  CandidatePool pool;
  std::string pool_kind = a.pool;
  if (!a.subgroups.empty()) {
    if (a.pool == "enumerate") throw ValidationError("--pool enumerate and --subgroup exclude each other");
    pool = make_pool(table, resolve_subgroups(group, a.subgroups));
    pool_kind = "explicit";
  } else if (a.pool == "enumerate") {
    pool = enumerate_pair_subgroups(table, PoolOptions{a.max_generators});
  } else {
    try {
      pool = make_pool(table, resolve_subgroups(group, {}));
      pool_kind = "builtin";
    } catch (const ValidationError&) {
      if (a.pool == "builtin") throw;
      pool = enumerate_pair_subgroups(table, PoolOptions{a.max_generators});
      pool_kind = "enumerate";
    }
  }
  if (pool.truncated) err << "warning: candidate pool truncated: " << pool.truncation_note << "\n";

  std::vector<SearchResult> results;
  std::vector<std::string> strategies;
  if (a.strategy == "box" || a.strategy == "both") {
    BoxSearchOptions o;
    o.bound = a.bound;
    o.all = a.all;
    o.threads = g.threads;
    results.push_back(search_bruteforce(pool, d, o));
    strategies.push_back("box");
  }
  if (a.strategy == "kernel" || a.strategy == "both") {
    KernelSearchOptions o;
    o.kernel_bound = a.kernel_bound;
    o.z_bound = a.z_bound;
    o.all = a.all;
    o.threads = g.threads;
    results.push_back(search_kernel_guided(pool, d, o));
    strategies.push_back("kernel");
  }
  if (results.empty()) throw ValidationError("unknown strategy '" + a.strategy + "' (box, kernel or both)");

  const auto order = row_order(table, a.order);
  for (auto& r : results)
    for (auto& h : r.hits) h.complex.matrix = h.complex.matrix.reordered(order);

  Json reports = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json config{{"group", a.group},
                {"decomposition", a.decomp},
                {"prime", d.prime},
                {"pool", pool.names()},
                {"pool_kind", pool_kind},
                {"pool_truncated", pool.truncated},
                {"strategy", strategies[i]},
                {"all", a.all}};
    if (strategies[i] == "box") {
      config["bound"] = a.bound;
    } else {
      config["kernel_bound"] = a.kernel_bound;
      config["z_bound"] = a.z_bound;
    }
    reports.push_back(search_report_to_json(results[i], config));
  }
  const Json doc = reports.size() == 1 ? reports[0] : Json{{"searches", reports}};
  if (!a.report.empty()) write_file(a.report, doc.dump(2) + "\n");

  bool found = false;
  if (g.json()) {
    out << doc.dump(2) << "\n";
    for (const auto& r : results) found = found || r.found();
  } else {
    const auto names = pool.names();
    out << "pool (" << pool_kind << "):";
    for (const auto& n : names) out << " " << n;
    out << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      out << "\nstrategy " << strategies[i] << ": searched " << r.examined << (strategies[i] == "box" ? " z vectors, " : " kernel vectors, ")
          << (r.found() ? std::to_string(r.hits.size()) + " hit(s)" : std::string("exhausted"))
          << (r.truncated ? " (truncated)" : "") << ", " << r.seconds << " s\n";
      if (!r.found()) continue;
      found = true;
      if (a.all)
        for (const auto& h : r.hits) out << "z = " << z_text(names, h.z) << "\n";
      const auto& h = r.hits.front();
      out << "first hit z = " << z_text(names, h.z) << "\n";
      if (!h.search_vector.empty()) out << "search vector " << vector_text(h.search_vector) << "\n";
      out << "complex Cartan matrix\n"
          << h.complex.matrix.to_text() << "det = " << h.det_complex << "\nmodular Cartan matrix, p = " << d.prime
          << "\n"
          << h.modular.matrix.to_text() << "det = " << h.det_modular << "  kernel " << vector_text(h.kernel) << "\n";
    }
  }
  if (!found) {
    err << "search exhausted without a counterexample\n";
    return kExhausted;
  }
  return kOk;
}

struct MonoidArgs {
  std::string group = "S3";
  std::vector<std::string> subgroups;
  std::string z;
  std::size_t exhaustive_limit = 400;
  std::uint64_t samples = 1'000'000;
  std::string export_table;
  std::string export_json;
};

int cmd_monoid(const Globals& g, const MonoidArgs& a, std::ostream& out, std::ostream& err) {
  if (a.subgroups.empty()) throw ValidationError("monoid-check needs at least one --subgroup");
  auto group = load_group(a.group);
  auto subs = resolve_subgroups(group, a.subgroups);
  auto z = a.z.empty() ? std::vector<std::int64_t>(subs.size(), 1) : parse_z(a.z);
  if (z.size() != subs.size()) throw ValidationError("--z does not match the number of subgroups");
  std::vector<PairSubgroup> blocks;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::int64_t k = 0; k < z[i]; ++k) blocks.push_back(subs[i]);
  Biset X(group, blocks);
  Monoid m(X);
  auto axioms = check_axioms(m, AxiomOptions{a.exhaustive_limit, a.samples, g.seed});
  auto j = green_j_report(m);
  const bool orbits = non_regular_classes_are_orbits(m, j);

  if (!a.export_table.empty()) write_file(a.export_table, monoid_table_text(m));
  if (!a.export_json.empty()) write_file(a.export_json, monoid_to_json(m, X).dump(2) + "\n");

  if (g.json()) {
    Json classes = Json::array();
    for (const auto& c : j.classes) classes.push_back({{"members", c.members}, {"regular", c.regular}});
    Json doc{{"group", a.group},
             {"group_size", m.group_size()},
             {"biset_size", m.biset_size()},
             {"size", m.size()},
             {"axioms",
              {{"identity", axioms.identity_ok},
               {"zero_absorbing", axioms.zero_absorbing},
               {"biset_products_zero", axioms.biset_products_zero},
               {"group_block", axioms.group_block_ok},
               {"actions_commute", axioms.actions_commute},
               {"associative", axioms.associative},
               {"exhaustive", axioms.exhaustive},
               {"triples_checked", axioms.triples_checked},
               {"seed", g.seed},
               {"first_failure", axioms.first_failure}}},
             {"j_classes", classes},
             {"non_regular", j.non_regular_count()},
             {"non_regular_are_orbits", orbits}};
    out << doc.dump(2) << "\n";
  } else {
    auto yes = [](bool b) { return b ? "ok" : "FAILED"; };
    out << "M(G,X): |G| = " << m.group_size() << ", |X| = " << m.biset_size() << ", |M| = " << m.size() << "\n"
        << "identity            " << yes(axioms.identity_ok) << "\n"
        << "z absorbing         " << yes(axioms.zero_absorbing) << "\n"
        << "X.X = {z}           " << yes(axioms.biset_products_zero) << "\n"
        << "group block         " << yes(axioms.group_block_ok) << "\n"
        << "actions commute     " << yes(axioms.actions_commute) << "\n"
        << "associativity       " << yes(axioms.associative) << " ("
        << (axioms.exhaustive ? "exhaustive, " : "sampled, seed " + std::to_string(g.seed) + ", ")
        << axioms.triples_checked << " triples)\n"
        << "J-classes           " << j.classes.size() << ", non-regular " << j.non_regular_count() << "\n"
        << "non-regular = G x G-orbits: " << (orbits ? "yes" : "no") << "\n";
    if (!axioms.first_failure.empty()) out << "first failure: " << axioms.first_failure << "\n";
  }
  if (!axioms.ok() || !orbits) {
    err << "monoid check failed\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartan matrices of monoid algebras M(G,X) and counterexample search", "cartanlab"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for searches and oracles")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for randomized associativity sampling");

  ChartabArgs chartab;
  auto* c_chartab = app.add_subcommand("chartab", "Print the character table of a group");
  c_chartab->add_option("--group", chartab.group, "Built-in group name or group spec file");
  c_chartab->add_option("--table", chartab.table_file, "Load and validate a character table file instead");
  c_chartab->add_option("--save", chartab.save, "Write the table as JSON to this file");

  DeltaArgs delta;
  auto* c_delta = app.add_subcommand("delta", "Print Delta(L) for a subgroup L of G x G");
  c_delta->add_option("--group", delta.group, "Built-in group name or group spec file");
  c_delta->add_option("--subgroup", delta.subgroup, "Built-in subgroup name or subgroup spec file")->required();
  c_delta->add_option("--order", delta.order, "Row order")->check(CLI::IsMember({"display", "canonical"}));
  c_delta->add_flag("--no-shortcut", delta.no_shortcut, "Always average over L, even for products");

  CartanArgs cartan;
  auto* c_cartan = app.add_subcommand("cartan", "Assemble complex and modular Cartan matrices");
  c_cartan->add_option("--group", cartan.group, "Built-in group name or group spec file");
  c_cartan->add_option("--subgroup", cartan.subgroups, "Subgroups (repeatable; default diag, Lb, Lc)");
  c_cartan->add_option("--z", cartan.z, "Multiplicities, comma separated");
  c_cartan->add_option("--decomp", cartan.decomp, "Decomposition matrix: S3-p3, identity:p or a file");
  c_cartan->add_option("--builtin", cartan.builtin, "Built-in configuration (paper-s3)");
  c_cartan->add_option("--config", cartan.config, "Configuration file");
  c_cartan->add_option("--order", cartan.order, "Row order")->check(CLI::IsMember({"display", "canonical"}));
  c_cartan->add_flag("--uncontracted", cartan.uncontracted, "Append the 1x1 block of the zero apex");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Recompute and check a configuration from scratch");
  c_verify->add_option("--builtin", verify.builtin, "Built-in configuration (paper-s3)");
  c_verify->add_option("--config", verify.config, "Configuration file");
  c_verify->add_option("--group", verify.group, "Built-in group name or group spec file");
  c_verify->add_option("--subgroup", verify.subgroups, "Subgroups (repeatable; default diag, Lb, Lc)");
  c_verify->add_option("--z", verify.z, "Multiplicities, comma separated");
  c_verify->add_option("--decomp", verify.decomp, "Decomposition matrix: S3-p3, identity:p or a file");
  c_verify->add_flag("--oracle", verify.oracle, "Require the explicit biset cross-check");
  c_verify->add_flag("--no-oracle", verify.no_oracle, "Skip the explicit biset cross-check");
  c_verify->add_option("--point-cap", verify.point_cap, "Largest biset built for the cross-check");
  c_verify->add_option("--report", verify.report, "Write the JSON report to this file");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Search multiplicities for a counterexample");
  c_search->add_option("--group", search.group, "Built-in group name or group spec file");
  c_search->add_option("--decomp", search.decomp, "Decomposition matrix: S3-p3, identity:p or a file")->required();
  c_search->add_option("--strategy", search.strategy, "box, kernel or both")
      ->check(CLI::IsMember({"box", "kernel", "both"}));
  c_search->add_option("--bound", search.bound, "Box bound");
  c_search->add_option("--kernel-bound", search.kernel_bound, "Kernel vector bound");
  c_search->add_option("--z-bound", search.z_bound, "Multiplicity bound for the kernel route");
  c_search->add_option("--subgroup", search.subgroups, "Explicit pool (repeatable)");
  c_search->add_option("--pool", search.pool, "auto, builtin or enumerate")
      ->check(CLI::IsMember({"auto", "builtin", "enumerate"}));
  c_search->add_option("--max-generators", search.max_generators, "Generators per enumerated subgroup");
  c_search->add_flag("--all", search.all, "Report every hit within the bounds");
  c_search->add_option("--report", search.report, "Write the JSON report to this file");
  c_search->add_option("--order", search.order, "Row order")->check(CLI::IsMember({"display", "canonical"}));

  MonoidArgs monoid;
  auto* c_monoid = app.add_subcommand("monoid-check", "Build M(G,X) and check its structure");
  c_monoid->add_option("--group", monoid.group, "Built-in group name or group spec file");
  c_monoid->add_option("--subgroup", monoid.subgroups, "Subgroups of G x G (repeatable)");
  c_monoid->add_option("--z", monoid.z, "Multiplicities, comma separated (default 1 each)");
  c_monoid->add_option("--exhaustive-limit", monoid.exhaustive_limit, "Check every triple up to this size");
  c_monoid->add_option("--samples", monoid.samples, "Random triples above the limit");
  c_monoid->add_option("--export-table", monoid.export_table, "Write the multiplication table as text");
  c_monoid->add_option("--export-json", monoid.export_json, "Write the monoid as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c_chartab->parsed()) return cmd_chartab(g, chartab, out);
    if (c_delta->parsed()) return cmd_delta(g, delta, out);
    if (c_cartan->parsed()) return cmd_cartan(g, cartan, out);
    if (c_verify->parsed()) return cmd_verify(g, verify, out, err);
    if (c_search->parsed()) return cmd_search(g, search, out, err);
    if (c_monoid->parsed()) return cmd_monoid(g, monoid, out, err);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cartanlab::cli
