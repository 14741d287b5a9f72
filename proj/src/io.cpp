#include "cartanlab/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cartanlab/builtins.hpp"
#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

bool flag(const Json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_boolean() && it->get<bool>();
}

Permutation permutation_from_json(const Json& j, std::size_t degree, bool images, const std::string& what) {
  if (j.is_string()) return Permutation::from_cycles(j.get<std::string>(), degree);
  if (!j.is_array()) throw ParseError(what + ": a permutation must be a cycle string or a list");
  if (images) {
    auto v = get_as<std::vector<Point>>(j, what);
    if (v.size() != degree)
      throw ValidationError(what + ": image array of length " + std::to_string(v.size()) + " on degree " +
                            std::to_string(degree));
    return Permutation(std::move(v));
  }
  return Permutation::from_cycle_list(get_as<std::vector<std::vector<Point>>>(j, what), degree);
}

bool looks_like_path(const std::string& spec) {
  return spec.find('/') != std::string::npos || spec.ends_with(".json") || std::filesystem::exists(spec);
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(Integer(s));
      Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw ParseError(what + ": zero denominator in '" + s + "'");
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw ParseError(what + ": bad rational '" + s + "'");
    }
  }
  throw ParseError(what + ": expected an integer or an \"a/b\" string");
}

Json rational_to_json(const Rational& q) {
  if (is_integral(q)) return integer_to_json(numerator(q));
  return to_string(q);
}

Json vector_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json claim_list(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw ParseError("bad integer '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

// --- groups -----------------------------------------------------------------

GroupPtr group_from_json(const Json& j, std::string name) {
  const std::string what = "group spec";
  const auto degree = get_as<std::size_t>(field(j, "degree", what), what + " degree");
  if (degree == 0) throw ValidationError(what + ": degree must be positive");
  const bool images = flag(j, "images");
  std::vector<Permutation> gens;
  for (const auto& g : field(j, "generators", what)) gens.push_back(permutation_from_json(g, degree, images, what));
  if (name.empty() && j.contains("name")) name = get_as<std::string>(j["name"], what + " name");
  return std::make_shared<PermGroup>(degree, std::move(gens), kDefaultElementCap, std::move(name));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  Json out{{"degree", g.degree()}, {"generators", gens}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

GroupPtr load_group(const std::string& spec) {
  if (looks_like_path(spec)) {
    auto stem = std::filesystem::path(spec).stem().string();
    return group_from_json(read_json_file(spec), stem);
  }
  return builtin_group(spec);
}

// --- subgroups ----------------------------------------------------------------

PairSubgroup subgroup_from_json(const GroupPtr& group, const Json& j, std::string name) {
  const std::string what = "subgroup spec";
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  if (name.empty() && j.contains("name")) name = get_as<std::string>(j["name"], what + " name");
  const PermGroup& g = *group;
  const bool images = flag(j, "images");
  auto elem = [&](const Json& p) { return g.index_of(permutation_from_json(p, g.degree(), images, what)); };
  auto pair = [&](const Json& p) {
    if (!p.is_array() || p.size() != 2) throw ParseError(what + ": each pair must be [left, right]");
    return PairElem{elem(p[0]), elem(p[1])};
  };

  const int kinds = int(j.contains("pairs")) + int(j.contains("elements")) + int(j.contains("product"));
  if (kinds != 1) throw ParseError(what + ": give exactly one of 'pairs', 'elements', 'product'");
  if (j.contains("pairs")) {
    std::vector<PairElem> gens;
    for (const auto& p : j["pairs"]) gens.push_back(pair(p));
    return PairSubgroup::generated(group, std::move(gens), kDefaultElementCap, std::move(name));
  }
  if (j.contains("elements")) {
    if (!flag(j, "closed"))
      throw ValidationError(what + ": an 'elements' list must assert \"closed\": true");
    std::vector<PairElem> elems;
    for (const auto& p : j["elements"]) elems.push_back(pair(p));
    return PairSubgroup::from_elements(group, std::move(elems), std::move(name));
  }
  const Json& prod = j["product"];
  std::vector<ElemId> left, right;
  for (const auto& p : field(prod, "left", what + " product")) left.push_back(elem(p));
  for (const auto& p : field(prod, "right", what + " product")) right.push_back(elem(p));
  return PairSubgroup::product(group, left, right, kDefaultElementCap, std::move(name));
}

Json subgroup_to_json(const PairSubgroup& L) {
  const PermGroup& g = L.parent();
  Json pairs = Json::array();
  for (auto x : L.generators()) pairs.push_back({g.element(x.left).to_cycles(), g.element(x.right).to_cycles()});
  Json out{{"name", L.name()}, {"order", L.order()}};
  if (L.factors()) {
    Json left = Json::array(), right = Json::array();
    for (auto x : L.factors()->left) left.push_back(g.element(x).to_cycles());
    for (auto x : L.factors()->right) right.push_back(g.element(x).to_cycles());
    out["product"] = {{"left", left}, {"right", right}};
  } else {
    out["pairs"] = pairs;
  }
  return out;
}

PairSubgroup load_subgroup(const GroupPtr& group, const std::string& spec) {
  if (looks_like_path(spec)) {
    const Json j = read_json_file(spec);
    // an explicit "name" wins over the file stem
    return subgroup_from_json(group, j, j.contains("name") ? std::string{} : std::filesystem::path(spec).stem().string());
  }
  return builtin_subgroup(group, spec);
}

// --- decomposition matrices -------------------------------------------------

DecompositionMatrix decomposition_from_json(const Json& j) {
  const std::string what = "decomposition spec";
  DecompositionMatrix d;
  d.prime = get_as<std::uint64_t>(field(j, "prime", what), what + " prime");
  d.matrix.row_labels = get_as<std::vector<std::string>>(field(j, "ordinary_labels", what), what);
  d.matrix.col_labels = get_as<std::vector<std::string>>(field(j, "modular_labels", what), what);
  const Json& rows = field(j, "matrix", what);
  if (!rows.is_array() || rows.size() != d.matrix.row_labels.size())
    throw ValidationError(what + ": matrix needs one row per ordinary label");
  std::vector<std::vector<Integer>> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != d.matrix.col_labels.size())
      throw ValidationError(what + ": every row needs one entry per modular label");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    entries.push_back(std::move(r));
  }
  d.matrix.entries = entries.empty() ? IntMatrix(0, d.matrix.col_labels.size()) : IntMatrix::from_rows(entries);
  validate_decomposition(d);
  return d;
}

Json decomposition_to_json(const DecompositionMatrix& d) {
  Json rows = Json::array();
  for (const auto& r : d.matrix.entries.to_rows()) rows.push_back(vector_to_json(r));
  return {{"prime", d.prime},
          {"ordinary_labels", d.ordinary_labels()},
          {"modular_labels", d.modular_labels()},
          {"matrix", rows}};
}

DecompositionMatrix load_decomposition(const CharacterTable& table, const std::string& spec) {
  if (looks_like_path(spec)) {
    auto d = decomposition_from_json(read_json_file(spec));
    validate_decomposition(d, table.group().order());
    match_labels(table.labels(), d.ordinary_labels());
    return d;
  }
  return builtin_decomposition(table, spec);
}

// --- character tables -------------------------------------------------------

CharacterTable character_table_from_json(const Json& j, GroupPtr group) {
  const std::string what = "character table";
  const auto group_order = get_as<std::uint64_t>(field(j, "group_order", what), what + " group_order");
  const auto conductor = get_as<std::uint32_t>(field(j, "conductor", what), what + " conductor");
  if (conductor == 0) throw ValidationError(what + ": conductor must be positive");
  const auto reps = get_as<std::vector<std::string>>(field(j, "class_reps", what), what + " class_reps");
  const auto sizes = get_as<std::vector<std::uint64_t>>(field(j, "class_sizes", what), what + " class_sizes");
  if (reps.size() != sizes.size()) throw ValidationError(what + ": class_reps and class_sizes differ in length");
  const Json& rows_json = field(j, "rows", what);
  if (!rows_json.is_array()) throw ParseError(what + ": rows must be a list");

  // parse values in file class order
  std::vector<std::string> labels;
  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& r : rows_json) {
    labels.push_back(get_as<std::string>(field(r, "label", what + " row"), what + " label"));
    const Json& vals = field(r, "values", what + " row " + labels.back());
    if (!vals.is_array() || vals.size() != reps.size())
      throw ValidationError(what + ": row " + labels.back() + " needs one value per class");
    std::vector<Cyclotomic> row;
    for (const auto& v : vals) {
      if (v.is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& c : v) coeffs.push_back(rational_from_json(c, what));
        row.push_back(Cyclotomic::from_coefficients(conductor, std::move(coeffs)));
      } else {
        row.push_back(Cyclotomic::from_rational(rational_from_json(v, what), conductor));
      }
    }
    values.push_back(std::move(row));
  }

  // the identity class must come first in the file for degrees to be read
  std::size_t id_col = reps.size();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    auto s = reps[c];
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s == "()") id_col = c;
  }
  if (id_col == reps.size()) throw ValidationError(what + ": no class representative is the identity ()");
  Rational squares = 0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    auto d = values[r][id_col].to_rational();
    if (!d || !is_integral(*d) || *d <= 0)
      throw ValidationError(what + ": degree of " + labels[r] + " is not a positive integer");
    squares += *d * *d;
  }
  if (squares != Rational(group_order))
    throw ValidationError(what + ": sum of squared degrees is " + to_string(squares) + ", group_order is " +
                          std::to_string(group_order));

  if (!group) {
    std::size_t degree = 1;
    if (j.contains("degree")) {
      degree = get_as<std::size_t>(j["degree"], what + " degree");
    } else {
      for (const auto& s : reps) {
        std::string digits;
        for (char ch : s + ")") {
          if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
          } else if (!digits.empty()) {
            degree = std::max<std::size_t>(degree, std::stoul(digits));
            digits.clear();
          }
        }
      }
    }
    std::vector<Permutation> gens;
    for (const auto& s : reps) gens.push_back(Permutation::from_cycles(s, degree));
    group = std::make_shared<PermGroup>(degree, std::move(gens), kDefaultElementCap,
                                        j.value("name", std::string{}));
  }
  const PermGroup& g = *group;
  if (g.order() != group_order)
    throw ValidationError(what + ": group_order " + std::to_string(group_order) + " but the group has order " +
                          std::to_string(g.order()));
  if (reps.size() != g.class_count())
    throw ValidationError(what + ": " + std::to_string(reps.size()) + " classes listed, the group has " +
                          std::to_string(g.class_count()));

  // file column -> canonical class
  std::vector<std::size_t> column_of(g.class_count(), reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const auto id = g.find(Permutation::from_cycles(reps[c], g.degree()));
    if (!id) throw ValidationError(what + ": class representative " + reps[c] + " is not in the group");
    const std::size_t k = g.class_of(*id);
    if (column_of[k] != reps.size())
      throw ValidationError(what + ": " + reps[column_of[k]] + " and " + reps[c] + " are conjugate");
    if (g.classes()[k].size() != sizes[c])
      throw ValidationError(what + ": class of " + reps[c] + " has size " + std::to_string(g.classes()[k].size()) +
                            ", file says " + std::to_string(sizes[c]));
    column_of[k] = c;
  }

  std::vector<Character> rows;
  for (std::size_t r = 0; r < values.size(); ++r) {
    Character ch;
    ch.label = labels[r];
    for (std::size_t k = 0; k < g.class_count(); ++k) ch.values.push_back(values[r][column_of[k]]);
    rows.push_back(std::move(ch));
  }
  CharacterTable table(group, conductor, std::move(rows));
  return table;
}

Json character_table_to_json(const CharacterTable& table) {
  const PermGroup& g = table.group();
  Json reps = Json::array(), sizes = Json::array(), rows = Json::array();
  for (const auto& c : g.classes()) {
    reps.push_back(g.element(c.representative).to_cycles());
    sizes.push_back(c.size());
  }
  for (const auto& r : table.rows()) {
    Json vals = Json::array();
    for (const auto& v : r.values) {
      if (auto q = v.to_rational()) {
        vals.push_back(rational_to_json(*q));
      } else {
        Json coeffs = Json::array();
        for (const auto& c : v.coefficients()) coeffs.push_back(rational_to_json(c));
        vals.push_back(coeffs);
      }
    }
    rows.push_back({{"label", r.label}, {"values", vals}});
  }
  Json out{{"group_order", g.order()}, {"degree", g.degree()}, {"class_reps", reps},
           {"class_sizes", sizes},     {"conductor", table.conductor()}, {"rows", rows}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

CharacterTable load_character_table(const std::string& path, GroupPtr group) {
  return character_table_from_json(read_json_file(path), std::move(group));
}

std::string character_table_to_text(const CharacterTable& table) {
  const PermGroup& g = table.group();
  std::ostringstream out;
  out << "group " << (g.name().empty() ? "G" : g.name()) << "  order " << g.order() << "  classes "
      << g.class_count() << "  conductor " << table.conductor() << "\n\n";

  std::vector<std::vector<std::string>> cls{{"class", "size", "order", "representative"}};
  for (std::size_t k = 0; k < g.class_count(); ++k) {
    const auto& c = g.classes()[k];
    cls.push_back({"c" + std::to_string(k + 1), std::to_string(c.size()),
                   std::to_string(g.element_order(c.representative)), g.element(c.representative).to_cycles()});
  }
  std::vector<std::vector<std::string>> tab{{""}};
  for (std::size_t k = 0; k < g.class_count(); ++k) tab[0].push_back("c" + std::to_string(k + 1));
  for (const auto& r : table.rows()) {
    std::vector<std::string> line{r.label};
    for (const auto& v : r.values) line.push_back(v.to_string());
    tab.push_back(std::move(line));
  }
  auto render = [&](const std::vector<std::vector<std::string>>& cells, bool left_first) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string pad(width[c] - row[c].size(), ' ');
        if (c > 0) line += "  ";
        line += (c == 0 && left_first) ? row[c] + pad : pad + row[c];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  };
  render(cls, true);
  out << "\n";
  render(tab, true);
  out << "\nlabels:";
  for (const auto& r : table.rows()) out << "  " << r.auto_label << " = " << r.label;
  out << "\n";
  if (!table.display_order().empty()) {
    out << "display order:";
    for (const auto& l : table.display_order()) out << " " << l;
    out << "\n";
  }
  return out.str();
}

// --- matrices ---------------------------------------------------------------

Json matrix_to_json(const LabeledMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.entries.to_rows()) rows.push_back(vector_to_json(r));
  Json out{{"labels", m.row_labels}};
  if (m.col_labels != m.row_labels) out["col_labels"] = m.col_labels;
  out["rows"] = rows;
  return out;
}

LabeledMatrix matrix_from_json(const Json& j) {
  const std::string what = "matrix";
  LabeledMatrix m;
  m.row_labels = get_as<std::vector<std::string>>(field(j, "labels", what), what + " labels");
  m.col_labels = j.contains("col_labels") ? get_as<std::vector<std::string>>(j["col_labels"], what) : m.row_labels;
  const Json& rows = field(j, "rows", what);
  if (!rows.is_array() || rows.size() != m.row_labels.size())
    throw ValidationError(what + ": expected one row per label");
  m.entries = IntMatrix(m.row_labels.size(), m.col_labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.col_labels.size())
      throw ValidationError(what + ": row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < m.col_labels.size(); ++c) m.entries(i, c) = integer_from_json(rows[i][c]);
  }
  return m;
}

// --- monoids ----------------------------------------------------------------

std::string monoid_table_text(const Monoid& m) {
  std::ostringstream out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) out << (b ? " " : "") << m.multiply(a, b);
    out << "\n";
  }
  return out.str();
}

Json monoid_to_json(const Monoid& m, const Biset& X) {
  const PermGroup& g = X.parent();
  Json elements = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json e{{"index", i}, {"name", m.describe(i)}};
    switch (m.kind(i)) {
      case Monoid::Kind::Group:
        e["kind"] = "group";
        break;
      case Monoid::Kind::Biset: {
        const auto& p = X.points()[i - m.group_size()];
        e["kind"] = "biset";
        e["block"] = p.block;
        e["subgroup"] = X.block_subgroup(p.block).name();
        e["coset_representative"] = {g.element(p.representative.left).to_cycles(),
                                     g.element(p.representative.right).to_cycles()};
        break;
      }
      case Monoid::Kind::Zero:
        e["kind"] = "zero";
        break;
    }
    elements.push_back(std::move(e));
  }
  Json table = Json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.multiply(a, b));
    table.push_back(std::move(row));
  }
  return {{"size", m.size()},
          {"group_size", m.group_size()},
          {"biset_size", m.biset_size()},
          {"identity", m.identity()},
          {"zero", m.zero()},
          {"elements", elements},
          {"table", table}};
}

// --- reports ----------------------------------------------------------------

Json counterexample_to_json(const Counterexample& ce) {
  Json z = Json::object();
  for (std::size_t i = 0; i < ce.names.size(); ++i) z[ce.names[i]] = ce.z[i];
  Json out{{"z", ce.z},
           {"multiplicities", z},
           {"complex_cartan", matrix_to_json(ce.complex.matrix)},
           {"modular_cartan", matrix_to_json(ce.modular.matrix)},
           {"field", ce.modular.field.to_string()},
           {"det_complex", integer_to_json(ce.det_complex)},
           {"det_modular", integer_to_json(ce.det_modular)},
           {"kernel", vector_to_json(ce.kernel)}};
  if (!ce.search_vector.empty()) out["search_vector"] = vector_to_json(ce.search_vector);
  return out;
}

Json search_report_to_json(const SearchResult& result, const Json& configuration) {
  Json hits = Json::array();
  for (const auto& h : result.hits) hits.push_back(counterexample_to_json(h));
  Json out{{"configuration", configuration},
           {"found", result.found()},
           {"examined", result.examined},
           {"truncated", result.truncated},
           {"seconds", result.seconds}};
  if (result.found()) {
    const auto& first = result.hits.front();
    out["z"] = first.z;
    out["complex_cartan"] = matrix_to_json(first.complex.matrix);
    out["modular_cartan"] = matrix_to_json(first.modular.matrix);
    out["det_complex"] = integer_to_json(first.det_complex);
    out["det_modular"] = integer_to_json(first.det_modular);
    out["kernel"] = vector_to_json(first.kernel);
  }
  out["hits"] = hits;
  return out;
}

Json verification_report_to_json(const VerificationReport& report, const Json& configuration) {
  Json deltas = Json::object();
  for (const auto& d : report.deltas) deltas[d.subgroup] = matrix_to_json(d.matrix);
  return {{"configuration", configuration},
          {"passed", report.passed()},
          {"claims", claim_list(report.claims)},
          {"deltas", deltas},
          {"complex_cartan", matrix_to_json(report.complex.matrix)},
          {"modular_cartan", matrix_to_json(report.modular.matrix)},
          {"field", report.modular.field.to_string()},
          {"det_complex", integer_to_json(report.det_complex)},
          {"det_modular", integer_to_json(report.det_modular)},
          {"rank_modular", report.rank_modular},
          {"kernel", vector_to_json(report.kernel)},
          {"oracle_ran", report.oracle_ran},
          {"biset_points", report.biset_points}};
}

}  // namespace cartanlab
