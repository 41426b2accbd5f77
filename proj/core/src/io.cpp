#include "esnkit/io.hpp"

#include <json.hpp>

#include "esnkit/error.hpp"

namespace esnkit::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& reason) {
  throw ValidationError("SchemaError", path + ": " + reason);
}

void check_keys(const json& j, const std::string& path, std::vector<std::string> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      schema_error(path, "unknown field \"" + key + "\"");
}

std::vector<std::string> read_names(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a nonempty array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) schema_error(path, "expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Idx read_index(const json& j, const std::string& path, int bound) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v >= bound) schema_error(path, "index out of range");
  return static_cast<Idx>(v);
}

std::vector<Idx> read_index_vector(const json& j, const std::string& path, int length, int bound) {
  if (!j.is_array() || static_cast<int>(j.size()) != length)
    schema_error(path, "expected an array of length " + std::to_string(length));
  std::vector<Idx> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(read_index(j[i], path + "[" + std::to_string(i) + "]", bound));
  return out;
}

IdxTable read_total_table(const json& j, const std::string& path, int rows, int cols, int bound) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    schema_error(path, "expected " + std::to_string(rows) + " rows");
  IdxTable t(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      schema_error(path, "row " + std::to_string(r) + " must have " + std::to_string(cols) +
                             " entries");
    for (int c = 0; c < cols; ++c)
      t(r, c) = read_index(row[c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                           bound);
  }
  return t;
}

IdxTable read_partial_table(const json& j, const std::string& path, int rows, int cols,
                            int bound) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    schema_error(path, "expected " + std::to_string(rows) + " rows");
  IdxTable t(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      schema_error(path, "row " + std::to_string(r) + " must have " + std::to_string(cols) +
                             " entries");
    for (int c = 0; c < cols; ++c) {
      if (row[c].is_null()) continue;
      t(r, c) = read_index(row[c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                           bound);
    }
  }
  return t;
}

BoolMatrix read_bool_matrix(const json& j, const std::string& path, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    schema_error(path, "expected " + std::to_string(rows) + " rows");
  BoolMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      schema_error(path, "row " + std::to_string(r) + " must have " + std::to_string(cols) +
                             " entries");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_boolean()) schema_error(path, "expected booleans");
      m.set(r, c, row[c].get<bool>());
    }
  }
  return m;
}

SemigroupData read_semigroup(const json& j, const std::string& path) {
  check_keys(j, path, {"kind", "elements", "table", "zero"});
  SemigroupData d;
  if (!j.contains("elements") || !j.contains("table")) schema_error(path, "missing field");
  d.elements = read_names(j.at("elements"), path + ".elements");
  const int n = static_cast<int>(d.elements.size());
  d.table = read_total_table(j.at("table"), path + ".table", n, n, n);
  if (j.contains("zero")) d.zero = read_index(j.at("zero"), path + ".zero", n);
  return d;
}

GroupoidData read_groupoid(const json& j, const std::string& path, bool require_leq) {
  check_keys(j, path, {"kind", "elements", "dom", "cod", "inv", "comp", "leq"});
  GroupoidData d;
  for (const char* field : {"elements", "dom", "cod", "inv", "comp"})
    if (!j.contains(field)) schema_error(path, std::string("missing field \"") + field + "\"");
  d.elements = read_names(j.at("elements"), path + ".elements");
  const int n = static_cast<int>(d.elements.size());
  d.dom = read_index_vector(j.at("dom"), path + ".dom", n, n);
  d.cod = read_index_vector(j.at("cod"), path + ".cod", n, n);
  d.inv = read_index_vector(j.at("inv"), path + ".inv", n, n);
  d.comp = read_partial_table(j.at("comp"), path + ".comp", n, n, n);
  if (j.contains("leq")) d.leq = read_bool_matrix(j.at("leq"), path + ".leq", n, n);
  if (require_leq && !d.leq) schema_error(path, "missing field \"leq\"");
  return d;
}

CategoryData read_category(const json& j, const std::string& path) {
  check_keys(j, path, {"kind", "arrows", "dom", "cod", "comp"});
  CategoryData d;
  for (const char* field : {"arrows", "dom", "cod", "comp"})
    if (!j.contains(field)) schema_error(path, std::string("missing field \"") + field + "\"");
  d.arrows = read_names(j.at("arrows"), path + ".arrows");
  const int n = static_cast<int>(d.arrows.size());
  d.dom = read_index_vector(j.at("dom"), path + ".dom", n, n);
  d.cod = read_index_vector(j.at("cod"), path + ".cod", n, n);
  d.comp = read_partial_table(j.at("comp"), path + ".comp", n, n, n);
  return d;
}

std::string nested_kind(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    schema_error(path, "expected an object with a \"kind\"");
  return j.at("kind").get<std::string>();
}

BasicPayload read_basic(const json& j, const std::string& path) {
  const std::string kind = nested_kind(j, path);
  if (kind == "inverse_semigroup") return read_semigroup(j, path);
  if (kind == "ordered_groupoid") return read_groupoid(j, path, /*require_leq=*/true);
  if (kind == "category") return read_category(j, path);
  schema_error(path, "unsupported nested kind \"" + kind + "\"");
}

json write_semigroup(const SemigroupData& d) {
  json j;
  j["kind"] = "inverse_semigroup";
  j["elements"] = d.elements;
  json table = json::array();
  const int n = static_cast<int>(d.elements.size());
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(d.table(r, c));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (d.zero) j["zero"] = *d.zero;
  return j;
}

json write_groupoid(const GroupoidData& d) {
  json j;
  j["kind"] = "ordered_groupoid";
  j["elements"] = d.elements;
  j["dom"] = d.dom;
  j["cod"] = d.cod;
  j["inv"] = d.inv;
  const int n = static_cast<int>(d.elements.size());
  json comp = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) {
      if (d.comp.defined(r, c)) row.push_back(d.comp(r, c));
      else row.push_back(nullptr);
    }
    comp.push_back(std::move(row));
  }
  j["comp"] = std::move(comp);
  if (d.leq) {
    json leq = json::array();
    for (int r = 0; r < n; ++r) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back((*d.leq)(r, c));
      leq.push_back(std::move(row));
    }
    j["leq"] = std::move(leq);
  }
  return j;
}

json write_category(const CategoryData& d) {
  json j;
  j["kind"] = "category";
  j["arrows"] = d.arrows;
  j["dom"] = d.dom;
  j["cod"] = d.cod;
  const int n = static_cast<int>(d.arrows.size());
  json comp = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) {
      if (d.comp.defined(r, c)) row.push_back(d.comp(r, c));
      else row.push_back(nullptr);
    }
    comp.push_back(std::move(row));
  }
  j["comp"] = std::move(comp);
  return j;
}

json write_basic(const BasicPayload& p) {
  if (const auto* s = std::get_if<SemigroupData>(&p)) return write_semigroup(*s);
  if (const auto* g = std::get_if<GroupoidData>(&p)) return write_groupoid(*g);
  return write_category(std::get<CategoryData>(p));
}

}  // namespace

std::string kind_of(const StructureFile& f) {
  if (std::holds_alternative<SemigroupData>(f.payload)) return "inverse_semigroup";
  if (std::holds_alternative<GroupoidData>(f.payload)) return "ordered_groupoid";
  if (std::holds_alternative<CategoryData>(f.payload)) return "category";
  if (std::holds_alternative<TripleData>(f.payload)) return "mcalister_triple";
  if (std::holds_alternative<AffineData>(f.payload)) return "affine_system";
  return "morphism";
}

StructureFile parse_structure(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError("ParseError", e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    schema_error("$", "expected a top-level object with a \"kind\"");
  if (j.contains("version")) {
    if (!j.at("version").is_string() || j.at("version").get<std::string>() != format_version)
      schema_error("$.version", std::string("expected \"") + format_version + "\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  json body = j;
  body.erase("version");

  StructureFile f;
  if (kind == "inverse_semigroup") {
    f.payload = read_semigroup(body, "$");
  } else if (kind == "ordered_groupoid") {
    f.payload = read_groupoid(body, "$", /*require_leq=*/true);
  } else if (kind == "category") {
    f.payload = read_category(body, "$");
  } else if (kind == "mcalister_triple") {
    check_keys(body, "$", {"kind", "group", "poset", "action", "Y"});
    for (const char* field : {"group", "poset", "action", "Y"})
      if (!body.contains(field)) schema_error("$", std::string("missing field \"") + field + "\"");
    TripleData d;
    if (nested_kind(body.at("group"), "$.group") != "inverse_semigroup")
      schema_error("$.group", "expected kind \"inverse_semigroup\"");
    d.group = read_semigroup(body.at("group"), "$.group");
    check_keys(body.at("poset"), "$.poset", {"elements", "leq"});
    if (!body.at("poset").contains("elements") || !body.at("poset").contains("leq"))
      schema_error("$.poset", "missing field");
    d.poset_elements = read_names(body.at("poset").at("elements"), "$.poset.elements");
    const int nx = static_cast<int>(d.poset_elements.size());
    d.poset_leq = read_bool_matrix(body.at("poset").at("leq"), "$.poset.leq", nx, nx);
    d.action = read_total_table(body.at("action"), "$.action",
                                static_cast<int>(d.group.elements.size()), nx, nx);
    if (!body.at("Y").is_array()) schema_error("$.Y", "expected an array");
    for (size_t i = 0; i < body.at("Y").size(); ++i)
      d.y.push_back(read_index(body.at("Y")[i], "$.Y[" + std::to_string(i) + "]", nx));
    f.payload = std::move(d);
  } else if (kind == "affine_system") {
    check_keys(body, "$", {"kind", "category", "groupoid", "pi", "action"});
    for (const char* field : {"category", "groupoid", "pi", "action"})
      if (!body.contains(field)) schema_error("$", std::string("missing field \"") + field + "\"");
    AffineData d;
    if (nested_kind(body.at("category"), "$.category") != "category")
      schema_error("$.category", "expected kind \"category\"");
    d.category = read_category(body.at("category"), "$.category");
    if (nested_kind(body.at("groupoid"), "$.groupoid") != "ordered_groupoid")
      schema_error("$.groupoid", "expected kind \"ordered_groupoid\"");
    // order matrices on action carriers are ignored by the mathematics
    d.groupoid = read_groupoid(body.at("groupoid"), "$.groupoid", /*require_leq=*/false);
    const int nc = static_cast<int>(d.category.arrows.size());
    const int ng = static_cast<int>(d.groupoid.elements.size());
    d.pi = read_index_vector(body.at("pi"), "$.pi", ng, nc);
    d.action = read_partial_table(body.at("action"), "$.action", nc, ng, ng);
    f.payload = std::move(d);
  } else if (kind == "morphism") {
    check_keys(body, "$", {"kind", "source", "target", "map"});
    for (const char* field : {"source", "target", "map"})
      if (!body.contains(field)) schema_error("$", std::string("missing field \"") + field + "\"");
    MorphismData d;
    d.source = read_basic(body.at("source"), "$.source");
    d.target = read_basic(body.at("target"), "$.target");
    const int ns = static_cast<int>(std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, CategoryData>)
            return p.arrows.size();
          else
            return p.elements.size();
        },
        d.source));
    const int nt = static_cast<int>(std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, CategoryData>)
            return p.arrows.size();
          else
            return p.elements.size();
        },
        d.target));
    d.map = read_index_vector(body.at("map"), "$.map", ns, nt);
    f.payload = std::move(d);
  } else {
    schema_error("$.kind", "unknown kind \"" + kind + "\"");
  }
  return f;
}

std::string emit_structure(const StructureFile& f) {
  json j;
  if (const auto* s = std::get_if<SemigroupData>(&f.payload)) {
    j = write_semigroup(*s);
  } else if (const auto* g = std::get_if<GroupoidData>(&f.payload)) {
    j = write_groupoid(*g);
  } else if (const auto* c = std::get_if<CategoryData>(&f.payload)) {
    j = write_category(*c);
  } else if (const auto* t = std::get_if<TripleData>(&f.payload)) {
    j["kind"] = "mcalister_triple";
    j["group"] = write_semigroup(t->group);
    json poset;
    poset["elements"] = t->poset_elements;
    const int nx = static_cast<int>(t->poset_elements.size());
    json leq = json::array();
    for (int r = 0; r < nx; ++r) {
      json row = json::array();
      for (int c = 0; c < nx; ++c) row.push_back(t->poset_leq(r, c));
      leq.push_back(std::move(row));
    }
    poset["leq"] = std::move(leq);
    j["poset"] = std::move(poset);
    json action = json::array();
    for (int r = 0; r < static_cast<int>(t->group.elements.size()); ++r) {
      json row = json::array();
      for (int c = 0; c < nx; ++c) row.push_back(t->action(r, c));
      action.push_back(std::move(row));
    }
    j["action"] = std::move(action);
    j["Y"] = t->y;
  } else if (const auto* a = std::get_if<AffineData>(&f.payload)) {
    j["kind"] = "affine_system";
    j["category"] = write_category(a->category);
    j["groupoid"] = write_groupoid(a->groupoid);
    j["pi"] = a->pi;
    json action = json::array();
    for (int r = 0; r < static_cast<int>(a->category.arrows.size()); ++r) {
      json row = json::array();
      for (int c = 0; c < static_cast<int>(a->groupoid.elements.size()); ++c) {
        if (a->action.defined(r, c)) row.push_back(a->action(r, c));
        else row.push_back(nullptr);
      }
      action.push_back(std::move(row));
    }
    j["action"] = std::move(action);
  } else {
    const auto& m = std::get<MorphismData>(f.payload);
    j["kind"] = "morphism";
    j["source"] = write_basic(m.source);
    j["target"] = write_basic(m.target);
    j["map"] = m.map;
  }
  j["version"] = format_version;
  return j.dump(2) + "\n";
}

InvSemigroup to_semigroup(const SemigroupData& d) {
  return validate_inverse_semigroup(d.elements, d.table, d.zero);
}

OrdGroupoid to_ordered_groupoid(const GroupoidData& d) {
  if (!d.leq) throw ValidationError("SchemaError", "ordered groupoid needs a \"leq\" matrix");
  return validate_ordered_groupoid(d.elements, d.dom, d.cod, d.inv, d.comp, *d.leq);
}

Groupoid to_plain_groupoid(const GroupoidData& d) {
  return validate_groupoid(d.elements, d.dom, d.cod, d.inv, d.comp);
}

FinCategory to_category(const CategoryData& d) {
  return validate_category(d.arrows, d.dom, d.cod, d.comp);
}

McAlisterTriple to_triple(const TripleData& d) {
  Poset poset{d.poset_elements, d.poset_leq};
  GroupPosetAction base =
      validate_group_poset_action(to_semigroup(d.group), std::move(poset), d.action);
  return validate_mcalister_triple(std::move(base), d.y);
}

GroupoidAction to_action(const AffineData& d) {
  return validate_action(to_category(d.category), to_plain_groupoid(d.groupoid), d.pi, d.action);
}

SemigroupData from_semigroup(const InvSemigroup& s) { return {s.elements, s.table, s.zero}; }

GroupoidData from_ordered_groupoid(const OrdGroupoid& g) {
  return {g.elements, g.dom, g.cod, g.inv, g.comp, g.leq};
}

GroupoidData from_plain_groupoid(const Groupoid& g) {
  return {g.elements, g.dom, g.cod, g.inv, g.comp, std::nullopt};
}

CategoryData from_category(const FinCategory& c) { return {c.arrows, c.dom, c.cod, c.comp}; }

TripleData from_triple(const McAlisterTriple& t) {
  return {from_semigroup(t.base.group), t.base.poset.elements, t.base.poset.leq, t.base.action,
          t.y};
}

AffineData from_action(const GroupoidAction& a) {
  return {from_category(a.cat), from_plain_groupoid(a.gpd), a.pi, a.act};
}

}  // namespace esnkit::io
