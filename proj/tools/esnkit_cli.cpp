// esnkit — validation, conversion and theorem verification for finite
// inverse semigroups, ordered groupoids, cancellative categories and
// category actions.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (least
// witness printed), 2 usage or IO error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "esnkit/affine.hpp"
#include "esnkit/cancellative.hpp"
#include "esnkit/error.hpp"
#include "esnkit/esn.hpp"
#include "esnkit/generators.hpp"
#include "esnkit/io.hpp"
#include "esnkit/iso.hpp"
#include "esnkit/mcalister.hpp"

using namespace esnkit;

namespace {

bool is_usage_error(const ValidationError& e) {
  return e.code() == "ParseError" || e.code() == "SchemaError" || e.code() == "UnknownFamily" ||
         e.code() == "SizeTooLarge";
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("ParseError", "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("ParseError", "cannot write \"" + path + "\"");
  out << bytes;
}

int print_report(const std::string& heading, const Report& rep, bool as_json) {
  if (as_json) {
    nlohmann::json j;
    j["command"] = heading;
    j["pass"] = rep.all_pass();
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : rep.lines) {
      nlohmann::json l;
      l["name"] = line.name;
      l["pass"] = line.pass;
      l["detail"] = line.detail;
      lines.push_back(std::move(l));
    }
    j["lines"] = std::move(lines);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << heading << "\n";
    for (const auto& line : rep.lines) {
      std::cout << "  [" << (line.pass ? "PASS" : "FAIL") << "] " << line.name;
      if (!line.detail.empty()) std::cout << " -- " << line.detail;
      std::cout << "\n";
    }
  }
  return rep.all_pass() ? 0 : 1;
}

Report validate_report(const io::StructureFile& f) {
  Report rep;
  const std::string kind = io::kind_of(f);
  if (const auto* s = std::get_if<io::SemigroupData>(&f.payload)) {
    const InvSemigroup v = io::to_semigroup(*s);
    rep.add("valid inverse semigroup", true,
            std::to_string(v.size()) + " elements, " +
                std::to_string(v.idempotent_list().size()) + " idempotents");
    rep.add("E-unitary", true, is_e_unitary(v) ? "yes" : "no");
  } else if (const auto* g = std::get_if<io::GroupoidData>(&f.payload)) {
    const OrdGroupoid v = io::to_ordered_groupoid(*g);
    rep.add("valid ordered groupoid (both axiom systems)", true,
            std::to_string(v.size()) + " elements, " + std::to_string(v.identities.size()) +
                " identities");
    rep.add("inductive", true, is_inductive(v) ? "yes" : "no");
    rep.add("*-inductive", true, is_star_inductive(v) ? "yes" : "no");
  } else if (const auto* c = std::get_if<io::CategoryData>(&f.payload)) {
    const FinCategory v = io::to_category(*c);
    std::string flags;
    if (v.left_cancellative) flags += "left-cancellative ";
    if (v.right_cancellative) flags += "right-cancellative";
    rep.add("valid category", true, std::to_string(v.size()) + " arrows; " + flags);
  } else if (const auto* t = std::get_if<io::TripleData>(&f.payload)) {
    const McAlisterTriple v = io::to_triple(*t);
    rep.add("valid McAlister triple (MT1-MT3)", true,
            "|X| = " + std::to_string(v.base.poset.size()) + ", |Y| = " +
                std::to_string(v.y.size()) + ", |G| = " + std::to_string(v.base.group.size()));
  } else if (const auto* a = std::get_if<io::AffineData>(&f.payload)) {
    const GroupoidAction v = io::to_action(*a);
    rep.add("valid category action (A1-A8)", true,
            std::to_string(v.cat.size()) + " arrows acting on " + std::to_string(v.gpd.size()) +
                " elements");
    bool affine = true;
    std::string why;
    try {
      validate_affine(v);
    } catch (const ValidationError& e) {
      affine = false;
      why = e.what();
    }
    rep.add("affine system", affine, affine ? "" : why);
  } else {
    const auto& m = std::get<io::MorphismData>(f.payload);
    if (const auto* src = std::get_if<io::SemigroupData>(&m.source)) {
      const auto* dst = std::get_if<io::SemigroupData>(&m.target);
      if (dst == nullptr)
        throw ValidationError("SchemaError", "morphism endpoints have different kinds");
      const InvSemigroup vs = io::to_semigroup(*src);
      const InvSemigroup vt = io::to_semigroup(*dst);
      rep.add("endpoints are valid inverse semigroups", true);
      rep.add("prehomomorphism", true, is_prehomomorphism(vs, vt, m.map) ? "yes" : "no");
      rep.add("homomorphism", true, is_homomorphism(vs, vt, m.map) ? "yes" : "no");
    } else if (const auto* gsrc = std::get_if<io::GroupoidData>(&m.source)) {
      const auto* gdst = std::get_if<io::GroupoidData>(&m.target);
      if (gdst == nullptr)
        throw ValidationError("SchemaError", "morphism endpoints have different kinds");
      const OrdGroupoid vs = io::to_ordered_groupoid(*gsrc);
      const OrdGroupoid vt = io::to_ordered_groupoid(*gdst);
      const FunctorFlags flags = classify_functor(vs, vt, m.map);
      rep.add("functor between valid ordered groupoids", true);
      std::string detail;
      if (flags.ordered) detail += "ordered ";
      if (flags.inductive) detail += "inductive ";
      if (flags.star_injective) detail += "star-injective ";
      if (flags.star_bijective) detail += "covering ";
      if (flags.ordered_embedding) detail += "ordered-embedding";
      rep.add("classification", true, detail.empty() ? "plain functor" : detail);
    } else {
      const auto& csrc = std::get<io::CategoryData>(m.source);
      const auto* cdst = std::get_if<io::CategoryData>(&m.target);
      if (cdst == nullptr)
        throw ValidationError("SchemaError", "morphism endpoints have different kinds");
      const FinCategory vs = io::to_category(csrc);
      const FinCategory vt = io::to_category(*cdst);
      check_functor(vs, vt, m.map);
      rep.add("functor between valid categories", true);
      rep.add("equivalence", true, is_equivalence(vs, vt, m.map) ? "yes" : "no");
    }
  }
  (void)kind;
  return rep;
}

io::StructureFile convert_structure(const io::StructureFile& f, const std::string& to) {
  io::StructureFile out;
  if (to == "groupoid") {
    if (const auto* s = std::get_if<io::SemigroupData>(&f.payload)) {
      out.payload = io::from_ordered_groupoid(groupoid_of(io::to_semigroup(*s)));
      return out;
    }
    if (const auto* c = std::get_if<io::CategoryData>(&f.payload)) {
      out.payload = io::from_ordered_groupoid(g_of_left(io::to_category(*c)).groupoid);
      return out;
    }
    throw ValidationError("SchemaError",
                          "--to groupoid needs an inverse semigroup or a category");
  }
  const auto* g = std::get_if<io::GroupoidData>(&f.payload);
  if (to == "semigroup" || to == "semigroup0" || to == "lcat" || to == "rcat" || to == "bar") {
    if (g == nullptr)
      throw ValidationError("SchemaError", "--to " + to + " needs an ordered groupoid");
    const OrdGroupoid v = io::to_ordered_groupoid(*g);
    if (to == "semigroup") out.payload = io::from_semigroup(semigroup_of(v));
    if (to == "semigroup0") out.payload = io::from_semigroup(semigroup_of_with_zero(v));
    if (to == "lcat") out.payload = io::from_category(l_of(v).category);
    if (to == "rcat") out.payload = io::from_category(r_of(v).category);
    if (to == "bar") out.payload = io::from_ordered_groupoid(bar_groupoid(v).groupoid);
    return out;
  }
  if (to == "affine") {
    if (g == nullptr)
      throw ValidationError("SchemaError", "--to affine needs an ordered groupoid");
    out.payload = io::from_action(canonical_affine(io::to_ordered_groupoid(*g)).system.base);
    return out;
  }
  if (to == "j") {
    const auto* a = std::get_if<io::AffineData>(&f.payload);
    if (a == nullptr) throw ValidationError("SchemaError", "--to j needs an affine system");
    out.payload = io::from_ordered_groupoid(j_of(io::to_action(*a)).groupoid);
    return out;
  }
  throw ValidationError("SchemaError", "unknown conversion target \"" + to + "\"");
}

Report verify_esn(const io::StructureFile& f) {
  Report rep;
  if (const auto* s = std::get_if<io::SemigroupData>(&f.payload)) {
    const InvSemigroup v = io::to_semigroup(*s);
    verify_esn_roundtrip(v);
    rep.add("S(G(S)) = S on-the-nose", true, std::to_string(v.size()) + " elements");
  } else if (const auto* g = std::get_if<io::GroupoidData>(&f.payload)) {
    const OrdGroupoid v = io::to_ordered_groupoid(*g);
    verify_esn_roundtrip_g(v);
    rep.add("G(S(G)) = G on-the-nose", true, std::to_string(v.size()) + " elements");
  } else {
    throw ValidationError("SchemaError", "verify esn needs a semigroup or an ordered groupoid");
  }
  return rep;
}

Report verify_p_theorem(const io::StructureFile& f, bool heuristic) {
  Report rep;
  if (const auto* t = std::get_if<io::TripleData>(&f.payload)) {
    const McAlisterTriple triple = io::to_triple(*t);
    rep.add("MT1-MT3 hold", true);
    const PSemigroup p = p_semigroup(triple);
    rep.add("P(G,X,Y) is a valid inverse semigroup", true,
            std::to_string(p.semigroup.size()) + " elements");
    rep.add("P(G,X,Y) is E-unitary", is_e_unitary(p.semigroup));
    rep.add("idempotents form a copy of Y", true, "verified during construction");
    const MaxGroupImage mgi = max_group_image(p.semigroup);
    const auto iso = find_isomorphism(mgi.group, triple.base.group);
    rep.add("maximum group image is isomorphic to G", iso.has_value());

    const SemidirectGroupoid sd = semidirect_groupoid(triple.base);
    std::vector<Idx> iota(p.semigroup.size());
    for (Idx i = 0; i < p.semigroup.size(); ++i)
      iota[i] = sd.index_of(p.y_part[i], p.g_part[i]);
    rep.merge(verify_semidirect_enlargement(p.semigroup, triple.base, iota));
    return rep;
  }
  if (const auto* s = std::get_if<io::SemigroupData>(&f.payload)) {
    const InvSemigroup v = io::to_semigroup(*s);
    rep.add("E-unitary", is_e_unitary(v));
    if (heuristic) {
      const TripleSearchResult res = search_mcalister_triple(v);
      rep.merge(res.report);
    }
    return rep;
  }
  throw ValidationError("SchemaError", "verify p-theorem needs a triple or a semigroup");
}

Report verify_rooted(const io::StructureFile& f) {
  if (const auto* c = std::get_if<io::CategoryData>(&f.payload))
    return verify_rooted_theorem_c(io::to_category(*c));
  if (const auto* g = std::get_if<io::GroupoidData>(&f.payload))
    return verify_rooted_theorem_g(io::to_ordered_groupoid(*g));
  if (const auto* s = std::get_if<io::SemigroupData>(&f.payload)) {
    Report rep = e_unitary_iff_cancellative(io::to_semigroup(*s));
    const BisimpleData data = bisimple_monoid_data(io::to_semigroup(*s));
    rep.add("0-bisimple", true, data.bisimple ? "yes" : "no");
    if (data.l1)
      rep.add("L1 with the principal right ideal condition", data.principal_ideal_condition,
              std::to_string(data.l1->size()) + " elements");
    return rep;
  }
  throw ValidationError("SchemaError",
                        "verify rooted needs a category, groupoid or inverse monoid");
}

Report verify_affine_universality(const io::StructureFile& f) {
  if (const auto* g = std::get_if<io::GroupoidData>(&f.payload))
    return verify_canonical_universality(io::to_ordered_groupoid(*g));
  if (const auto* a = std::get_if<io::AffineData>(&f.payload)) {
    const GroupoidAction action = io::to_action(*a);
    Report rep;
    rep.add("A1-A8 hold", true);
    rep.merge(lemma_report_affine(action));
    return rep;
  }
  throw ValidationError("SchemaError",
                        "verify affine-universality needs a groupoid or an affine system");
}

Report verify_lemma_suite(const io::StructureFile& f) {
  if (const auto* s = std::get_if<io::SemigroupData>(&f.payload))
    return lemma_report_semigroup(io::to_semigroup(*s));
  if (const auto* g = std::get_if<io::GroupoidData>(&f.payload))
    return lemma_report_groupoid(io::to_ordered_groupoid(*g));
  if (const auto* c = std::get_if<io::CategoryData>(&f.payload))
    return lemma_report_category(io::to_category(*c));
  if (const auto* a = std::get_if<io::AffineData>(&f.payload))
    return lemma_report_affine(io::to_action(*a));
  if (const auto* t = std::get_if<io::TripleData>(&f.payload))
    return verify_p_theorem(io::StructureFile{*t}, false);
  throw ValidationError("SchemaError", "no lemma suite for this kind");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroups, ordered groupoids and category actions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable reports");

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "validate a structure file");
  validate_cmd->add_option("file", validate_file, "input file (- for stdin)")->required();

  std::string gen_family, gen_out;
  int gen_n = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate a standard structure");
  gen_cmd->add_option("family", gen_family)->required();
  gen_cmd->add_option("n", gen_n)->required();
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  std::string convert_to, convert_file, convert_out;
  auto* convert_cmd = app.add_subcommand("convert", "convert between structures");
  convert_cmd->add_option("--to", convert_to)->required();
  convert_cmd->add_option("file", convert_file)->required();
  convert_cmd->add_option("-o,--output", convert_out);

  std::string verify_what;
  std::vector<std::string> verify_files;
  bool heuristic = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem suite");
  verify_cmd->add_option("what", verify_what)->required();
  verify_cmd->add_option("files", verify_files)->required();
  verify_cmd->add_flag("--heuristic", heuristic, "enable the bounded triple search");

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "search for an isomorphism");
  iso_cmd->add_option("fileA", iso_a)->required();
  iso_cmd->add_option("fileB", iso_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) {
      const io::StructureFile f = io::parse_structure(read_file(validate_file));
      return print_report("validate " + io::kind_of(f), validate_report(f), as_json);
    }
    if (*gen_cmd) {
      io::StructureFile f;
      if (is_semigroup_family(gen_family))
        f.payload = io::from_semigroup(generate_standard(gen_family, gen_n));
      else if (is_category_family(gen_family))
        f.payload = io::from_category(generate_category(gen_family, gen_n));
      else
        throw ValidationError("UnknownFamily", gen_family);
      write_output(gen_out, io::emit_structure(f));
      return 0;
    }
    if (*convert_cmd) {
      const io::StructureFile f = io::parse_structure(read_file(convert_file));
      write_output(convert_out, io::emit_structure(convert_structure(f, convert_to)));
      return 0;
    }
    if (*verify_cmd) {
      int exit_code = 0;
      for (const auto& path : verify_files) {
        const io::StructureFile f = io::parse_structure(read_file(path));
        Report rep;
        if (verify_what == "esn") rep = verify_esn(f);
        else if (verify_what == "p-theorem") rep = verify_p_theorem(f, heuristic);
        else if (verify_what == "rooted") rep = verify_rooted(f);
        else if (verify_what == "affine-universality") rep = verify_affine_universality(f);
        else if (verify_what == "lemma-suite") rep = verify_lemma_suite(f);
        else throw ValidationError("SchemaError", "unknown verify suite \"" + verify_what + "\"");
        exit_code |= print_report("verify " + verify_what + " " + path, rep, as_json);
      }
      return exit_code;
    }
    if (*iso_cmd) {
      const io::StructureFile fa = io::parse_structure(read_file(iso_a));
      const io::StructureFile fb = io::parse_structure(read_file(iso_b));
      if (io::kind_of(fa) != io::kind_of(fb))
        throw ValidationError("SchemaError", "iso needs two structures of the same kind");
      std::optional<std::vector<Idx>> found;
      std::vector<std::string> names_a, names_b;
      if (const auto* s = std::get_if<io::SemigroupData>(&fa.payload)) {
        const InvSemigroup va = io::to_semigroup(*s);
        const InvSemigroup vb = io::to_semigroup(std::get<io::SemigroupData>(fb.payload));
        found = find_isomorphism(va, vb);
        names_a = va.elements;
        names_b = vb.elements;
      } else if (const auto* g = std::get_if<io::GroupoidData>(&fa.payload)) {
        const OrdGroupoid va = io::to_ordered_groupoid(*g);
        const OrdGroupoid vb = io::to_ordered_groupoid(std::get<io::GroupoidData>(fb.payload));
        found = find_isomorphism(va, vb);
        names_a = va.elements;
        names_b = vb.elements;
      } else if (const auto* c = std::get_if<io::CategoryData>(&fa.payload)) {
        const FinCategory va = io::to_category(*c);
        const FinCategory vb = io::to_category(std::get<io::CategoryData>(fb.payload));
        found = find_isomorphism(va, vb);
        names_a = va.arrows;
        names_b = vb.arrows;
      } else {
        throw ValidationError("SchemaError", "iso supports semigroups, groupoids and categories");
      }
      Report rep;
      if (found) {
        std::string detail;
        for (size_t i = 0; i < found->size(); ++i) {
          if (i > 0) detail += ", ";
          detail += names_a[i] + " -> " + names_b[(*found)[i]];
        }
        rep.add("isomorphic", true, detail);
      } else {
        rep.add("isomorphic", false, "no isomorphism exists");
      }
      return print_report("iso", rep, as_json);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
