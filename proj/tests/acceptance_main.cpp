// Acceptance suite: one line per criterion, exit code = number of
// failures. Each criterion enforces its own time budget.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
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
#include "support.hpp"

using namespace esnkit;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  std::string description;
  double limit_seconds;
  std::function<void()> run;  // throws on failure
};

void require(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

InvSemigroup adjoin_identity(const InvSemigroup& s, const std::string& name) {
  const int n = s.size();
  std::vector<std::string> elements;
  elements.push_back(name);
  elements.insert(elements.end(), s.elements.begin(), s.elements.end());
  IdxTable table(n + 1, n + 1);
  table(0, 0) = 0;
  for (Idx a = 0; a < n; ++a) {
    table(0, a + 1) = a + 1;
    table(a + 1, 0) = a + 1;
    for (Idx b = 0; b < n; ++b) table(a + 1, b + 1) = s.mul(a, b) + 1;
  }
  std::optional<Idx> zero;
  if (s.zero) zero = *s.zero + 1;
  return validate_inverse_semigroup(std::move(elements), std::move(table), zero);
}

GroupPosetAction z2_on_v() {
  BoolMatrix leq(3);
  for (Idx i = 0; i < 3; ++i) leq.set(i, i, true);
  leq.set(2, 0, true);
  leq.set(2, 1, true);
  IdxTable action(2, 3);
  action(0, 0) = 0;
  action(0, 1) = 1;
  action(0, 2) = 2;
  action(1, 0) = 1;
  action(1, 1) = 0;
  action(1, 2) = 2;
  return validate_group_poset_action(gen_cyclic_group(2), Poset{{"A", "B", "C"}, leq},
                                     std::move(action));
}

std::vector<InvSemigroup> semigroup_corpus() {
  std::vector<InvSemigroup> corpus;
  for (int n = 1; n <= 3; ++n) corpus.push_back(gen_symmetric_inverse_monoid(n));
  for (int n = 1; n <= 6; ++n) corpus.push_back(gen_cyclic_group(n));
  for (int n = 1; n <= 5; ++n) corpus.push_back(gen_chain_semilattice(n));
  for (int k = 1; k <= 3; ++k) corpus.push_back(gen_diamond_semilattice(k));
  for (int n = 1; n <= 2; ++n) corpus.push_back(gen_brandt(n));
  std::mt19937 rng(20260809);
  for (int i = 0; i < 5; ++i) corpus.push_back(testsupport::random_semilattice(rng));
  return corpus;
}

std::vector<OrdGroupoid> groupoid_corpus() {
  std::vector<OrdGroupoid> corpus;
  for (const auto& s : semigroup_corpus()) corpus.push_back(groupoid_of(s));
  corpus.push_back(g_of_left(gen_chain_poset_category(3)).groupoid);
  corpus.push_back(g_of_left(gen_free_category(2)).groupoid);
  corpus.push_back(semidirect_groupoid(z2_on_v()).groupoid);
  return corpus;
}

int cli_exit(const std::string& args) {
  const std::string cmd = std::string(ESNKIT_CLI_BIN) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "full product reconstruction on the named corpus", 1.0, [] {
    const std::vector<InvSemigroup> corpus = {
        gen_symmetric_inverse_monoid(1), gen_symmetric_inverse_monoid(2),
        gen_symmetric_inverse_monoid(3), gen_cyclic_group(4),
        gen_chain_semilattice(8),        gen_brandt(2)};
    for (const auto& s : corpus)
      for (Idx a = 0; a < s.size(); ++a)
        for (Idx b = 0; b < s.size(); ++b)
          require(reconstruct_full_product(s, a, b) == s.mul(a, b),
                  "reconstruction differs from the table");
  }});

  criteria.push_back({2, "ESN round trips on-the-nose over >= 20 structures", 5.0, [] {
    const auto corpus = semigroup_corpus();
    require(corpus.size() >= 20, "corpus too small");
    for (const auto& s : corpus) {
      verify_esn_roundtrip(s);
      verify_esn_roundtrip_g(groupoid_of(s));
    }
  }});

  criteria.push_back({3, "pseudoproduct oracle agreement and associativity", 5.0, [] {
    for (const auto& g : groupoid_corpus())
      for (Idx x = 0; x < g.size(); ++x)
        for (Idx y = 0; y < g.size(); ++y) pseudoproduct(g, x, y);  // dual routes compared inside

    const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
    int triples = 0;
    for (Idx x = 0; x < g.size(); ++x)
      for (Idx y = 0; y < g.size(); ++y)
        for (Idx z = 0; z < g.size(); ++z) {
          ++triples;
          auto xy = pseudoproduct(g, x, y);
          auto yz = pseudoproduct(g, y, z);
          if (!xy || !yz) continue;
          auto left = pseudoproduct(g, *xy, z);
          auto right = pseudoproduct(g, x, *yz);
          if (left && right) require(*left == *right, "associativity failed");
        }
    require(triples == 343, "expected 343 triples");
  }});

  criteria.push_back({4, "P-semigroups from >= 50 randomized triples plus the hand example", 30.0, [] {
    std::mt19937 rng(948271);
    for (int round = 0; round < 50; ++round) {
      const McAlisterTriple t = testsupport::random_triple(rng);
      require(t.base.poset.size() <= 8 && t.base.group.size() <= 8, "triple exceeds caps");
      const PSemigroup p = p_semigroup(t);  // validates, E-unitary, Y order inside
      require(is_e_unitary(p.semigroup), "not E-unitary");
      const MaxGroupImage mgi = max_group_image(p.semigroup);
      require(find_isomorphism(mgi.group, t.base.group).has_value(),
              "maximum group image is not G");
    }
    const PSemigroup hand = p_semigroup(validate_mcalister_triple(z2_on_v(), {0, 2}));
    require(hand.semigroup.size() == 3, "hand example size");
  }});

  criteria.push_back({5, "category/groupoid round trips of the span constructions", 30.0, [] {
    std::vector<FinCategory> categories = {
        gen_monoid_category(1),       gen_monoid_category(3),
        gen_chain_poset_category(2),  gen_chain_poset_category(4),
        gen_diamond_poset_category(2), gen_free_category(1),
        gen_free_category(2),
        l_of(groupoid_of(gen_cyclic_group(3))).category,
        l_of(groupoid_of(gen_chain_semilattice(3))).category,
        l_of(groupoid_of(gen_symmetric_inverse_monoid(2))).category,
        l_of(groupoid_of(gen_symmetric_inverse_monoid(3))).category};
    require(categories.size() >= 10, "category corpus too small");
    for (const auto& c : categories) {
      const Report rep = verify_lg_roundtrip(c);
      require(rep.all_pass(), "LG round trip failed");
    }
    // alpha of the triple groupoid and the rooted recovery, across the
    // whole corpus where the hypotheses apply
    int rooted_checked = 0;
    std::vector<OrdGroupoid> span_corpus = groupoid_corpus();
    span_corpus.push_back(groupoid_of(gen_symmetric_inverse_monoid(3)));
    for (const auto& g : span_corpus) {
      if (g.size() > 300) continue;
      const BarGroupoid bar = bar_groupoid(g);  // alpha checked inside
      require(bar.report.all_pass(), "bar groupoid report failed");
      if (find_maximum_identity(g)) {
        const Report rooted = verify_rooted_theorem_g(g);
        require(rooted.all_pass(), "rooted recovery failed");
        ++rooted_checked;
      }
    }
    require(rooted_checked >= 15, "too few maximum-identity corpus members");
  }});

  criteria.push_back({6, "E-unitary iff cancellative on >= 20 inverse monoids", 5.0, [] {
    std::vector<InvSemigroup> monoids;
    for (int n = 1; n <= 6; ++n) monoids.push_back(gen_cyclic_group(n));
    for (int n = 1; n <= 5; ++n) monoids.push_back(gen_chain_semilattice(n));
    for (int k = 1; k <= 3; ++k) monoids.push_back(gen_diamond_semilattice(k));
    for (int n = 1; n <= 3; ++n) monoids.push_back(gen_symmetric_inverse_monoid(n));
    monoids.push_back(adjoin_identity(gen_brandt(2), "one"));
    monoids.push_back(adjoin_identity(gen_brandt(3), "one"));
    monoids.push_back(p_semigroup(validate_mcalister_triple(z2_on_v(), {0, 2})).semigroup);
    require(monoids.size() >= 20, "monoid corpus too small");
    int non_e_unitary = 0;
    for (const auto& s : monoids) {
      const Report rep = e_unitary_iff_cancellative(s);
      bool agreement = false;
      for (const auto& line : rep.lines) {
        if (line.name == "right cancellative iff E-unitary") agreement = line.pass;
        if (line.name == "right cancellative" && line.detail.rfind("no", 0) == 0) {
          require(line.detail.find("witness") != std::string::npos, "missing witness pair");
          ++non_e_unitary;
        }
      }
      require(agreement, "characterization disagreed");
    }
    require(non_e_unitary >= 3, "corpus lacks non-E-unitary members");
  }});

  criteria.push_back({7, "J-product well-definedness and the orbit condition", 30.0, [] {
    std::vector<GroupoidAction> systems;
    for (const auto& g :
         {groupoid_of(gen_cyclic_group(3)), groupoid_of(gen_chain_semilattice(3)),
          groupoid_of(gen_diamond_semilattice(2)), groupoid_of(gen_symmetric_inverse_monoid(2)),
          groupoid_of(gen_brandt(2)), semidirect_groupoid(z2_on_v()).groupoid,
          g_of_left(gen_free_category(2)).groupoid})
      systems.push_back(canonical_affine(g).system.base);
    {  // a system whose orbit intersections are not orbits
      IdxTable ccomp(5, 5);
      ccomp(0, 0) = 0;
      ccomp(1, 1) = 1;
      ccomp(2, 2) = 2;
      ccomp(3, 0) = 3;
      ccomp(1, 3) = 3;
      ccomp(4, 0) = 4;
      ccomp(2, 4) = 4;
      const FinCategory c = validate_category({"u", "v", "w", "a", "b"}, {0, 1, 2, 0, 0},
                                              {0, 1, 2, 1, 2}, ccomp);
      std::vector<Idx> ids = {0, 1, 2, 3};
      IdxTable gcomp(4, 4);
      for (Idx i = 0; i < 4; ++i) gcomp(i, i) = i;
      Groupoid gg = validate_groupoid({"e", "f", "i", "j"}, ids, ids, ids, gcomp);
      IdxTable act(5, 4);
      act(0, 0) = 0;
      act(0, 1) = 1;
      act(1, 2) = 2;
      act(2, 3) = 3;
      act(3, 0) = 2;
      act(3, 1) = 2;
      act(4, 0) = 3;
      act(4, 1) = 3;
      systems.push_back(validate_action(c, gg, {0, 0, 1, 2}, act));
    }
    bool saw_failing_orbit_condition = false;
    for (const auto& s : systems) {
      const JGroupoid j = j_of(s);  // exhaustive representative independence inside
      require(orbit_condition(s) == is_star_inductive(j.groupoid), "orbit condition mismatch");
      if (!orbit_condition(s)) saw_failing_orbit_condition = true;
      const Report rep = lemma_report_affine(s);
      require(rep.all_pass(), "action lemma battery failed");
    }
    require(saw_failing_orbit_condition, "corpus never exercised the negative direction");
  }});

  criteria.push_back({8, "universality of the canonical affine system", 60.0, [] {
    std::vector<OrdGroupoid> corpus = groupoid_corpus();
    corpus.push_back(bar_groupoid(groupoid_of(gen_chain_semilattice(2))).groupoid);
    corpus.push_back(bar_groupoid(groupoid_of(gen_cyclic_group(3))).groupoid);
    corpus.push_back(bar_groupoid(groupoid_of(gen_symmetric_inverse_monoid(2))).groupoid);
    for (const auto& g : corpus) {
      const Report rep = verify_canonical_universality(g);
      require(rep.all_pass(), "universality failed at size " + std::to_string(g.size()));
    }
    require(semigroup_from_affine(gen_symmetric_inverse_monoid(2)).all_pass(),
            "I2 not recovered");
    require(semigroup_from_affine(gen_brandt(2)).all_pass(), "Brandt not recovered");
  }});

  criteria.push_back({9, "axiom-system cross-check on 1000 randomized candidates", 30.0, [] {
    std::mt19937 rng(606060);
    int rejected = 0;
    for (int round = 0; round < 1000; ++round) {
      OrdGroupoid g = [&] {
        switch (round % 4) {
          case 0: return groupoid_of(testsupport::random_semilattice(rng));
          case 1: return groupoid_of(gen_cyclic_group(2 + round % 5));
          case 2: return groupoid_of(gen_symmetric_inverse_monoid(2));
          default: return semidirect_groupoid(z2_on_v()).groupoid;
        }
      }();
      BoolMatrix leq = g.leq;
      IdxTable comp = g.comp;
      std::vector<Idx> inv = g.inv;
      std::uniform_int_distribution<Idx> pick(0, g.size() - 1);
      switch (round % 5) {
        case 0:
          break;  // keep it valid
        case 1: {  // flip an order bit
          const Idx a = pick(rng), b = pick(rng);
          if (a != b && !leq(b, a)) leq.set(a, b, !leq(a, b));
          break;
        }
        case 2: {  // add a relation and close transitively
          const Idx a = pick(rng), b = pick(rng);
          if (a != b && !leq(b, a)) {
            leq.set(a, b, true);
            for (Idx i = 0; i < g.size(); ++i)
              for (Idx j = 0; j < g.size(); ++j)
                if (leq(i, a) && leq(b, j)) leq.set(i, j, true);
          }
          break;
        }
        case 3: {  // corrupt a composition cell
          const Idx a = pick(rng), b = pick(rng);
          if (comp.defined(a, b)) comp(a, b) = pick(rng);
          break;
        }
        default: {  // corrupt the inversion
          const Idx a = pick(rng);
          inv[a] = pick(rng);
          break;
        }
      }
      bool ok_restriction = true, ok_ideal = true;
      try {
        validate_ordered_groupoid(g.elements, g.dom, g.cod, inv, comp, leq,
                                  OgAxioms::Restriction);
      } catch (const ValidationError&) {
        ok_restriction = false;
      }
      try {
        validate_ordered_groupoid(g.elements, g.dom, g.cod, inv, comp, leq, OgAxioms::OrderIdeal);
      } catch (const ValidationError&) {
        ok_ideal = false;
      }
      require(ok_restriction == ok_ideal, "axiom systems disagreed");
      if (!ok_restriction) ++rejected;
    }
    require(rejected > 100, "mutations produced too few invalid structures");
  }});

  criteria.push_back({10, "format stability and CLI exit codes", 30.0, [] {
    int fixtures = 0;
    for (const auto& entry : fs::directory_iterator(ESNKIT_FIXTURE_DIR)) {
      if (entry.path().extension() != ".json") continue;
      ++fixtures;
      std::ifstream in(entry.path(), std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      const std::string bytes = ss.str();
      require(io::emit_structure(io::parse_structure(bytes)) == bytes,
              "fixture not byte-stable: " + entry.path().filename().string());
    }
    require(fixtures >= 15, "expected the shipped fixtures");

    const std::string dir = ESNKIT_FIXTURE_DIR;
    require(cli_exit("validate " + dir + "/i2.json") == 0, "validate exit");
    {
      const std::string cmd = std::string("sh -c '") + ESNKIT_CLI_BIN +
                              " gen symmetric_inverse_monoid 2 | " + ESNKIT_CLI_BIN +
                              " validate -' >/dev/null 2>&1";
      require(WEXITSTATUS(std::system(cmd.c_str())) == 0, "gen | validate exit");
    }
    require(cli_exit("verify esn " + dir + "/i2.json") == 0, "verify exit");
    const fs::path broken = fs::temp_directory_path() / "esnkit_acceptance_broken.json";
    {
      std::ofstream out(broken);
      out << R"({"kind":"inverse_semigroup","elements":["x","y"],"table":[[0,0],[1,1]]})";
    }
    require(cli_exit("validate " + broken.string()) == 1, "math failure exit");
    require(cli_exit("validate /definitely/not/there.json") == 2, "usage exit");
  }});

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.limit_seconds;
    const bool pass = error.empty() && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line << "criterion " << c.number << " [" << (pass ? "PASS" : "FAIL") << "] ("
         << std::fixed << std::setprecision(2) << elapsed << "s / " << c.limit_seconds
         << "s): " << c.description;
    if (!error.empty()) line << " -- " << error;
    if (error.empty() && !in_time) line << " -- over the time budget";
    std::cout << line.str() << "\n";
  }
  return failures;
}
