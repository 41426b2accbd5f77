#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esnkit/affine.hpp"
#include "esnkit/error.hpp"
#include "esnkit/esn.hpp"
#include "esnkit/generators.hpp"
#include "esnkit/iso.hpp"
#include "support.hpp"

using namespace esnkit;

namespace {

FinCategory trivial_category() {
  IdxTable comp(1, 1);
  comp(0, 0) = 0;
  return validate_category({"*"}, {0}, {0}, comp);
}

// the pair groupoid on n points
Groupoid pair_groupoid(int n) {
  std::vector<std::string> names;
  std::vector<Idx> dom, cod, inv;
  IdxTable comp(n * n, n * n);
  auto at = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      dom.push_back(at(j, j));
      cod.push_back(at(i, i));
      inv.push_back(at(j, i));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) comp(at(i, j), at(j, k)) = at(i, k);
  return validate_groupoid(std::move(names), std::move(dom), std::move(cod), std::move(inv),
                           std::move(comp));
}

GroupoidAction identity_action(const Groupoid& g) {
  const FinCategory c = trivial_category();
  std::vector<Idx> pi(g.size(), 0);
  IdxTable act(1, g.size());
  for (Idx x = 0; x < g.size(); ++x) act(0, x) = x;
  return validate_action(c, g, std::move(pi), std::move(act));
}

// identities-only groupoid on named points
Groupoid discrete_groupoid(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  std::vector<Idx> ids(n);
  IdxTable comp(n, n);
  for (Idx i = 0; i < n; ++i) {
    ids[i] = i;
    comp(i, i) = i;
  }
  return validate_groupoid(names, ids, ids, ids, comp);
}

// five-arrow category with two orbits meeting in a non-orbit
GroupoidAction orbit_condition_counterexample() {
  // category: identities u,v,w and a: u->v, b: u->w
  IdxTable comp(5, 5);
  comp(0, 0) = 0;
  comp(1, 1) = 1;
  comp(2, 2) = 2;
  comp(3, 0) = 3;  // a . u
  comp(1, 3) = 3;  // v . a
  comp(4, 0) = 4;  // b . u
  comp(2, 4) = 4;  // w . b
  const FinCategory c = validate_category({"u", "v", "w", "a", "b"}, {0, 1, 2, 0, 0},
                                          {0, 1, 2, 1, 2}, comp);
  const Groupoid g = discrete_groupoid({"e", "f", "i", "j"});
  std::vector<Idx> pi = {0, 0, 1, 2};
  IdxTable act(5, 4);
  act(0, 0) = 0;
  act(0, 1) = 1;
  act(1, 2) = 2;
  act(2, 3) = 3;
  act(3, 0) = 2;  // a.e = i
  act(3, 1) = 2;  // a.f = i
  act(4, 0) = 3;  // b.e = j
  act(4, 1) = 3;  // b.f = j
  return validate_action(c, g, std::move(pi), std::move(act));
}

AffineSystem rooted_affine_system(const FinCategory& c, Idx one) {
  // (C, X*X) for a right cancellative category with weak initial identity:
  // X = the arrows out of `one`, paired over a common codomain
  std::vector<Idx> x;
  for (Idx a = 0; a < c.size(); ++a)
    if (c.dom[a] == one) x.push_back(a);
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx a : x)
    for (Idx b : x)
      if (c.cod[a] == c.cod[b]) pairs.emplace_back(a, b);
  auto at = [&](Idx a, Idx b) {
    return static_cast<Idx>(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b)) -
                            pairs.begin());
  };
  const int n = static_cast<int>(pairs.size());
  std::vector<std::string> names;
  std::vector<Idx> dom, cod, inv, pi;
  IdxTable comp(n, n), act(c.size(), n);
  for (auto [a, b] : pairs) {
    names.push_back("(" + c.arrows[a] + "," + c.arrows[b] + ")");
    dom.push_back(at(b, b));
    cod.push_back(at(a, a));
    inv.push_back(at(b, a));
    pi.push_back(c.cod[a]);
  }
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      if (dom[i] == cod[j]) comp(i, j) = at(pairs[i].first, pairs[j].second);
  for (Idx m = 0; m < c.size(); ++m)
    for (Idx i = 0; i < n; ++i) {
      auto [a, b] = pairs[i];
      if (c.dom[m] != c.cod[a]) continue;
      act(m, i) = at(c.comp(m, a), c.comp(m, b));
    }
  Groupoid g = validate_groupoid(std::move(names), std::move(dom), std::move(cod), std::move(inv),
                                 std::move(comp));
  return validate_affine(validate_action(c, std::move(g), std::move(pi), std::move(act)));
}

}  // namespace

TEST_CASE("identity action validates; J is the groupoid with discrete order") {
  const GroupoidAction s = identity_action(pair_groupoid(2));
  const JGroupoid j = j_of(s);
  CHECK(j.groupoid.size() == 4);
  for (Idx a = 0; a < j.groupoid.size(); ++a)
    for (Idx b = 0; b < j.groupoid.size(); ++b) CHECK(j.groupoid.leq(a, b) == (a == b));
  CHECK(orbit_condition(s));
  CHECK(is_star_inductive(j.groupoid));
}

TEST_CASE("A8 violation is pinpointed") {
  // two parallel arrows acting asymmetrically: one keeps an arrow, the
  // other collapses it to an identity
  IdxTable ccomp(4, 4);
  ccomp(0, 0) = 0;
  ccomp(1, 1) = 1;
  ccomp(2, 0) = 2;
  ccomp(1, 2) = 2;
  ccomp(3, 0) = 3;
  ccomp(1, 3) = 3;
  const FinCategory c =
      validate_category({"e", "f", "a", "b"}, {0, 1, 0, 0}, {0, 1, 1, 1}, ccomp);

  // groupoid: m: p->q and n: r->s with inverses
  std::vector<std::string> names = {"p", "q", "r", "s", "m", "M", "n", "N"};
  std::vector<Idx> dom = {0, 1, 2, 3, 0, 1, 2, 3};
  std::vector<Idx> cod = {0, 1, 2, 3, 1, 0, 3, 2};
  std::vector<Idx> inv = {0, 1, 2, 3, 5, 4, 7, 6};
  IdxTable gcomp(8, 8);
  for (Idx i = 0; i < 4; ++i) gcomp(i, i) = i;
  gcomp(4, 0) = 4;
  gcomp(1, 4) = 4;
  gcomp(5, 1) = 5;
  gcomp(0, 5) = 5;
  gcomp(5, 4) = 0;
  gcomp(4, 5) = 1;
  gcomp(6, 2) = 6;
  gcomp(3, 6) = 6;
  gcomp(7, 3) = 7;
  gcomp(2, 7) = 7;
  gcomp(7, 6) = 2;
  gcomp(6, 7) = 3;
  const Groupoid g = validate_groupoid(names, dom, cod, inv, gcomp);

  std::vector<Idx> pi = {0, 0, 1, 1, 0, 0, 1, 1};
  IdxTable act(4, 8);
  for (Idx x : {0, 1, 4, 5}) act(0, x) = x;
  for (Idx x : {2, 3, 6, 7}) act(1, x) = x;
  act(2, 0) = 2;
  act(2, 1) = 3;
  act(2, 4) = 6;
  act(2, 5) = 7;
  act(3, 0) = 2;
  act(3, 1) = 2;
  act(3, 4) = 2;
  act(3, 5) = 2;
  try {
    validate_action(c, g, pi, act);
    FAIL("expected an A8 violation");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("A8") != std::string::npos);
  }
}

TEST_CASE("canonical affine system of small groupoids") {
  const OrdGroupoid zg = groupoid_of(gen_cyclic_group(3));
  const CanonicalAffine ca = canonical_affine(zg);
  CHECK(ca.system.base.cat.identities.size() == 1);
  CHECK(ca.system.base.gpd.size() == 9);  // H x H for a group H
  CHECK(is_affine_monoid_system(ca.system));

  const Report rep = verify_canonical_universality(zg);
  CHECK(rep.all_pass());
}

TEST_CASE("universality over the corpus, bar variants included") {
  std::mt19937 rng(3111);
  std::vector<OrdGroupoid> corpus;
  corpus.push_back(groupoid_of(gen_cyclic_group(4)));
  corpus.push_back(groupoid_of(gen_chain_semilattice(3)));
  corpus.push_back(groupoid_of(gen_symmetric_inverse_monoid(2)));
  corpus.push_back(groupoid_of(testsupport::random_semilattice(rng)));
  corpus.push_back(bar_groupoid(groupoid_of(gen_chain_semilattice(2))).groupoid);
  for (const auto& g : corpus) {
    const Report rep = verify_canonical_universality(g);
    INFO("universality corpus member of size ", g.size());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("orbit condition equals *-inductivity of J; the 5-arrow counterexample fails both") {
  const GroupoidAction bad = orbit_condition_counterexample();
  CHECK_FALSE(orbit_condition(bad));
  const JGroupoid j = j_of(bad);
  CHECK_FALSE(is_star_inductive(j.groupoid));

  const OrdGroupoid star = groupoid_of(gen_symmetric_inverse_monoid(2));
  const CanonicalAffine ca = canonical_affine(star);
  CHECK(orbit_condition(ca.system.base) == is_star_inductive(j_of(ca.system.base).groupoid));
  CHECK(orbit_condition(ca.system.base));
}

TEST_CASE("rooted affine systems recover the rooted span groupoid") {
  // one-object right cancellative monoid (a finite group)
  const AffineSystem sys = rooted_affine_system(gen_monoid_category(3), 0);
  const JGroupoid j = j_of(sys.base);
  CHECK(find_isomorphism(j.groupoid, groupoid_of(gen_cyclic_group(3))).has_value());
  CHECK(is_cyclic(sys));
  CHECK(is_affine_monoid_system(sys));

  // R(G) of a groupoid with maximum identity has a weak initial identity
  const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
  const LeechCategory r = r_of(g);
  const Idx one = r.index_of(*find_maximum_identity(g), *find_maximum_identity(g));
  const AffineSystem rooted = rooted_affine_system(r.category, one);
  const JGroupoid jr = j_of(rooted.base);
  // J(C, X*X) recovers the dual rooted span groupoid, i.e. G itself
  const SpanGroupoid dual = g_rooted(opposite(r.category), one);
  CHECK(find_isomorphism(jr.groupoid, dual.groupoid).has_value());
  CHECK(find_isomorphism(jr.groupoid, g).has_value());
  CHECK(is_cyclic(rooted));
}

TEST_CASE("monoid systems describe connected groupoids") {
  const CanonicalAffine connected = canonical_affine(groupoid_of(gen_cyclic_group(4)));
  CHECK(is_affine_monoid_system(connected.system));
  const auto comps = d_classes(j_of(connected.system.base).groupoid);
  for (int c : comps) CHECK(c == comps[0]);

  // two components: not a monoid system
  IdxTable comp(2, 2);
  comp(0, 0) = 0;
  comp(1, 1) = 1;
  BoolMatrix anti(2);
  anti.set(0, 0, true);
  anti.set(1, 1, true);
  const OrdGroupoid two =
      validate_ordered_groupoid({"e", "f"}, {0, 1}, {0, 1}, {0, 1}, comp, anti);
  CHECK_FALSE(is_affine_monoid_system(canonical_affine(two).system));
  CHECK_FALSE(is_cyclic(canonical_affine(two).system));  // no identity reaches both
}

TEST_CASE("morphisms of affine systems and the induced functor") {
  const OrdGroupoid zg = groupoid_of(gen_cyclic_group(2));
  const CanonicalAffine ca = canonical_affine(zg);

  std::vector<Idx> cat_id(ca.system.base.cat.size());
  for (Idx i = 0; i < ca.system.base.cat.size(); ++i) cat_id[i] = i;
  std::vector<Idx> gpd_id(ca.system.base.gpd.size());
  for (Idx i = 0; i < ca.system.base.gpd.size(); ++i) gpd_id[i] = i;
  const MorphismFlags flags = affine_morphism_check(ca.system, ca.system, cat_id, gpd_id);
  CHECK(flags.morphism);
  CHECK(flags.equivalence);
  const std::vector<Idx> bar = induced_functor(ca.system, ca.system, cat_id, gpd_id);
  for (size_t i = 0; i < bar.size(); ++i) CHECK(bar[i] == static_cast<Idx>(i));

  // collapsing two classes: still a morphism, but E2 fails
  const AffineSystem two_points =
      validate_affine(identity_action(discrete_groupoid({"u", "v"})));
  const AffineSystem one_point = validate_affine(identity_action(discrete_groupoid({"w"})));
  const MorphismFlags collapse =
      affine_morphism_check(two_points, one_point, {0}, {0, 0});
  CHECK(collapse.morphism);
  CHECK_FALSE(collapse.equivalence);
  const std::vector<Idx> bar2 = induced_functor(two_points, one_point, {0}, {0, 0});
  CHECK(bar2 == std::vector<Idx>{0, 0});
}

TEST_CASE("R* systems: free and trivial monoid actions") {
  // Z3 acting on itself by left multiplication (free)
  const FinCategory z3 = gen_monoid_category(3);
  SetAction sa;
  sa.cat = z3;
  sa.set_size = 3;
  sa.point_names = {"x0", "x1", "x2"};
  sa.pi = {0, 0, 0};
  sa.act = IdxTable(3, 3);
  for (Idx a = 0; a < 3; ++a)
    for (Idx x = 0; x < 3; ++x) sa.act(a, x) = (a + x) % 3;
  const GroupoidAction ga = rstar_system(sa);
  CHECK(ga.gpd.size() == 9);  // R* is total on the fiber
  const JGroupoid j = j_of(ga);
  CHECK(find_isomorphism(j.groupoid, groupoid_of(gen_cyclic_group(3))).has_value());

  // trivial action of a one-object category: R* total on each fiber
  SetAction tr;
  tr.cat = gen_monoid_category(2);
  tr.set_size = 2;
  tr.point_names = {"x", "y"};
  tr.pi = {0, 0};
  tr.act = IdxTable(2, 2);
  for (Idx a = 0; a < 2; ++a)
    for (Idx x = 0; x < 2; ++x) tr.act(a, x) = x;
  CHECK(rstar_system(tr).gpd.size() == 4);

  SetAction broken = tr;
  broken.act(1, 0) = 1;  // g.(g.x) = y but (gg).x = x
  CHECK_THROWS_WITH_AS(rstar_system(broken), doctest::Contains("NotASetAction"), ValidationError);
}

TEST_CASE("inverse semigroups with zero rebuild from their three ingredients") {
  // the 3-element semilattice 0 < e, 0 < f with a declared zero
  IdxTable t(3, 3, 0);
  t(1, 1) = 1;
  t(2, 2) = 2;
  const InvSemigroup vee = validate_inverse_semigroup({"0", "e", "f"}, t, Idx{0});
  CHECK(semigroup_from_affine(vee).all_pass());

  CHECK(semigroup_from_affine(gen_symmetric_inverse_monoid(2)).all_pass());
  CHECK(semigroup_from_affine(gen_brandt(2)).all_pass());

  CHECK_THROWS_WITH_AS(semigroup_from_affine(gen_cyclic_group(3)), doctest::Contains("NoZero"),
                       ValidationError);
}

TEST_CASE("lemma battery over the action corpus") {
  std::vector<GroupoidAction> corpus;
  corpus.push_back(identity_action(pair_groupoid(2)));
  corpus.push_back(canonical_affine(groupoid_of(gen_cyclic_group(3))).system.base);
  corpus.push_back(canonical_affine(groupoid_of(gen_chain_semilattice(3))).system.base);
  corpus.push_back(canonical_affine(groupoid_of(gen_symmetric_inverse_monoid(2))).system.base);
  corpus.push_back(orbit_condition_counterexample());
  corpus.push_back(rooted_affine_system(gen_monoid_category(3), 0).base);
  for (const auto& s : corpus) {
    const Report rep = lemma_report_affine(s);
    for (const auto& line : rep.lines) {
      INFO(line.name, ": ", line.detail);
      CHECK(line.pass);
    }
  }
}

TEST_CASE("R(G) of G(I2): carrier size matches the fiber count") {
  const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
  const CanonicalAffine ca = canonical_affine(g);
  // pairs share a codomain, so |R(G)| is the sum of squared fiber sizes
  long long expected = 0;
  for (Idx e : g.identities) {
    long long fiber = 0;
    for (Idx x = 0; x < g.size(); ++x)
      if (g.cod[x] == e) ++fiber;
    expected += fiber * fiber;
  }
  CHECK(static_cast<long long>(ca.pairs.size()) == expected);
  CHECK(expected == 13);
}

TEST_CASE("the bar embedding induces a morphism of canonical systems") {
  const OrdGroupoid g = groupoid_of(gen_chain_semilattice(2));
  const BarGroupoid bar = bar_groupoid(g);
  REQUIRE(bar.report.all_pass());
  const auto mis = maximal_identity_structure(g);
  REQUIRE(mis.circ.has_value());
  auto embed = [&](Idx x) {
    return bar.index.at({(*mis.circ)[g.cod[x]], x, (*mis.circ)[g.dom[x]]});
  };

  const CanonicalAffine small = canonical_affine(g);
  const CanonicalAffine big = canonical_affine(bar.groupoid);
  std::vector<Idx> cat_map(small.cat.category.size());
  for (Idx a = 0; a < small.cat.category.size(); ++a) {
    auto [x, e] = small.cat.arrows[a];
    cat_map[a] = big.cat.index_of(embed(x), embed(e));
  }
  std::vector<Idx> gpd_map(small.pairs.size());
  for (Idx i = 0; i < static_cast<Idx>(small.pairs.size()); ++i) {
    auto [x, y] = small.pairs[i];
    gpd_map[i] = big.pair_index(embed(x), embed(y));
  }
  const MorphismFlags flags = affine_morphism_check(small.system, big.system, cat_map, gpd_map);
  CHECK(flags.morphism);
  // the induced map on the quotients is an ordered functor (verified on
  // construction), matching the original embedding up to the quotient
  const std::vector<Idx> bar_map = induced_functor(small.system, big.system, cat_map, gpd_map);
  const JGroupoid j1 = j_of(small.system.base);
  const JGroupoid j2 = j_of(big.system.base);
  for (Idx x = 0; x < g.size(); ++x) {
    const Idx lhs = bar_map[j1.class_of[small.pair_index(g.cod[x], x)]];
    const Idx rhs = j2.class_of[big.pair_index(embed(g.cod[x]), embed(x))];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("in an affine system the equivalence is witnessed by isomorphisms") {
  const CanonicalAffine ca = canonical_affine(groupoid_of(gen_symmetric_inverse_monoid(2)));
  const auto& b = ca.system.base;
  for (Idx x = 0; x < b.gpd.size(); ++x)
    for (Idx y = 0; y < b.gpd.size(); ++y) {
      if (!(b.preceq(x, y) && b.preceq(y, x))) continue;
      bool via_iso = false;
      for (Idx u = 0; u < b.cat.size() && !via_iso; ++u)
        via_iso = b.cat.is_iso(u) && b.act_defined(u, y) && b.apply(u, y) == x;
      CHECK(via_iso);
    }
}
