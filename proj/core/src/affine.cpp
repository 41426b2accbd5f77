#include "esnkit/affine.hpp"

#include <algorithm>

#include "esnkit/error.hpp"
#include "esnkit/esn.hpp"

namespace esnkit {

bool Groupoid::is_principal() const {
  for (Idx x = 0; x < size(); ++x)
    for (Idx y = 0; y < size(); ++y)
      if (x != y && dom[x] == dom[y] && cod[x] == cod[y]) return false;
  return true;
}

Groupoid validate_groupoid(std::vector<std::string> elements, std::vector<Idx> dom,
                           std::vector<Idx> cod, std::vector<Idx> inv, IdxTable comp) {
  const int n = static_cast<int>(elements.size());
  if (n == 0 || comp.rows() != n || comp.cols() != n || static_cast<int>(dom.size()) != n ||
      static_cast<int>(cod.size()) != n || static_cast<int>(inv.size()) != n)
    throw ValidationError("SchemaError", "groupoid tables must be square and consistent");

  Groupoid g;
  g.elements = std::move(elements);
  g.dom = std::move(dom);
  g.cod = std::move(cod);
  g.inv = std::move(inv);
  g.comp = std::move(comp);
  g.identity.assign(n, 0);
  for (Idx x = 0; x < n; ++x) {
    if (g.dom[x] < 0 || g.dom[x] >= n || g.cod[x] < 0 || g.cod[x] >= n || g.inv[x] < 0 ||
        g.inv[x] >= n)
      throw ValidationError("SchemaError", "dom/cod/inv entry out of range", {x});
    if (g.dom[x] == x && g.cod[x] == x) g.identity[x] = 1;
  }
  for (Idx x = 0; x < n; ++x)
    if (g.identity[x]) g.identities.push_back(x);

  for (Idx x = 0; x < n; ++x)
    if (!g.is_identity(g.dom[x]) || !g.is_identity(g.cod[x]))
      throw ValidationError("NotAGroupoid", "dom/cod is not an identity", {x});
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const bool should = g.dom[x] == g.cod[y];
      if (should != g.comp.defined(x, y))
        throw ValidationError("NotAGroupoid", "composition defined on the wrong pairs", {x, y});
      if (should) {
        const Idx z = g.comp(x, y);
        if (z < 0 || z >= n) throw ValidationError("SchemaError", "composition out of range", {x, y});
        if (g.dom[z] != g.dom[y] || g.cod[z] != g.cod[x])
          throw ValidationError("NotAGroupoid", "composition endpoints wrong", {x, y});
      }
    }
  for (Idx x = 0; x < n; ++x) {
    if (g.comp(x, g.dom[x]) != x || g.comp(g.cod[x], x) != x)
      throw ValidationError("NotAGroupoid", "identity law fails", {x});
    if (g.comp(x, g.inv[x]) != g.cod[x] || g.comp(g.inv[x], x) != g.dom[x])
      throw ValidationError("NotAGroupoid", "inverse law fails", {x});
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!g.composable(x, y)) continue;
      for (Idx z = 0; z < n; ++z)
        if (g.composable(y, z) && g.comp(g.comp(x, y), z) != g.comp(x, g.comp(y, z)))
          throw ValidationError("NotAGroupoid", "composition not associative", {x, y, z});
    }
  return g;
}

Groupoid strip_order(const OrdGroupoid& g) {
  return validate_groupoid(g.elements, g.dom, g.cod, g.inv, g.comp);
}

bool GroupoidAction::preceq(Idx x, Idx y) const {
  for (Idx a = 0; a < cat.size(); ++a)
    if (act_defined(a, y) && apply(a, y) == x) return true;
  return false;
}

std::vector<Idx> GroupoidAction::orbit(Idx x) const {
  std::vector<char> in(gpd.size(), 0);
  for (Idx a = 0; a < cat.size(); ++a)
    if (act_defined(a, x)) in[apply(a, x)] = 1;
  std::vector<Idx> out;
  for (Idx y = 0; y < gpd.size(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

GroupoidAction validate_action(FinCategory cat, Groupoid gpd, std::vector<Idx> pi, IdxTable act) {
  const int nc = cat.size();
  const int ng = gpd.size();
  if (static_cast<int>(pi.size()) != ng || act.rows() != nc || act.cols() != ng)
    throw ValidationError("SchemaError", "action tables have the wrong shape");
  if (static_cast<long long>(nc) * ng > 1000000)
    throw ValidationError("SizeTooLarge", "action table exceeds the desk-scale cap");
  for (Idx x = 0; x < ng; ++x)
    if (pi[x] < 0 || pi[x] >= nc || !cat.is_identity(pi[x]))
      throw ValidationError("SchemaError", "pi must map into the category identities", {x});

  GroupoidAction s;
  s.cat = std::move(cat);
  s.gpd = std::move(gpd);
  s.pi = std::move(pi);
  s.act = std::move(act);

  // the action is a function on C*G = {(a,x) : dom a = pi(x)}, no more
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < ng; ++x) {
      if (s.act_defined(a, x) != s.act.defined(a, x))
        throw ValidationError("AxiomViolation", "A0: action defined off C*G or missing on it",
                              {a, x});
      if (s.act.defined(a, x) && (s.act(a, x) < 0 || s.act(a, x) >= ng))
        throw ValidationError("SchemaError", "action entry out of range", {a, x});
    }

  for (Idx x = 0; x < ng; ++x)
    if (s.apply(s.pi[x], x) != x)
      throw ValidationError("AxiomViolation", "A1: pi(x).x != x at " + s.gpd.elements[x], {x});
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < ng; ++x)
      if (s.act_defined(a, x) && s.pi[s.apply(a, x)] != s.cat.cod[a])
        throw ValidationError("AxiomViolation", "A2: pi(a.x) != cod a", {a, x});
  for (Idx a = 0; a < nc; ++a)
    for (Idx b = 0; b < nc; ++b)
      for (Idx x = 0; x < ng; ++x) {
        const bool lhs = s.act_defined(b, x) && s.act_defined(a, s.apply(b, x));
        const bool rhs = s.cat.composable(a, b) && s.act_defined(s.cat.comp(a, b), x);
        if (lhs != rhs)
          throw ValidationError("AxiomViolation", "A3: existence sides differ", {a, b, x});
        if (lhs && s.apply(a, s.apply(b, x)) != s.apply(s.cat.comp(a, b), x))
          throw ValidationError("AxiomViolation", "A3: a.(b.x) != (ab).x", {a, b, x});
      }
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < ng; ++x) {
      const bool on_x = s.act_defined(a, x);
      if (on_x != s.act_defined(a, s.gpd.dom[x]) || on_x != s.act_defined(a, s.gpd.cod[x]))
        throw ValidationError("AxiomViolation", "A4: existence differs on endpoints", {a, x});
      if (on_x && (s.gpd.dom[s.apply(a, x)] != s.apply(a, s.gpd.dom[x]) ||
                   s.gpd.cod[s.apply(a, x)] != s.apply(a, s.gpd.cod[x])))
        throw ValidationError("AxiomViolation", "A4: endpoints not preserved", {a, x});
    }
  for (Idx x = 0; x < ng; ++x)
    for (Idx y = 0; y < ng; ++y)
      if (s.gpd.composable(x, y) && s.pi[x] == s.pi[y] && s.pi[s.gpd.comp(x, y)] != s.pi[x])
        throw ValidationError("AxiomViolation", "A5: pi not constant on products", {x, y});
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < ng; ++x)
      for (Idx y = 0; y < ng; ++y) {
        if (!s.gpd.composable(x, y)) continue;
        const Idx xy = s.gpd.comp(x, y);
        if (!s.act_defined(a, xy)) continue;
        if (!s.act_defined(a, x) || !s.act_defined(a, y) ||
            !s.gpd.composable(s.apply(a, x), s.apply(a, y)) ||
            s.gpd.comp(s.apply(a, x), s.apply(a, y)) != s.apply(a, xy))
          throw ValidationError("AxiomViolation", "A6: action not functorial on products",
                                {a, x, y});
      }
  if (!s.gpd.is_principal())
    throw ValidationError("AxiomViolation", "A7: the groupoid is not principal");
  for (Idx a = 0; a < nc; ++a)
    for (Idx b = 0; b < nc; ++b)
      for (Idx x = 0; x < ng; ++x) {
        if (!s.act_defined(a, x) || !s.act_defined(b, x)) continue;
        const Idx ax = s.apply(a, x), bx = s.apply(b, x);
        if ((s.gpd.dom[ax] == s.gpd.dom[bx]) != (s.gpd.cod[ax] == s.gpd.cod[bx]))
          throw ValidationError("AxiomViolation", "A8: endpoint collapse is one-sided", {a, b, x});
      }

  // derived consequences: pi-fibers are unions of connected components,
  // and identities act to identities
  for (Idx x = 0; x < ng; ++x)
    if (s.pi[s.gpd.dom[x]] != s.pi[x] || s.pi[s.gpd.cod[x]] != s.pi[x])
      throw ValidationError("InternalInconsistency", "pi-fibers split a component", {x});
  for (Idx a = 0; a < nc; ++a)
    for (Idx e : s.gpd.identities)
      if (s.act_defined(a, e) && !s.gpd.is_identity(s.apply(a, e)))
        throw ValidationError("InternalInconsistency", "identity acted to a non-identity", {a, e});
  return s;
}

AffineSystem validate_affine(GroupoidAction base) {
  if (!base.cat.right_cancellative)
    throw ValidationError("AxiomViolation", "affine: the category must be right cancellative");
  {
    std::vector<char> hit(base.cat.size(), 0);
    for (Idx x = 0; x < base.gpd.size(); ++x) hit[base.pi[x]] = 1;
    for (Idx e : base.cat.identities)
      if (!hit[e])
        throw ValidationError("AxiomViolation", "affine: pi is not surjective onto identities",
                              {e});
  }
  for (Idx a = 0; a < base.cat.size(); ++a)
    for (Idx b = 0; b < base.cat.size(); ++b)
      for (Idx x = 0; x < base.gpd.size(); ++x)
        if (a != b && base.act_defined(a, x) && base.act_defined(b, x) &&
            base.apply(a, x) == base.apply(b, x))
          throw ValidationError("AxiomViolation", "affine: right cancellation fails", {a, b, x});
  return AffineSystem{std::move(base)};
}

JGroupoid j_of(const GroupoidAction& s) {
  const int n = s.gpd.size();
  BoolMatrix pre(n);
  for (Idx y = 0; y < n; ++y)
    for (Idx a = 0; a < s.cat.size(); ++a)
      if (s.act_defined(a, y)) pre.set(s.apply(a, y), y, true);
  for (Idx x = 0; x < n; ++x)
    if (!pre(x, x))
      throw ValidationError("InternalInconsistency", "action preorder not reflexive", {x});
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (pre(x, y))
        for (Idx z = 0; z < n; ++z)
          if (pre(y, z) && !pre(x, z))
            throw ValidationError("InternalInconsistency", "action preorder not transitive",
                                  {x, y, z});

  JGroupoid out;
  out.class_of.assign(n, undef);
  for (Idx x = 0; x < n; ++x) {
    if (out.class_of[x] != undef) continue;
    const Idx id = static_cast<Idx>(out.rep.size());
    out.rep.push_back(x);
    out.class_of[x] = id;
    for (Idx y = x + 1; y < n; ++y)
      if (pre(x, y) && pre(y, x)) out.class_of[y] = id;
  }

  const int m = static_cast<int>(out.rep.size());
  std::vector<std::string> names;
  std::vector<Idx> dom(m), cod(m), inv(m);
  for (Idx i = 0; i < m; ++i) {
    names.push_back("[" + s.gpd.elements[out.rep[i]] + "]");
    dom[i] = out.class_of[s.gpd.dom[out.rep[i]]];
    cod[i] = out.class_of[s.gpd.cod[out.rep[i]]];
    inv[i] = out.class_of[s.gpd.inv[out.rep[i]]];
  }
  // the structure maps must be class invariants
  for (Idx x = 0; x < n; ++x) {
    const Idx i = out.class_of[x];
    if (dom[i] != out.class_of[s.gpd.dom[x]] || cod[i] != out.class_of[s.gpd.cod[x]] ||
        inv[i] != out.class_of[s.gpd.inv[x]])
      throw ValidationError("InternalInconsistency", "dom/cod/inv not class invariants", {x});
  }

  std::vector<std::vector<Idx>> members(m);
  for (Idx x = 0; x < n; ++x) members[out.class_of[x]].push_back(x);

  IdxTable comp(m, m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j) {
      if (dom[i] != cod[j]) continue;
      Idx result = undef;
      // the product class must be independent of every representative pair
      for (Idx x : members[i])
        for (Idx y : members[j]) {
          if (!s.gpd.composable(x, y)) continue;
          const Idx value = out.class_of[s.gpd.comp(x, y)];
          if (result == undef) result = value;
          if (result != value)
            throw ValidationError("InternalInconsistency",
                                  "J-product depends on representatives", {i, j, x, y});
        }
      if (result == undef)
        throw ValidationError("InternalInconsistency",
                              "composable classes admit no composable representatives", {i, j});
      comp(i, j) = result;
    }

  BoolMatrix leq(m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j) leq.set(i, j, pre(out.rep[i], out.rep[j]));

  out.groupoid = validate_ordered_groupoid(std::move(names), std::move(dom), std::move(cod),
                                           std::move(inv), std::move(comp), std::move(leq));
  return out;
}

bool orbit_condition(const GroupoidAction& s) {
  for (Idx e : s.gpd.identities)
    for (Idx f : s.gpd.identities) {
      const auto oe = s.orbit(e);
      const auto of = s.orbit(f);
      std::vector<Idx> inter;
      std::set_intersection(oe.begin(), oe.end(), of.begin(), of.end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      bool is_orbit = false;
      for (Idx i : s.gpd.identities)
        if (s.orbit(i) == inter) {
          is_orbit = true;
          break;
        }
      if (!is_orbit) return false;
    }
  return true;
}

Idx CanonicalAffine::pair_index(Idx x, Idx y) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
  if (it == pairs.end() || *it != std::make_pair(x, y))
    throw ValidationError("InternalInconsistency", "missing R(G) pair", {x, y});
  return static_cast<Idx>(it - pairs.begin());
}

CanonicalAffine canonical_affine(const OrdGroupoid& g) {
  CanonicalAffine out;
  out.cat = r_of(g);

  for (Idx x = 0; x < g.size(); ++x)
    for (Idx y = 0; y < g.size(); ++y)
      if (g.cod[x] == g.cod[y]) out.pairs.emplace_back(x, y);
  std::sort(out.pairs.begin(), out.pairs.end());
  const int np = static_cast<int>(out.pairs.size());

  std::vector<std::string> names;
  std::vector<Idx> dom(np), cod(np), inv(np);
  IdxTable comp(np, np);
  for (Idx i = 0; i < np; ++i) {
    auto [x, y] = out.pairs[i];
    names.push_back("(" + g.elements[x] + "," + g.elements[y] + ")");
    dom[i] = out.pair_index(y, y);
    cod[i] = out.pair_index(x, x);
    inv[i] = out.pair_index(y, x);
  }
  for (Idx i = 0; i < np; ++i)
    for (Idx j = 0; j < np; ++j) {
      auto [x, y] = out.pairs[i];
      auto [y2, z] = out.pairs[j];
      if (y == y2) comp(i, j) = out.pair_index(x, z);
    }
  Groupoid rg = validate_groupoid(std::move(names), std::move(dom), std::move(cod), std::move(inv),
                                  std::move(comp));

  std::vector<Idx> pi(np);
  for (Idx i = 0; i < np; ++i) {
    auto [x, y] = out.pairs[i];
    pi[i] = out.cat.index_of(g.cod[x], g.cod[x]);
  }
  IdxTable act(out.cat.category.size(), np);
  for (Idx a = 0; a < out.cat.category.size(); ++a) {
    auto [gelt, e] = out.cat.arrows[a];
    for (Idx i = 0; i < np; ++i) {
      auto [x, y] = out.pairs[i];
      if (e != g.cod[x]) continue;
      auto px = pseudoproduct(g, gelt, x);
      auto py = pseudoproduct(g, gelt, y);
      if (!px || !py)
        throw ValidationError("InternalInconsistency", "canonical action pseudoproduct vanished",
                              {a, i});
      act(a, i) = out.pair_index(*px, *py);
    }
  }
  out.system = validate_affine(
      validate_action(out.cat.category, std::move(rg), std::move(pi), std::move(act)));
  return out;
}

Report verify_canonical_universality(const OrdGroupoid& g) {
  Report rep;
  const CanonicalAffine ca = canonical_affine(g);
  rep.add("(R(G), R(G)) satisfies A1-A8 and the affine conditions", true);

  const JGroupoid j = j_of(ca.system.base);
  std::vector<Idx> alpha(g.size());
  for (Idx x = 0; x < g.size(); ++x) alpha[x] = j.class_of[ca.pair_index(g.cod[x], x)];

  bool bijective = j.groupoid.size() == g.size();
  {
    std::vector<char> seen(j.groupoid.size(), 0);
    for (Idx x = 0; x < g.size() && bijective; ++x) {
      if (seen[alpha[x]]) bijective = false;
      seen[alpha[x]] = 1;
    }
  }
  rep.add("alpha is a bijection", bijective,
          bijective ? "" : "sizes " + std::to_string(g.size()) + " vs " +
                               std::to_string(j.groupoid.size()));
  if (!bijective) throw ValidationError("Mismatch", "alpha is not a bijection");

  FunctorFlags flags = classify_functor(g, j.groupoid, alpha);
  rep.add("alpha is a functor", true);
  rep.add("alpha preserves and reflects the order", flags.ordered && flags.ordered_embedding);
  if (!flags.ordered || !flags.ordered_embedding)
    throw ValidationError("Mismatch", "alpha is not an order isomorphism");

  std::vector<Idx> beta(g.size());
  for (Idx x = 0; x < g.size(); ++x) beta[alpha[x]] = x;
  FunctorFlags back = classify_functor(j.groupoid, g, beta);
  rep.add("the inverse of alpha is an ordered functor", back.ordered);
  if (!back.ordered) throw ValidationError("Mismatch", "alpha inverse is not ordered");
  return rep;
}

namespace {

void check_groupoid_functor(const Groupoid& src, const Groupoid& dst, const std::vector<Idx>& map) {
  if (static_cast<int>(map.size()) != src.size())
    throw ValidationError("NotAFunctor", "groupoid map is not total");
  for (Idx x = 0; x < src.size(); ++x) {
    if (map[x] < 0 || map[x] >= dst.size())
      throw ValidationError("NotAFunctor", "image out of range", {x});
    if (dst.dom[map[x]] != map[src.dom[x]] || dst.cod[map[x]] != map[src.cod[x]])
      throw ValidationError("NotAFunctor", "groupoid dom/cod not preserved", {x});
  }
  for (Idx x = 0; x < src.size(); ++x)
    for (Idx y = 0; y < src.size(); ++y)
      if (src.composable(x, y) && dst.comp(map[x], map[y]) != map[src.comp(x, y)])
        throw ValidationError("NotAFunctor", "groupoid composition not preserved", {x, y});
}

}  // namespace

MorphismFlags affine_morphism_check(const AffineSystem& s1, const AffineSystem& s2,
                                    const std::vector<Idx>& cat_map,
                                    const std::vector<Idx>& gpd_map) {
  check_functor(s1.base.cat, s2.base.cat, cat_map);
  check_groupoid_functor(s1.base.gpd, s2.base.gpd, gpd_map);

  MorphismFlags flags;
  flags.morphism = true;
  for (Idx a = 0; a < s1.base.cat.size() && flags.morphism; ++a)
    for (Idx x = 0; x < s1.base.gpd.size() && flags.morphism; ++x) {
      if (!s1.base.act_defined(a, x)) continue;
      if (!s2.base.act_defined(cat_map[a], gpd_map[x]) ||
          gpd_map[s1.base.apply(a, x)] != s2.base.apply(cat_map[a], gpd_map[x]))
        flags.morphism = false;
    }
  if (!flags.morphism)
    throw ValidationError("NotAMorphism", "the functor pair is not compatible with the actions");

  const bool e1 = is_equivalence(s1.base.cat, s2.base.cat, cat_map);
  bool e2 = true;
  for (Idx x = 0; x < s1.base.gpd.size() && e2; ++x)
    for (Idx y = 0; y < s1.base.gpd.size() && e2; ++y)
      if (s2.base.preceq(gpd_map[x], gpd_map[y]) && !s1.base.preceq(x, y)) e2 = false;
  bool e3 = true;
  for (Idx y = 0; y < s2.base.gpd.size() && e3; ++y) {
    bool hit = false;
    for (Idx x = 0; x < s1.base.gpd.size() && !hit; ++x)
      hit = s2.base.preceq(y, gpd_map[x]) && s2.base.preceq(gpd_map[x], y);
    e3 = hit;
  }
  flags.equivalence = e1 && e2 && e3;
  return flags;
}

std::vector<Idx> induced_functor(const AffineSystem& s1, const AffineSystem& s2,
                                 const std::vector<Idx>& cat_map,
                                 const std::vector<Idx>& gpd_map) {
  const MorphismFlags flags = affine_morphism_check(s1, s2, cat_map, gpd_map);
  const JGroupoid j1 = j_of(s1.base);
  const JGroupoid j2 = j_of(s2.base);
  std::vector<Idx> bar(j1.groupoid.size());
  for (Idx i = 0; i < j1.groupoid.size(); ++i) bar[i] = j2.class_of[gpd_map[j1.rep[i]]];
  // well-defined: every member of the class lands in the same image class
  for (Idx x = 0; x < s1.base.gpd.size(); ++x)
    if (bar[j1.class_of[x]] != j2.class_of[gpd_map[x]])
      throw ValidationError("InternalInconsistency", "induced map not class invariant", {x});

  FunctorFlags f = classify_functor(j1.groupoid, j2.groupoid, bar);
  if (!f.ordered)
    throw ValidationError("InternalInconsistency", "induced functor is not ordered");
  if (flags.equivalence) {
    bool bijective = j1.groupoid.size() == j2.groupoid.size();
    std::vector<char> seen(j2.groupoid.size(), 0);
    for (Idx i = 0; i < j1.groupoid.size() && bijective; ++i) {
      if (seen[bar[i]]) bijective = false;
      seen[bar[i]] = 1;
    }
    if (!bijective || !f.ordered_embedding)
      throw ValidationError("InternalInconsistency",
                            "equivalence did not induce an isomorphism of ordered groupoids");
  }
  return bar;
}

bool is_cyclic(const AffineSystem& s) {
  const auto& b = s.base;
  std::vector<Idx> all_identities = b.gpd.identities;
  for (Idx x0 : all_identities) {
    if (b.orbit(x0) != all_identities) continue;  // C1
    bool c2 = true;
    for (Idx a = 0; a < b.cat.size() && c2; ++a)
      for (Idx b2 = 0; b2 < b.cat.size() && c2; ++b2) {
        if (b.cat.cod[a] != b.cat.cod[b2] || b.cat.dom[a] != b.pi[x0] ||
            b.cat.dom[b2] != b.pi[x0])
          continue;
        bool hit = false;
        for (Idx gelt = 0; gelt < b.gpd.size() && !hit; ++gelt)
          hit = b.gpd.cod[gelt] == b.apply(a, x0) && b.gpd.dom[gelt] == b.apply(b2, x0);
        c2 = hit;
      }
    if (c2) return true;
  }
  return false;
}

bool is_affine_monoid_system(const AffineSystem& s) {
  if (s.base.cat.identities.size() != 1) return false;
  // universal principal groupoid: exactly one arrow per ordered pair
  for (Idx e : s.base.gpd.identities)
    for (Idx f : s.base.gpd.identities) {
      int arrows = 0;
      for (Idx x = 0; x < s.base.gpd.size(); ++x)
        if (s.base.gpd.dom[x] == e && s.base.gpd.cod[x] == f) ++arrows;
      if (arrows != 1) return false;
    }
  return true;
}

GroupoidAction rstar_system(const SetAction& s) {
  const int nc = s.cat.size();
  const int nx = s.set_size;
  if (static_cast<int>(s.pi.size()) != nx || s.act.rows() != nc || s.act.cols() != nx)
    throw ValidationError("SchemaError", "set action tables have the wrong shape");
  for (Idx x = 0; x < nx; ++x)
    if (s.pi[x] < 0 || s.pi[x] >= nc || !s.cat.is_identity(s.pi[x]))
      throw ValidationError("NotASetAction", "pi must map into the category identities", {x});
  auto defined = [&](Idx a, Idx x) { return s.cat.dom[a] == s.pi[x]; };
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < nx; ++x) {
      if (defined(a, x) != s.act.defined(a, x))
        throw ValidationError("NotASetAction", "action defined off C*X or missing on it", {a, x});
      if (s.act.defined(a, x) && (s.act(a, x) < 0 || s.act(a, x) >= nx))
        throw ValidationError("SchemaError", "action entry out of range", {a, x});
    }
  for (Idx x = 0; x < nx; ++x)
    if (s.act(s.pi[x], x) != x)
      throw ValidationError("NotASetAction", "A1: pi(x).x != x", {x});
  for (Idx a = 0; a < nc; ++a)
    for (Idx x = 0; x < nx; ++x)
      if (defined(a, x) && s.pi[s.act(a, x)] != s.cat.cod[a])
        throw ValidationError("NotASetAction", "A2: pi(a.x) != cod a", {a, x});
  for (Idx a = 0; a < nc; ++a)
    for (Idx b = 0; b < nc; ++b)
      for (Idx x = 0; x < nx; ++x) {
        const bool lhs = defined(b, x) && defined(a, s.act(b, x));
        const bool rhs = s.cat.composable(a, b) && defined(s.cat.comp(a, b), x);
        if (lhs != rhs) throw ValidationError("NotASetAction", "A3: existence sides differ",
                                              {a, b, x});
        if (lhs && s.act(a, s.act(b, x)) != s.act(s.cat.comp(a, b), x))
          throw ValidationError("NotASetAction", "A3: a.(b.x) != (ab).x", {a, b, x});
      }

  // R*: same anchor and the same collapsing behaviour under every pair
  BoolMatrix rstar(nx);
  for (Idx x = 0; x < nx; ++x)
    for (Idx y = 0; y < nx; ++y) {
      if (s.pi[x] != s.pi[y]) continue;
      bool same = true;
      for (Idx a = 0; a < nc && same; ++a) {
        if (!defined(a, x)) continue;
        for (Idx b = 0; b < nc && same; ++b) {
          if (!defined(b, x)) continue;
          same = (s.act(a, x) == s.act(b, x)) == (s.act(a, y) == s.act(b, y));
        }
      }
      rstar.set(x, y, same);
    }
  for (Idx c = 0; c < nc; ++c)
    for (Idx x = 0; x < nx; ++x)
      for (Idx y = 0; y < nx; ++y)
        if (rstar(x, y) && defined(c, x) && !rstar(s.act(c, x), s.act(c, y)))
          throw ValidationError("InternalInconsistency", "R* is not action invariant", {c, x, y});

  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx x = 0; x < nx; ++x)
    for (Idx y = 0; y < nx; ++y)
      if (rstar(x, y)) pairs.emplace_back(x, y);
  auto pair_index = [&](Idx x, Idx y) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
    return static_cast<Idx>(it - pairs.begin());
  };
  const int np = static_cast<int>(pairs.size());
  std::vector<std::string> names;
  std::vector<Idx> dom(np), cod(np), inv(np), pi2(np);
  IdxTable comp(np, np), act2(nc, np);
  for (Idx i = 0; i < np; ++i) {
    auto [x, y] = pairs[i];
    names.push_back("(" + s.point_names[x] + "," + s.point_names[y] + ")");
    dom[i] = pair_index(y, y);
    cod[i] = pair_index(x, x);
    inv[i] = pair_index(y, x);
    pi2[i] = s.pi[x];
  }
  for (Idx i = 0; i < np; ++i)
    for (Idx j = 0; j < np; ++j) {
      auto [x, y] = pairs[i];
      auto [y2, z] = pairs[j];
      if (y == y2) comp(i, j) = pair_index(x, z);
    }
  for (Idx a = 0; a < nc; ++a)
    for (Idx i = 0; i < np; ++i) {
      auto [x, y] = pairs[i];
      if (s.cat.dom[a] != s.pi[x]) continue;
      act2(a, i) = pair_index(s.act(a, x), s.act(a, y));
    }
  Groupoid gg = validate_groupoid(std::move(names), std::move(dom), std::move(cod), std::move(inv),
                                  std::move(comp));
  return validate_action(s.cat, std::move(gg), std::move(pi2), std::move(act2));
}

OrdGroupoid nonzero_groupoid(const InvSemigroup& s) {
  if (!s.zero) throw ValidationError("NoZero", "expected an inverse semigroup with zero");
  std::vector<Idx> keep;
  for (Idx a = 0; a < s.size(); ++a)
    if (a != *s.zero) keep.push_back(a);
  const int n = static_cast<int>(keep.size());
  if (n == 0) throw ValidationError("SchemaError", "nothing left after removing the zero");
  std::vector<Idx> pos(s.size(), undef);
  for (Idx i = 0; i < n; ++i) pos[keep[i]] = i;

  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n), inv(n);
  IdxTable comp(n, n);
  BoolMatrix leq(n);
  for (Idx i = 0; i < n; ++i) {
    const Idx a = keep[i];
    names.push_back(s.elements[a]);
    dom[i] = pos[s.mul(s.inv[a], a)];
    cod[i] = pos[s.mul(a, s.inv[a])];
    inv[i] = pos[s.inv[a]];
    for (Idx j = 0; j < n; ++j) {
      const Idx b = keep[j];
      if (auto r = restricted_product(s, a, b)) comp(i, j) = pos[*r];
      leq.set(i, j, s.leq(a, b));
    }
  }
  return validate_ordered_groupoid(std::move(names), std::move(dom), std::move(cod),
                                   std::move(inv), std::move(comp), std::move(leq));
}

Report semigroup_from_affine(const InvSemigroup& s) {
  Report rep;
  const OrdGroupoid g = nonzero_groupoid(s);
  const CanonicalAffine ca = canonical_affine(g);
  const JGroupoid j = j_of(ca.system.base);
  const InvSemigroup rebuilt = semigroup_of_with_zero(j.groupoid);
  rep.add("rebuilt inverse semigroup with zero validates", true);
  rep.add("carrier sizes match", rebuilt.size() == s.size());
  if (rebuilt.size() != s.size()) return rep;

  // the explicit isomorphism: 0 -> 0, a -> the class of (cod a, a), shifted
  // past the adjoined zero
  std::vector<Idx> map(s.size());
  std::vector<Idx> pos(s.size(), undef);
  {
    Idx i = 0;
    for (Idx a = 0; a < s.size(); ++a)
      if (a != *s.zero) pos[a] = i++;
  }
  for (Idx a = 0; a < s.size(); ++a) {
    if (a == *s.zero) {
      map[a] = 0;
      continue;
    }
    const Idx x = pos[a];
    map[a] = 1 + j.class_of[ca.pair_index(g.cod[x], x)];
  }
  bool bijective = true;
  std::vector<char> seen(rebuilt.size(), 0);
  for (Idx a = 0; a < s.size(); ++a) {
    if (seen[map[a]]) bijective = false;
    seen[map[a]] = 1;
  }
  rep.add("the canonical map is a bijection", bijective);
  bool hom = bijective;
  std::string witness;
  for (Idx a = 0; a < s.size() && hom; ++a)
    for (Idx b = 0; b < s.size() && hom; ++b)
      if (map[s.mul(a, b)] != rebuilt.mul(map[a], map[b])) {
        hom = false;
        witness = s.elements[a] + " * " + s.elements[b];
      }
  rep.add("the canonical map is an isomorphism", hom, witness);
  return rep;
}

Report lemma_report_affine(const GroupoidAction& s) {
  Report rep;
  const int n = s.gpd.size();

  {
    // A7+A8 consequence: collapsing domains forces equal actions.
    bool ok = true;
    for (Idx a = 0; a < s.cat.size() && ok; ++a)
      for (Idx b = 0; b < s.cat.size() && ok; ++b)
        for (Idx x = 0; x < n && ok; ++x) {
          if (!s.act_defined(a, x) || !s.act_defined(b, x)) continue;
          const Idx ax = s.apply(a, x), bx = s.apply(b, x);
          if (s.gpd.dom[ax] == s.gpd.dom[bx] && ax != bx) ok = false;
        }
    rep.add("equal domains force equal actions (A7+A8)", ok);
  }

  {
    // x equiv y iff the orbits coincide
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        const bool equiv = s.preceq(x, y) && s.preceq(y, x);
        const bool orbits = s.orbit(x) == s.orbit(y);
        ok = equiv == orbits;
      }
    rep.add("equivalence classes are exactly equal orbits", ok);
  }

  const JGroupoid j = j_of(s);  // throws on any well-definedness failure
  rep.add("J-product is representative independent (exhaustive)", true);
  rep.add("J validates as an ordered groupoid", true);

  {
    // restriction in J is realized by the action: ([x]|[e]) = [a.x]
    bool ok = true;
    for (Idx i = 0; i < j.groupoid.size() && ok; ++i)
      for (Idx e : j.groupoid.identities) {
        if (!j.groupoid.leq(e, j.groupoid.dom[i])) continue;
        const Idx want = restriction(j.groupoid, i, e);
        const Idx x = j.rep[i];
        for (Idx a = 0; a < s.cat.size(); ++a) {
          if (!s.act_defined(a, s.gpd.dom[x])) continue;
          if (j.class_of[s.apply(a, s.gpd.dom[x])] != e) continue;
          if (j.class_of[s.apply(a, x)] != want) ok = false;
        }
      }
    rep.add("restriction in J is realized by the action", ok);
  }

  {
    // Pseudoproduct through orbit selectors agrees with the restriction
    // formula, for every valid selector choice.
    bool ok = true;
    for (Idx i = 0; i < j.groupoid.size() && ok; ++i)
      for (Idx k = 0; k < j.groupoid.size() && ok; ++k) {
        const auto direct = pseudoproduct(j.groupoid, i, k);
        if (!direct) continue;
        const Idx meet = *identity_meet(j.groupoid, j.groupoid.dom[i], j.groupoid.cod[k]);
        const Idx x = j.rep[i], y = j.rep[k];
        // selectors a with a.(cod y) in [meet] and b with b.(dom x) in [meet]
        for (Idx a = 0; a < s.cat.size() && ok; ++a) {
          if (!s.act_defined(a, s.gpd.cod[y]) ||
              j.class_of[s.apply(a, s.gpd.cod[y])] != meet)
            continue;
          for (Idx b = 0; b < s.cat.size() && ok; ++b) {
            if (!s.act_defined(b, s.gpd.dom[x]) ||
                j.class_of[s.apply(b, s.gpd.dom[x])] != meet)
              continue;
            const Idx xr = s.apply(b, x);
            const Idx yr = s.apply(a, y);
            if (!s.gpd.composable(xr, yr)) continue;
            if (j.class_of[s.gpd.comp(xr, yr)] != *direct) ok = false;
          }
        }
      }
    rep.add("selector pseudoproduct agrees for every selector choice", ok);
  }

  rep.add("orbit condition iff J is *-inductive",
          orbit_condition(s) == is_star_inductive(j.groupoid));
  return rep;
}

}  // namespace esnkit
