#include "esnkit/ordered_groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "esnkit/error.hpp"

namespace esnkit {

namespace {

void check_groupoid_laws(const OrdGroupoid& g) {
  const int n = g.size();
  for (Idx x = 0; x < n; ++x) {
    if (g.dom[x] < 0 || g.dom[x] >= n || g.cod[x] < 0 || g.cod[x] >= n || g.inv[x] < 0 ||
        g.inv[x] >= n)
      throw ValidationError("SchemaError", "dom/cod/inv entry out of range", {x});
  }
  for (Idx x = 0; x < n; ++x) {
    if (!g.is_identity(g.dom[x]) || !g.is_identity(g.cod[x]))
      throw ValidationError("NotAGroupoid", "dom/cod of " + g.elements[x] + " is not an identity",
                            {x});
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const bool should = g.dom[x] == g.cod[y];
      if (should != g.comp.defined(x, y))
        throw ValidationError("NotAGroupoid",
                              "composition domain mismatch at " + g.elements[x] + ", " +
                                  g.elements[y],
                              {x, y});
      if (should) {
        const Idx z = g.comp(x, y);
        if (z < 0 || z >= n) throw ValidationError("SchemaError", "composition out of range", {x, y});
        if (g.dom[z] != g.dom[y] || g.cod[z] != g.cod[x])
          throw ValidationError("NotAGroupoid", "composition endpoints wrong", {x, y, z});
      }
    }
  for (Idx x = 0; x < n; ++x) {
    if (g.comp(x, g.dom[x]) != x || g.comp(g.cod[x], x) != x)
      throw ValidationError("NotAGroupoid", "identity law fails at " + g.elements[x], {x});
    if (g.comp(x, g.inv[x]) != g.cod[x] || g.comp(g.inv[x], x) != g.dom[x])
      throw ValidationError("NotAGroupoid", "inverse law fails at " + g.elements[x], {x});
    if (g.inv[g.inv[x]] != x)
      throw ValidationError("NotAGroupoid", "inversion not involutive at " + g.elements[x], {x});
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!g.composable(x, y)) continue;
      for (Idx z = 0; z < n; ++z) {
        if (!g.composable(y, z)) continue;
        if (g.comp(g.comp(x, y), z) != g.comp(x, g.comp(y, z)))
          throw ValidationError("NotAGroupoid", "composition not associative", {x, y, z});
      }
    }
}

void check_partial_order(const BoolMatrix& leq, int n) {
  for (Idx a = 0; a < n; ++a)
    if (!leq(a, a)) throw ValidationError("NotAPartialOrder", "not reflexive", {a});
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw ValidationError("NotAPartialOrder", "not antisymmetric", {a, b});
      if (leq(a, b))
        for (Idx c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw ValidationError("NotAPartialOrder", "not transitive", {a, b, c});
    }
}

void check_og1_og2(const OrdGroupoid& g) {
  const int n = g.size();
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (g.leq(x, y) && !g.leq(g.inv[x], g.inv[y]))
        throw ValidationError("OG1Violation",
                              g.elements[x] + " <= " + g.elements[y] + " but inverses are not",
                              {x, y});
  // sparse iteration: up-sets and costars keep this near the number of
  // actual comparable/composable tuples
  std::vector<std::vector<Idx>> ups(n), costar(n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (g.leq(a, b)) ups[a].push_back(b);
  for (Idx u = 0; u < n; ++u) costar[g.cod[u]].push_back(u);
  for (Idx x = 0; x < n; ++x)
    for (Idx y : ups[x])
      for (Idx u : costar[g.dom[x]])
        for (Idx v : ups[u])
          if (g.composable(y, v) && !g.leq(g.comp(x, u), g.comp(y, v)))
            throw ValidationError("OG2Violation", "products not comparable", {x, y, u, v});
}

void check_og3(const OrdGroupoid& g, bool dual) {
  const int n = g.size();
  for (Idx x = 0; x < n; ++x)
    for (Idx e : g.identities) {
      const Idx anchor = dual ? g.cod[x] : g.dom[x];
      if (!g.leq(e, anchor)) continue;
      Idx found = undef;
      for (Idx z = 0; z < n; ++z) {
        if (!g.leq(z, x)) continue;
        if ((dual ? g.cod[z] : g.dom[z]) != e) continue;
        if (found != undef)
          throw ValidationError(dual ? "OG3StarViolation" : "OG3Violation",
                                "two restrictions of " + g.elements[x] + " to " + g.elements[e],
                                {x, e, found, z});
        found = z;
      }
      if (found == undef)
        throw ValidationError(dual ? "OG3StarViolation" : "OG3Violation",
                              "no restriction of " + g.elements[x] + " to " + g.elements[e],
                              {x, e});
    }
}

void check_oi_og4(const OrdGroupoid& g) {
  const int n = g.size();
  for (Idx x = 0; x < n; ++x)
    for (Idx e : g.identities)
      if (g.leq(x, e) && !g.is_identity(x))
        throw ValidationError("OIViolation",
                              g.elements[x] + " <= identity " + g.elements[e] +
                                  " but is not an identity",
                              {x, e});
  for (Idx x = 0; x < n; ++x)
    for (Idx e : g.identities) {
      if (!g.leq(e, g.dom[x])) continue;
      bool found = false;
      for (Idx y = 0; y < n && !found; ++y) found = g.leq(y, x) && g.dom[y] == e;
      if (!found)
        throw ValidationError("OG4Violation",
                              "no element below " + g.elements[x] + " with domain " + g.elements[e],
                              {x, e});
    }
}

}  // namespace

OrdGroupoid validate_ordered_groupoid(std::vector<std::string> elements, std::vector<Idx> dom,
                                      std::vector<Idx> cod, std::vector<Idx> inv, IdxTable comp,
                                      BoolMatrix leq, OgAxioms axioms) {
  const int n = static_cast<int>(elements.size());
  if (n == 0 || comp.rows() != n || comp.cols() != n || leq.rows() != n || leq.cols() != n ||
      static_cast<int>(dom.size()) != n || static_cast<int>(cod.size()) != n ||
      static_cast<int>(inv.size()) != n)
    throw ValidationError("SchemaError", "groupoid tables must be square and consistent");

  OrdGroupoid g;
  g.elements = std::move(elements);
  g.dom = std::move(dom);
  g.cod = std::move(cod);
  g.inv = std::move(inv);
  g.comp = std::move(comp);
  g.leq = std::move(leq);
  g.identity.assign(n, 0);
  for (Idx x = 0; x < n; ++x)
    if (g.dom[x] == x && g.cod[x] == x) g.identity[x] = 1;
  for (Idx x = 0; x < n; ++x)
    if (g.identity[x]) g.identities.push_back(x);

  check_groupoid_laws(g);
  check_partial_order(g.leq, n);

  check_og1_og2(g);  // common to both axiom systems
  if (axioms == OgAxioms::Restriction || axioms == OgAxioms::Both) {
    check_og3(g, /*dual=*/false);
    check_og3(g, /*dual=*/true);  // provable from OG1+OG3, re-checked anyway
  }
  if (axioms == OgAxioms::OrderIdeal || axioms == OgAxioms::Both) {
    check_oi_og4(g);
  }

  // derived fact: the order restricted to hom-sets is trivial. A failure
  // past the axiom checks signals a bug in them.
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (x != y && g.leq(x, y) && g.dom[x] == g.dom[y] && g.cod[x] == g.cod[y])
        throw ValidationError("InternalInconsistency", "hom-set order not trivial", {x, y});

  return g;
}

Idx restriction(const OrdGroupoid& g, Idx x, Idx e) {
  if (!g.is_identity(e) || !g.leq(e, g.dom[x]))
    throw ValidationError("PreconditionFailed",
                          g.elements[e] + " is not an identity below dom " + g.elements[x], {x, e});
  // Validation guaranteed uniqueness, so the first hit is the answer.
  for (Idx z = 0; z < g.size(); ++z)
    if (g.leq(z, x) && g.dom[z] == e) return z;
  throw ValidationError("InternalInconsistency", "restriction vanished after validation", {x, e});
}

Idx corestriction(const OrdGroupoid& g, Idx e, Idx x) {
  if (!g.is_identity(e) || !g.leq(e, g.cod[x]))
    throw ValidationError("PreconditionFailed",
                          g.elements[e] + " is not an identity below cod " + g.elements[x], {x, e});
  const Idx via_inverse = g.inv[restriction(g, g.inv[x], e)];
  for (Idx z = 0; z < g.size(); ++z)
    if (g.leq(z, x) && g.cod[z] == e) {
      if (z != via_inverse)
        throw ValidationError("InternalInconsistency", "corestriction routes disagree",
                              {x, e, z, via_inverse});
      return z;
    }
  throw ValidationError("InternalInconsistency", "corestriction vanished", {x, e});
}

std::optional<Idx> identity_meet(const OrdGroupoid& g, Idx e, Idx f) {
  std::optional<Idx> best;
  for (Idx m : g.identities) {
    if (!g.leq(m, e) || !g.leq(m, f)) continue;
    if (!best || g.leq(*best, m)) best = m;
  }
  if (!best) return std::nullopt;
  // greatest, not merely maximal: every lower bound must sit below it
  for (Idx m : g.identities)
    if (g.leq(m, e) && g.leq(m, f) && !g.leq(m, *best)) return std::nullopt;
  return best;
}

std::optional<Idx> pseudoproduct(const OrdGroupoid& g, Idx x, Idx y) {
  std::optional<Idx> via_restriction;
  if (auto e = identity_meet(g, g.dom[x], g.cod[y]))
    via_restriction = g.comp(restriction(g, x, *e), corestriction(g, *e, y));

  // order-theoretic route: x (x) y exists iff <x,y> has a maximum
  // element, and then equals its product.
  std::optional<Idx> via_maximum;
  {
    std::vector<std::pair<Idx, Idx>> candidates;
    for (Idx a = 0; a < g.size(); ++a) {
      if (!g.leq(a, x)) continue;
      for (Idx b = 0; b < g.size(); ++b)
        if (g.leq(b, y) && g.composable(a, b)) candidates.emplace_back(a, b);
    }
    for (auto [a, b] : candidates) {
      bool maximum = true;
      for (auto [c, d] : candidates)
        if (!(g.leq(c, a) && g.leq(d, b))) {
          maximum = false;
          break;
        }
      if (maximum) {
        via_maximum = g.comp(a, b);
        break;
      }
    }
  }

  if (via_restriction.has_value() != via_maximum.has_value() ||
      (via_restriction && *via_restriction != *via_maximum))
    throw ValidationError("OracleMismatch",
                          "pseudoproduct characterizations disagree at " + g.elements[x] + ", " +
                              g.elements[y],
                          {x, y});
  return via_restriction;
}

bool is_inductive(const OrdGroupoid& g) {
  for (Idx e : g.identities)
    for (Idx f : g.identities)
      if (!identity_meet(g, e, f)) return false;
  return true;
}

bool is_star_inductive(const OrdGroupoid& g) {
  for (Idx e : g.identities)
    for (Idx f : g.identities) {
      bool bounded = false;
      for (Idx m : g.identities)
        if (g.leq(m, e) && g.leq(m, f)) {
          bounded = true;
          break;
        }
      if (bounded && !identity_meet(g, e, f)) return false;
    }
  return true;
}

FunctorFlags classify_functor(const OrdGroupoid& src, const OrdGroupoid& dst,
                              std::span<const Idx> map) {
  const int n = src.size();
  if (static_cast<int>(map.size()) != n)
    throw ValidationError("NotAFunctor", "map is not total");
  for (Idx x = 0; x < n; ++x)
    if (map[x] < 0 || map[x] >= dst.size())
      throw ValidationError("NotAFunctor", "image out of range", {x});
  for (Idx x = 0; x < n; ++x) {
    if (dst.dom[map[x]] != map[src.dom[x]] || dst.cod[map[x]] != map[src.cod[x]])
      throw ValidationError("NotAFunctor", "does not commute with dom/cod at " + src.elements[x],
                            {x});
    if (dst.inv[map[x]] != map[src.inv[x]])
      throw ValidationError("NotAFunctor", "does not commute with inversion", {x});
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (src.composable(x, y) && dst.comp(map[x], map[y]) != map[src.comp(x, y)])
        throw ValidationError("NotAFunctor", "does not preserve composition", {x, y});

  FunctorFlags flags;
  flags.ordered = true;
  for (Idx x = 0; x < n && flags.ordered; ++x)
    for (Idx y = 0; y < n && flags.ordered; ++y)
      if (src.leq(x, y) && !dst.leq(map[x], map[y])) flags.ordered = false;

  flags.ordered_embedding = flags.ordered;
  for (Idx x = 0; x < n && flags.ordered_embedding; ++x)
    for (Idx y = 0; y < n && flags.ordered_embedding; ++y)
      if (dst.leq(map[x], map[y]) && !src.leq(x, y)) flags.ordered_embedding = false;

  flags.star_injective = true;
  flags.star_bijective = true;
  for (Idx e : src.identities) {
    std::vector<Idx> star;
    for (Idx x = 0; x < n; ++x)
      if (src.dom[x] == e) star.push_back(x);
    for (size_t i = 0; i < star.size(); ++i)
      for (size_t j = i + 1; j < star.size(); ++j)
        if (map[star[i]] == map[star[j]]) flags.star_injective = false;
    for (Idx z = 0; z < dst.size(); ++z) {
      if (dst.dom[z] != map[e]) continue;
      bool hit = false;
      for (Idx x : star) hit = hit || map[x] == z;
      if (!hit) flags.star_bijective = false;
    }
  }
  flags.star_bijective = flags.star_bijective && flags.star_injective;

  flags.inductive = flags.ordered && is_inductive(src) && is_inductive(dst);
  if (flags.inductive)
    for (Idx e : src.identities)
      for (Idx f : src.identities) {
        const Idx m = *identity_meet(src, e, f);
        if (map[m] != *identity_meet(dst, map[e], map[f])) flags.inductive = false;
      }
  return flags;
}

namespace {

std::vector<char> as_mask(const OrdGroupoid& g, const std::vector<Idx>& members) {
  std::vector<char> mask(g.size(), 0);
  for (Idx x : members) {
    if (x < 0 || x >= g.size())
      throw ValidationError("SchemaError", "subset member out of range", {x});
    mask[x] = 1;
  }
  return mask;
}

}  // namespace

bool is_enlargement(const OrdGroupoid& h, const std::vector<Idx>& members) {
  const auto in = as_mask(h, members);
  for (Idx x = 0; x < h.size(); ++x) {
    if (!in[x]) continue;
    if (!in[h.inv[x]] || !in[h.dom[x]] || !in[h.cod[x]])
      throw ValidationError("NotAnOrderedSubgroupoid", "not closed under inverse/identities", {x});
    for (Idx y = 0; y < h.size(); ++y)
      if (in[y] && h.composable(x, y) && !in[h.comp(x, y)])
        throw ValidationError("NotAnOrderedSubgroupoid", "not closed under composition", {x, y});
    for (Idx e : h.identities)
      if (in[e] && h.leq(e, h.dom[x]) && !in[restriction(h, x, e)])
        throw ValidationError("NotAnOrderedSubgroupoid", "not closed under restriction", {x, e});
  }

  // GE1: the subset's identities form an order ideal of H's identities.
  for (Idx e : h.identities)
    for (Idx f : h.identities)
      if (in[f] && h.leq(e, f) && !in[e]) return false;
  // GE2: arrows of H with both endpoints in G lie in G.
  for (Idx x = 0; x < h.size(); ++x)
    if (!in[x] && in[h.dom[x]] && in[h.cod[x]]) return false;
  // GE3: every identity of H is the codomain of an arrow with domain in G.
  for (Idx e : h.identities) {
    bool reached = false;
    for (Idx x = 0; x < h.size() && !reached; ++x)
      reached = h.cod[x] == e && in[h.dom[x]];
    if (!reached) return false;
  }
  return true;
}

std::vector<int> d_classes(const OrdGroupoid& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Idx x = 0; x < g.size(); ++x) {
    parent[find(g.dom[x])] = find(g.cod[x]);
    parent[find(x)] = find(g.dom[x]);
  }
  std::vector<int> comp(g.size());
  for (Idx x = 0; x < g.size(); ++x) comp[x] = find(x);
  return comp;
}

MaximalIdentityStructure maximal_identity_structure(const OrdGroupoid& g) {
  MaximalIdentityStructure out;
  std::vector<char> maximal(g.size(), 0);
  for (Idx e : g.identities) {
    bool is_max = true;
    for (Idx f : g.identities)
      if (f != e && g.leq(e, f)) is_max = false;
    maximal[e] = is_max ? 1 : 0;
  }

  std::vector<Idx> circ(g.size(), undef);
  bool unique = true;
  for (Idx e : g.identities) {
    Idx found = undef;
    for (Idx m : g.identities)
      if (maximal[m] && g.leq(e, m)) {
        if (found != undef) unique = false;
        found = m;
      }
    circ[e] = found;
  }
  if (unique) out.circ = std::move(circ);

  const auto comp = d_classes(g);
  out.every_dclass_has_maximal = true;
  for (Idx e : g.identities) {
    bool has = false;
    for (Idx m : g.identities)
      if (maximal[m] && comp[m] == comp[e]) has = true;
    if (!has) out.every_dclass_has_maximal = false;
  }
  return out;
}

Report lemma_report_groupoid(const OrdGroupoid& g) {
  Report rep;
  const int n = g.size();

  {
    // (xy|e) = (x | r(y|e)) (y|e) and the dual, on all composable pairs.
    bool ok = true;
    std::string witness;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        if (!g.composable(x, y)) continue;
        const Idx xy = g.comp(x, y);
        for (Idx e : g.identities) {
          if (g.leq(e, g.dom[xy])) {
            const Idx ye = restriction(g, y, e);
            if (restriction(g, xy, e) != g.comp(restriction(g, x, g.cod[ye]), ye)) {
              ok = false;
              witness = g.elements[x] + "," + g.elements[y] + "," + g.elements[e];
            }
          }
          if (g.leq(e, g.cod[xy])) {
            const Idx ex = corestriction(g, e, x);
            if (corestriction(g, e, xy) != g.comp(ex, corestriction(g, g.dom[ex], y))) {
              ok = false;
              witness = g.elements[x] + "," + g.elements[y] + "," + g.elements[e];
            }
          }
        }
      }
    rep.add("restriction of a product factors through both terms", ok, witness);
  }

  {
    // z <= xy admits z = x'y' with x' <= x, y' <= y, built as in the proof.
    bool ok = true;
    std::string witness;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        if (!g.composable(x, y)) continue;
        const Idx xy = g.comp(x, y);
        for (Idx z = 0; z < n; ++z) {
          if (!g.leq(z, xy)) continue;
          const Idx y1 = restriction(g, y, g.dom[z]);
          const Idx x1 = restriction(g, x, g.cod[y1]);
          if (!(g.leq(x1, x) && g.leq(y1, y) && g.composable(x1, y1) && g.comp(x1, y1) == z)) {
            ok = false;
            witness = g.elements[z] + " below " + g.elements[x] + " " + g.elements[y];
          }
        }
      }
    rep.add("elements below a product factorize", ok, witness);
  }

  {
    // monotonicity of restriction in both arguments
    bool ok = true;
    std::string witness;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx e : g.identities) {
        if (!g.leq(e, g.dom[x])) continue;
        for (Idx f : g.identities)
          if (g.leq(f, e) && !g.leq(restriction(g, x, f), restriction(g, x, e))) {
            ok = false;
            witness = g.elements[x];
          }
      }
    // joint monotonicity: x <= y, f <= e, f <= dom(x), e <= dom(y) => (x|f) <= (y|e)
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        if (!g.leq(x, y)) continue;
        for (Idx e : g.identities) {
          if (!g.leq(e, g.dom[y])) continue;
          for (Idx f : g.identities)
            if (g.leq(f, e) && g.leq(f, g.dom[x]) &&
                !g.leq(restriction(g, x, f), restriction(g, y, e))) {
              ok = false;
              witness = g.elements[x] + " <= " + g.elements[y];
            }
        }
      }
    rep.add("restriction is monotone in both arguments", ok, witness);
  }

  {
    // pseudoproduct: the two characterizations agree on every pair (the
    // operation itself throws on mismatch), and associativity holds
    // wherever both bracketings exist.
    bool ok = true;
    std::string witness;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        try {
          pseudoproduct(g, x, y);
        } catch (const ValidationError&) {
          ok = false;
          witness = g.elements[x] + ", " + g.elements[y];
        }
      }
    rep.add("pseudoproduct oracle agreement (all pairs)", ok, witness);

    ok = true;
    witness.clear();
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y)
        for (Idx z = 0; z < n && ok; ++z) {
          auto yz = pseudoproduct(g, y, z);
          auto xy = pseudoproduct(g, x, y);
          if (!yz || !xy) continue;
          auto left = pseudoproduct(g, *xy, z);
          auto right = pseudoproduct(g, x, *yz);
          if (left && right && *left != *right) {
            ok = false;
            witness = g.elements[x] + "," + g.elements[y] + "," + g.elements[z];
          }
        }
    rep.add("pseudoproduct associative where both sides exist (all triples)", ok, witness);
  }

  return rep;
}

}  // namespace esnkit
