#include "esnkit/cancellative.hpp"

#include <algorithm>

#include "esnkit/error.hpp"
#include "esnkit/esn.hpp"

namespace esnkit {

namespace {

// Shared span-groupoid builder. `pairs` lists U; the isomorphism action is
// on the right for G(C) and on the left for G'(C).
SpanGroupoid build_span_groupoid(const FinCategory& c, bool right_action,
                                 const std::vector<std::pair<Idx, Idx>>& pairs,
                                 bool expect_dclass_maximal = true) {
  std::vector<Idx> isos;
  for (Idx u = 0; u < c.size(); ++u)
    if (c.is_iso(u)) isos.push_back(u);

  auto translate = [&](std::pair<Idx, Idx> p, Idx u) -> std::optional<std::pair<Idx, Idx>> {
    if (right_action) {
      if (!c.composable(p.first, u)) return std::nullopt;
      return std::make_pair(c.comp(p.first, u), c.comp(p.second, u));
    }
    if (!c.composable(u, p.first)) return std::nullopt;
    return std::make_pair(c.comp(u, p.first), c.comp(u, p.second));
  };

  SpanGroupoid out;
  for (auto p : pairs) {
    std::pair<Idx, Idx> canon = p;
    for (Idx u : isos)
      if (auto q = translate(p, u); q && *q < canon) canon = *q;
    out.index[p] = undef;  // fill after reps are numbered
    if (canon == p) out.reps.push_back(p);
  }
  std::sort(out.reps.begin(), out.reps.end());
  std::map<std::pair<Idx, Idx>, Idx> rep_id;
  for (Idx i = 0; i < static_cast<Idx>(out.reps.size()); ++i) rep_id[out.reps[i]] = i;
  for (auto p : pairs) {
    std::pair<Idx, Idx> canon = p;
    for (Idx u : isos)
      if (auto q = translate(p, u); q && *q < canon) canon = *q;
    out.index[p] = rep_id.at(canon);
  }

  const int n = static_cast<int>(out.reps.size());
  if (n > conversion_cap())
    throw ValidationError("SizeTooLarge", "span groupoid exceeds the conversion cap");
  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n), inv(n);
  for (Idx i = 0; i < n; ++i) {
    auto [a, b] = out.reps[i];
    names.push_back("[" + c.arrows[a] + "," + c.arrows[b] + "]");
    dom[i] = out.index.at({b, b});
    cod[i] = out.index.at({a, a});
    inv[i] = out.index.at({b, a});
  }

  IdxTable comp(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      if (dom[i] != cod[j]) continue;
      auto [a, b] = out.reps[i];
      auto [cc, d] = out.reps[j];
      Idx result = undef;
      for (Idx u : isos) {
        if (right_action) {
          if (c.composable(cc, u) && c.comp(cc, u) == b) {
            result = out.index.at({a, c.comp(d, u)});
            break;
          }
        } else {
          if (c.composable(u, cc) && c.comp(u, cc) == b) {
            result = out.index.at({a, c.comp(u, d)});
            break;
          }
        }
      }
      if (result == undef)
        throw ValidationError("InternalInconsistency", "no isomorphism links composable spans",
                              {i, j});
      comp(i, j) = result;
    }

  BoolMatrix leq(n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      auto [a, b] = out.reps[i];
      auto [cc, d] = out.reps[j];
      bool le = false;
      for (Idx p = 0; p < c.size() && !le; ++p) {
        if (right_action)
          le = c.composable(cc, p) && c.comp(cc, p) == a && c.composable(d, p) && c.comp(d, p) == b;
        else
          le = c.composable(p, cc) && c.comp(p, cc) == a && c.composable(p, d) && c.comp(p, d) == b;
      }
      leq.set(i, j, le);
    }

  out.groupoid = validate_ordered_groupoid(std::move(names), std::move(dom), std::move(cod),
                                           std::move(inv), std::move(comp), std::move(leq));

  // Maximal identities with the circ map [a,a]° = [cod a, cod a] (domain
  // side for the dual), and a maximal identity in every D-class.
  const auto mis = maximal_identity_structure(out.groupoid);
  if (!mis.circ || (expect_dclass_maximal && !mis.every_dclass_has_maximal))
    throw ValidationError("InternalInconsistency", "span groupoid lost its maximal identities");
  for (Idx i = 0; i < n; ++i) {
    if (!out.groupoid.is_identity(i)) continue;
    auto [a, b] = out.reps[i];
    const Idx anchor = right_action ? c.cod[a] : c.dom[a];
    if ((*mis.circ)[i] != out.index.at({anchor, anchor}))
      throw ValidationError("InternalInconsistency", "maximal identity map disagrees", {i});
  }
  return out;
}

}  // namespace

SpanGroupoid g_of_left(const FinCategory& c) {
  if (!c.left_cancellative)
    throw ValidationError("NotLeftCancellative", "the span construction needs left cancellation");
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (c.dom[a] == c.dom[b]) pairs.emplace_back(a, b);
  return build_span_groupoid(c, /*right_action=*/true, pairs);
}

SpanGroupoid g_of_right(const FinCategory& c) {
  if (!c.right_cancellative)
    throw ValidationError("NotRightCancellative", "the dual span construction needs right cancellation");
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (c.cod[a] == c.cod[b]) pairs.emplace_back(a, b);
  return build_span_groupoid(c, /*right_action=*/false, pairs);
}

LeechCategory l_of(const OrdGroupoid& g) {
  LeechCategory out;
  for (Idx e : g.identities)
    for (Idx x = 0; x < g.size(); ++x)
      if (g.leq(g.cod[x], e)) out.arrows.emplace_back(e, x);
  std::sort(out.arrows.begin(), out.arrows.end());
  const int n = static_cast<int>(out.arrows.size());
  if (n > conversion_cap())
    throw ValidationError("SizeTooLarge", "L(G) exceeds the conversion cap");
  for (Idx i = 0; i < n; ++i) out.index[out.arrows[i]] = i;

  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n);
  for (Idx i = 0; i < n; ++i) {
    auto [e, x] = out.arrows[i];
    names.push_back("(" + g.elements[e] + "," + g.elements[x] + ")");
    dom[i] = out.index.at({g.dom[x], g.dom[x]});
    cod[i] = out.index.at({e, e});
  }
  IdxTable comp(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      if (dom[i] != cod[j]) continue;
      auto [e, x] = out.arrows[i];
      auto [f, y] = out.arrows[j];
      auto p = pseudoproduct(g, x, y);
      if (!p)
        throw ValidationError("InternalInconsistency", "pseudoproduct vanished in L(G)", {i, j});
      comp(i, j) = out.index.at({e, *p});
    }
  out.category = validate_category(std::move(names), std::move(dom), std::move(cod),
                                   std::move(comp));
  if (!out.category.left_cancellative)
    throw ValidationError("InternalInconsistency", "L(G) must be left cancellative");

  // invertible arrows are exactly (cod x, x) and form a copy of G
  out.unit_embedding.resize(g.size());
  for (Idx x = 0; x < g.size(); ++x) out.unit_embedding[x] = out.index.at({g.cod[x], x});
  for (Idx i = 0; i < n; ++i) {
    auto [e, x] = out.arrows[i];
    if (out.category.is_iso(i) != (e == g.cod[x]))
      throw ValidationError("InternalInconsistency", "invertible arrows of L(G) are wrong", {i});
  }
  for (Idx x = 0; x < g.size(); ++x)
    for (Idx y = 0; y < g.size(); ++y) {
      const Idx ix = out.unit_embedding[x];
      const Idx iy = out.unit_embedding[y];
      const bool in_g = g.composable(x, y);
      const bool in_l = out.category.composable(ix, iy);
      if (in_g != in_l ||
          (in_g && out.category.comp(ix, iy) != out.unit_embedding[g.comp(x, y)]))
        throw ValidationError("InternalInconsistency", "unit embedding is not an isomorphism",
                              {x, y});
    }
  return out;
}

LeechCategory r_of(const OrdGroupoid& g) {
  LeechCategory out;
  for (Idx x = 0; x < g.size(); ++x)
    for (Idx e : g.identities)
      if (g.leq(g.dom[x], e)) out.arrows.emplace_back(x, e);
  std::sort(out.arrows.begin(), out.arrows.end());
  const int n = static_cast<int>(out.arrows.size());
  if (n > conversion_cap())
    throw ValidationError("SizeTooLarge", "R(G) exceeds the conversion cap");
  for (Idx i = 0; i < n; ++i) out.index[out.arrows[i]] = i;

  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n);
  for (Idx i = 0; i < n; ++i) {
    auto [x, e] = out.arrows[i];
    names.push_back("(" + g.elements[x] + "," + g.elements[e] + ")");
    dom[i] = out.index.at({e, e});
    cod[i] = out.index.at({g.cod[x], g.cod[x]});
  }
  IdxTable comp(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      if (dom[i] != cod[j]) continue;
      auto [x, e] = out.arrows[i];
      auto [y, f] = out.arrows[j];
      auto p = pseudoproduct(g, x, y);
      if (!p)
        throw ValidationError("InternalInconsistency", "pseudoproduct vanished in R(G)", {i, j});
      comp(i, j) = out.index.at({*p, f});
    }
  out.category = validate_category(std::move(names), std::move(dom), std::move(cod),
                                   std::move(comp));
  if (!out.category.right_cancellative)
    throw ValidationError("InternalInconsistency", "R(G) must be right cancellative");

  out.unit_embedding.resize(g.size());
  for (Idx x = 0; x < g.size(); ++x) out.unit_embedding[x] = out.index.at({x, g.dom[x]});

  // theta(e,x) = (x^-1, e) is an isomorphism L(G)^op -> R(G)
  const LeechCategory l = l_of(g);
  if (l.category.size() != n)
    throw ValidationError("InternalInconsistency", "L(G) and R(G) sizes differ");
  std::vector<Idx> theta(n);
  for (Idx i = 0; i < n; ++i) {
    auto [e, x] = l.arrows[i];
    theta[i] = out.index.at({g.inv[x], e});
  }
  std::vector<char> seen(n, 0);
  for (Idx i = 0; i < n; ++i) {
    if (seen[theta[i]])
      throw ValidationError("InternalInconsistency", "theta is not injective", {i});
    seen[theta[i]] = 1;
  }
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      const bool in_l = l.category.composable(i, j);
      const bool in_r = out.category.composable(theta[j], theta[i]);
      if (in_l != in_r)
        throw ValidationError("InternalInconsistency", "theta breaks composability", {i, j});
      if (in_l && out.category.comp(theta[j], theta[i]) != theta[l.category.comp(i, j)])
        throw ValidationError("InternalInconsistency", "theta is not an anti-isomorphism", {i, j});
    }
  return out;
}

Report verify_lg_roundtrip(const FinCategory& c) {
  Report rep;
  const SpanGroupoid g = g_of_left(c);
  const LeechCategory l = l_of(g.groupoid);

  std::vector<Idx> iota(c.size());
  for (Idx a = 0; a < c.size(); ++a)
    iota[a] = l.index_of(g.class_of(c.cod[a], c.cod[a]), g.class_of(a, c.dom[a]));

  bool functor = true;
  std::string detail;
  try {
    check_functor(c, l.category, iota);
  } catch (const ValidationError& e) {
    functor = false;
    detail = e.what();
  }
  rep.add("iota is a functor into LG(C)", functor, detail);
  if (!functor) return rep;

  bool injective = true;
  for (Idx a = 0; a < c.size() && injective; ++a)
    for (Idx b = a + 1; b < c.size() && injective; ++b) injective = iota[a] != iota[b];
  rep.add("iota is injective", injective);

  rep.add("iota is full", is_full(c, l.category, iota));
  rep.add("iota is faithful", is_faithful(c, l.category, iota));
  rep.add("the image is isomorphism-dense", is_essentially_surjective(c, l.category, iota));
  rep.add("C and LG(C) are equivalent", is_equivalence(c, l.category, iota));

  // fullness in the subcategory sense: arrows between image objects lie in
  // the image
  {
    std::vector<char> in_image(l.category.size(), 0);
    std::vector<char> image_object(l.category.size(), 0);
    for (Idx a = 0; a < c.size(); ++a) {
      in_image[iota[a]] = 1;
      image_object[l.category.dom[iota[a]]] = 1;
      image_object[l.category.cod[iota[a]]] = 1;
    }
    bool full_sub = true;
    for (Idx z = 0; z < l.category.size() && full_sub; ++z)
      if (image_object[l.category.dom[z]] && image_object[l.category.cod[z]] && !in_image[z])
        full_sub = false;
    rep.add("the image is a full subcategory", full_sub);
  }
  return rep;
}

BarGroupoid bar_groupoid(const OrdGroupoid& g) {
  BarGroupoid out;
  for (Idx e : g.identities)
    for (Idx x = 0; x < g.size(); ++x)
      for (Idx f : g.identities)
        if (g.leq(g.dom[x], f) && g.leq(g.cod[x], e)) out.triples.push_back({e, x, f});
  std::sort(out.triples.begin(), out.triples.end());
  const int n = static_cast<int>(out.triples.size());
  if (n > conversion_cap())
    throw ValidationError("SizeTooLarge", "bar groupoid exceeds the conversion cap");
  for (Idx i = 0; i < n; ++i) out.index[out.triples[i]] = i;

  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n), inv(n);
  for (Idx i = 0; i < n; ++i) {
    auto [e, x, f] = out.triples[i];
    names.push_back("<" + g.elements[e] + "," + g.elements[x] + "," + g.elements[f] + ">");
    dom[i] = out.index.at({f, g.dom[x], f});
    cod[i] = out.index.at({e, g.cod[x], e});
    inv[i] = out.index.at({f, g.inv[x], e});
  }
  IdxTable comp(n, n);
  BoolMatrix leq(n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      auto [e, x, f] = out.triples[i];
      auto [e2, y, f2] = out.triples[j];
      if (dom[i] == cod[j]) comp(i, j) = out.index.at({e, g.comp(x, y), f2});
      leq.set(i, j, e == e2 && f == f2 && g.leq(x, y));
    }
  out.groupoid = validate_ordered_groupoid(std::move(names), std::move(dom), std::move(cod),
                                           std::move(inv), std::move(comp), std::move(leq));

  const auto mis = maximal_identity_structure(out.groupoid);
  out.report.add("bar G has maximal identities", mis.circ.has_value());
  out.report.add("every D-class of bar G contains a maximal identity",
                 mis.every_dclass_has_maximal);
  if (mis.circ) {
    bool circ_ok = true;
    for (Idx i = 0; i < n; ++i) {
      if (!out.groupoid.is_identity(i)) continue;
      auto [e, f, e2] = out.triples[i];
      if ((*mis.circ)[i] != out.index.at({e, e, e})) circ_ok = false;
    }
    out.report.add("<e,f,e>° = <e,e,e>", circ_ok);
  }

  // alpha: bar G -> GL(G), <e,x,f> -> [(e,x),(f,dom x)]
  const LeechCategory l = l_of(g);
  const SpanGroupoid gl = g_of_left(l.category);
  out.alpha.resize(n);
  for (Idx i = 0; i < n; ++i) {
    auto [e, x, f] = out.triples[i];
    out.alpha[i] = gl.class_of(l.index_of(e, x), l.index_of(f, g.dom[x]));
  }
  bool alpha_iso = gl.groupoid.size() == n;
  {
    std::vector<char> seen(gl.groupoid.size(), 0);
    for (Idx i = 0; i < n && alpha_iso; ++i) {
      if (seen[out.alpha[i]]) alpha_iso = false;
      seen[out.alpha[i]] = 1;
    }
    if (alpha_iso) {
      FunctorFlags flags = classify_functor(out.groupoid, gl.groupoid, out.alpha);
      alpha_iso = flags.ordered && flags.ordered_embedding;
    }
  }
  out.report.add("alpha: bar G -> GL(G) is an isomorphism of ordered groupoids", alpha_iso);

  // Enlargement: needs maximal identities with the D-class property on G.
  const auto g_mis = maximal_identity_structure(g);
  if (g_mis.circ && g_mis.every_dclass_has_maximal) {
    std::vector<Idx> pi(g.size());
    for (Idx x = 0; x < g.size(); ++x)
      pi[x] = out.index.at({(*g_mis.circ)[g.cod[x]], x, (*g_mis.circ)[g.dom[x]]});
    FunctorFlags flags = classify_functor(g, out.groupoid, pi);
    out.report.add("pi: G -> bar G is an ordered embedding", flags.ordered_embedding);
    std::vector<Idx> image(pi.begin(), pi.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    out.report.add("bar G is an enlargement of pi(G)",
                   flags.ordered_embedding && is_enlargement(out.groupoid, image));
  }
  return out;
}

std::optional<Idx> find_weak_terminal_identity(const FinCategory& c) {
  for (Idx one : c.identities) {
    bool weak_terminal = true;
    for (Idx e : c.identities) {
      bool reached = false;
      for (Idx a = 0; a < c.size() && !reached; ++a)
        reached = c.dom[a] == e && c.cod[a] == one;
      weak_terminal = weak_terminal && reached;
    }
    if (weak_terminal) return one;
  }
  return std::nullopt;
}

std::optional<Idx> find_maximum_identity(const OrdGroupoid& g) {
  for (Idx one : g.identities) {
    bool maximum = true;
    for (Idx e : g.identities) maximum = maximum && g.leq(e, one);
    if (maximum) return one;
  }
  return std::nullopt;
}

SpanGroupoid g_rooted(const FinCategory& c, Idx one) {
  if (!c.left_cancellative)
    throw ValidationError("NotLeftCancellative", "rooted spans need left cancellation");
  if (one < 0 || one >= c.size() || !c.is_identity(one))
    throw ValidationError("NotWeakTerminal", "the anchor must be an identity", {one});
  for (Idx e : c.identities) {
    bool reached = false;
    for (Idx a = 0; a < c.size() && !reached; ++a)
      reached = c.dom[a] == e && c.cod[a] == one;
    if (!reached)
      throw ValidationError("NotWeakTerminal",
                            "no arrow from " + c.arrows[e] + " to the anchor", {e});
  }
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (c.dom[a] == c.dom[b] && c.cod[a] == one && c.cod[b] == one) pairs.emplace_back(a, b);
  // the D-class property of the full span groupoid does not restrict to
  // the rooted carrier; the maximum identity takes its place
  SpanGroupoid out = build_span_groupoid(c, /*right_action=*/true, pairs,
                                         /*expect_dclass_maximal=*/false);

  const auto max_id = find_maximum_identity(out.groupoid);
  if (!max_id || out.reps[*max_id] != std::make_pair(one, one))
    throw ValidationError("InternalInconsistency", "[1,1] is not the maximum identity");

  // Cross-check against the local subgroupoid of G(C) at [1,1]: the
  // elements [a,b] with both legs into 1 are exactly the defined
  // [1,1] (x) z (x) [1,1], and the canonical representatives coincide.
  const SpanGroupoid full = g_of_left(c);
  const Idx top = full.class_of(one, one);
  std::vector<char> by_legs(full.groupoid.size(), 0), by_product(full.groupoid.size(), 0);
  for (Idx i = 0; i < full.groupoid.size(); ++i) {
    auto [a, b] = full.reps[i];
    by_legs[i] = (c.cod[a] == one && c.cod[b] == one) ? 1 : 0;
    if (auto left = pseudoproduct(full.groupoid, top, i))
      if (auto both = pseudoproduct(full.groupoid, *left, top)) by_product[i] = (*both == i);
  }
  if (by_legs != by_product)
    throw ValidationError("InternalInconsistency",
                          "local subgroupoid criterion disagrees with the leg criterion");
  for (auto rep : out.reps)
    if (!by_legs[full.class_of(rep.first, rep.second)])
      throw ValidationError("InternalInconsistency", "rooted carrier escapes the local subgroupoid");
  return out;
}

Report verify_rooted_theorem_g(const OrdGroupoid& g) {
  Report rep;
  const auto one = find_maximum_identity(g);
  rep.add("G has a maximum identity", one.has_value());
  if (!one) return rep;

  const LeechCategory l = l_of(g);
  const auto weak = find_weak_terminal_identity(l.category);
  rep.add("L(G) is left rooted",
          weak.has_value() && l.arrows[*weak] == std::make_pair(*one, *one));

  const SpanGroupoid gl = g_rooted(l.category, l.index_of(*one, *one));
  bool iso = gl.groupoid.size() == g.size();
  std::string detail;
  if (iso) {
    std::vector<Idx> beta(g.size());
    for (Idx x = 0; x < g.size(); ++x)
      beta[x] = gl.class_of(l.index_of(*one, x), l.index_of(*one, g.dom[x]));
    std::vector<char> seen(gl.groupoid.size(), 0);
    for (Idx x = 0; x < g.size() && iso; ++x) {
      if (seen[beta[x]]) iso = false;
      seen[beta[x]] = 1;
    }
    if (iso) {
      try {
        FunctorFlags flags = classify_functor(g, gl.groupoid, beta);
        iso = flags.ordered && flags.ordered_embedding;
      } catch (const ValidationError& e) {
        iso = false;
        detail = e.what();
      }
    }
  } else {
    detail = "sizes differ";
  }
  rep.add("G^l(L(G)) is isomorphic to G", iso, detail);
  return rep;
}

Report verify_rooted_theorem_c(const FinCategory& c) {
  Report rep;
  const auto one = find_weak_terminal_identity(c);
  rep.add("C has a weak terminal identity", one.has_value());
  rep.add("C is left cancellative", c.left_cancellative);
  if (!one || !c.left_cancellative) return rep;

  const SpanGroupoid gl = g_rooted(c, *one);
  rep.add("G^l(C) has a maximum identity",
          find_maximum_identity(gl.groupoid) == gl.class_of(*one, *one));

  const LeechCategory l2 = l_of(gl.groupoid);
  const Idx top = gl.class_of(*one, *one);
  rep.add("L(G^l(C)) is left rooted",
          find_weak_terminal_identity(l2.category) == l2.index_of(top, top));

  // chosen arrows c_e : e -> 1, with c_1 = 1
  std::vector<Idx> chosen(c.size(), undef);
  for (Idx e : c.identities) {
    if (e == *one) {
      chosen[e] = *one;
      continue;
    }
    for (Idx a = 0; a < c.size(); ++a)
      if (c.dom[a] == e && c.cod[a] == *one) {
        chosen[e] = a;
        break;
      }
  }
  std::vector<Idx> theta(c.size());
  for (Idx a = 0; a < c.size(); ++a) {
    const Idx ce = chosen[c.dom[a]];
    const Idx cf = chosen[c.cod[a]];
    const Idx leg = gl.class_of(c.comp(cf, a), ce);
    const Idx obj = gl.class_of(cf, cf);
    theta[a] = l2.index_of(obj, leg);
  }
  bool functor = true;
  std::string detail;
  try {
    check_functor(c, l2.category, theta);
  } catch (const ValidationError& e) {
    functor = false;
    detail = e.what();
  }
  rep.add("theta: C -> L(G^l(C)) is a functor", functor, detail);
  if (functor) {
    rep.add("theta maps the weak terminal identity to the weak terminal identity",
            theta[*one] == l2.index_of(top, top));
    rep.add("theta is an equivalence", is_equivalence(c, l2.category, theta));
  }

  if (has_all_allowable_pullbacks(c)) {
    bool ok = true;
    try {
      const InvSemigroup s = semigroup_of_with_zero(gl.groupoid);
      ok = s.identity_element().has_value();
    } catch (const ValidationError& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("all allowable pullbacks: inverse monoid with zero validates", ok, detail);
  }
  if (has_all_pullbacks(c)) {
    bool ok = true;
    try {
      const InvSemigroup s = semigroup_of(gl.groupoid);
      ok = s.identity_element().has_value();
    } catch (const ValidationError& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("all pullbacks: inverse monoid validates", ok, detail);
  }
  return rep;
}

Report e_unitary_iff_cancellative(const InvSemigroup& s) {
  if (!s.identity_element())
    throw ValidationError("NotAMonoid", "the characterization needs an inverse monoid");
  Report rep;
  const LeechCategory l = l_of(groupoid_of(s));
  rep.add("L(G(S)) is left cancellative", l.category.left_cancellative);

  const bool rc = l.category.right_cancellative;
  const bool eu = is_e_unitary(s);
  std::string witness;
  if (!rc) {
    for (Idx i = 0; i < l.category.size() && witness.empty(); ++i)
      for (Idx j = 0; j < l.category.size() && witness.empty(); ++j)
        for (Idx k = 0; k < l.category.size(); ++k)
          if (i != j && l.category.composable(i, k) && l.category.composable(j, k) &&
              l.category.comp(i, k) == l.category.comp(j, k)) {
            witness = l.category.arrows[i] + " and " + l.category.arrows[j] + " collapse on " +
                      l.category.arrows[k];
            break;
          }
  }
  rep.add("right cancellative", true, rc ? "yes" : "no; witness: " + witness);
  rep.add("E-unitary", true, eu ? "yes" : "no");
  rep.add("right cancellative iff E-unitary", rc == eu);
  return rep;
}

BisimpleData bisimple_monoid_data(const InvSemigroup& s) {
  const auto one = s.identity_element();
  if (!one) throw ValidationError("NotAMonoid", "L1 needs an inverse monoid");

  BisimpleData out;
  out.zero_stripped = s.zero.has_value();
  const OrdGroupoid g = groupoid_of(s);
  const auto comp = d_classes(g);
  int first = -1;
  out.bisimple = true;
  for (Idx x = 0; x < s.size(); ++x) {
    if (s.zero && x == *s.zero) continue;
    if (first == -1) first = comp[x];
    out.bisimple = out.bisimple && comp[x] == first;
  }
  if (!out.bisimple) return out;

  for (Idx a = 0; a < s.size(); ++a)
    if (s.mul(s.inv[a], a) == *one) out.l1_members.push_back(a);
  const int m = static_cast<int>(out.l1_members.size());
  auto pos = [&](Idx a) {
    return static_cast<Idx>(std::find(out.l1_members.begin(), out.l1_members.end(), a) -
                            out.l1_members.begin());
  };
  std::vector<std::string> names;
  for (Idx a : out.l1_members) names.push_back(s.elements[a]);
  std::vector<Idx> dom(m, pos(*one)), cod(m, pos(*one));
  IdxTable table(m, m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j) {
      const Idx p = pos(s.mul(out.l1_members[i], out.l1_members[j]));
      if (p == m)
        throw ValidationError("InternalInconsistency", "L1 is not closed under products", {i, j});
      table(i, j) = p;
    }
  out.l1 = validate_category(std::move(names), std::move(dom), std::move(cod), std::move(table));
  if (!out.l1->left_cancellative)
    throw ValidationError("InternalInconsistency", "L1 must be left cancellative");

  // principal right ideals: disjoint or intersecting in a principal ideal
  out.principal_ideal_condition = true;
  auto ideal = [&](Idx i) {
    std::vector<char> in(m, 0);
    for (Idx j = 0; j < m; ++j) in[out.l1->comp(i, j)] = 1;
    return in;
  };
  for (Idx a = 0; a < m && out.principal_ideal_condition; ++a)
    for (Idx b = 0; b < m && out.principal_ideal_condition; ++b) {
      const auto ia = ideal(a), ib = ideal(b);
      std::vector<char> inter(m, 0);
      bool empty = true;
      for (Idx k = 0; k < m; ++k) {
        inter[k] = ia[k] && ib[k];
        empty = empty && !inter[k];
      }
      if (empty) continue;
      bool principal = false;
      for (Idx cidx = 0; cidx < m && !principal; ++cidx) principal = ideal(cidx) == inter;
      out.principal_ideal_condition = principal;
    }
  return out;
}

}  // namespace esnkit
