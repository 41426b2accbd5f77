#include "esnkit/category.hpp"

#include "esnkit/error.hpp"

namespace esnkit {

FinCategory validate_category(std::vector<std::string> arrows, std::vector<Idx> dom,
                              std::vector<Idx> cod, IdxTable comp) {
  const int n = static_cast<int>(arrows.size());
  if (n == 0 || comp.rows() != n || comp.cols() != n || static_cast<int>(dom.size()) != n ||
      static_cast<int>(cod.size()) != n)
    throw ValidationError("SchemaError", "category tables must be square and consistent");

  FinCategory c;
  c.arrows = std::move(arrows);
  c.dom = std::move(dom);
  c.cod = std::move(cod);
  c.comp = std::move(comp);

  for (Idx x = 0; x < n; ++x)
    if (c.dom[x] < 0 || c.dom[x] >= n || c.cod[x] < 0 || c.cod[x] >= n)
      throw ValidationError("SchemaError", "dom/cod entry out of range", {x});

  c.identity.assign(n, 0);
  for (Idx x = 0; x < n; ++x)
    if (c.dom[x] == x && c.cod[x] == x) c.identity[x] = 1;
  for (Idx x = 0; x < n; ++x)
    if (c.identity[x]) c.identities.push_back(x);

  for (Idx x = 0; x < n; ++x)
    if (!c.is_identity(c.dom[x]) || !c.is_identity(c.cod[x]))
      throw ValidationError("NotACategory", "dom/cod of " + c.arrows[x] + " is not an identity",
                            {x});
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const bool should = c.dom[x] == c.cod[y];
      if (should != c.comp.defined(x, y))
        throw ValidationError("NotACategory", "composition defined on the wrong pairs", {x, y});
      if (should) {
        const Idx z = c.comp(x, y);
        if (z < 0 || z >= n) throw ValidationError("SchemaError", "composition out of range", {x, y});
        if (c.dom[z] != c.dom[y] || c.cod[z] != c.cod[x])
          throw ValidationError("NotACategory", "composition endpoints wrong", {x, y, z});
      }
    }
  for (Idx x = 0; x < n; ++x)
    if (c.comp(x, c.dom[x]) != x || c.comp(c.cod[x], x) != x)
      throw ValidationError("NotACategory", "identity law fails at " + c.arrows[x], {x});
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!c.composable(x, y)) continue;
      for (Idx z = 0; z < n; ++z)
        if (c.composable(y, z) && c.comp(c.comp(x, y), z) != c.comp(x, c.comp(y, z)))
          throw ValidationError("NotACategory", "composition not associative", {x, y, z});
    }

  c.left_cancellative = true;
  c.right_cancellative = true;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        if (c.composable(x, y) && c.composable(x, z) && y != z && c.comp(x, y) == c.comp(x, z))
          c.left_cancellative = false;
        if (c.composable(y, x) && c.composable(z, x) && y != z && c.comp(y, x) == c.comp(z, x))
          c.right_cancellative = false;
      }

  c.iso_inverse.assign(n, undef);
  for (Idx u = 0; u < n; ++u)
    for (Idx v = 0; v < n; ++v)
      if (c.composable(u, v) && c.composable(v, u) && c.comp(u, v) == c.cod[u] &&
          c.comp(v, u) == c.dom[u])
        c.iso_inverse[u] = v;
  return c;
}

FinCategory opposite(const FinCategory& c) {
  const int n = c.size();
  IdxTable comp(n, n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (c.comp.defined(y, x)) comp(x, y) = c.comp(y, x);
  return validate_category(c.arrows, c.cod, c.dom, std::move(comp));
}

std::optional<std::pair<Idx, Idx>> pullback(const FinCategory& c, Idx y, Idx w) {
  std::vector<std::pair<Idx, Idx>> completions;
  for (Idx p = 0; p < c.size(); ++p) {
    if (!c.composable(y, p)) continue;
    for (Idx q = 0; q < c.size(); ++q)
      if (c.composable(w, q) && c.comp(y, p) == c.comp(w, q)) completions.emplace_back(p, q);
  }
  for (auto [p, q] : completions) {
    bool universal = true;
    for (auto [p2, q2] : completions) {
      int mediators = 0;
      for (Idx h = 0; h < c.size(); ++h)
        if (c.composable(p, h) && c.comp(p, h) == p2 && c.composable(q, h) && c.comp(q, h) == q2)
          ++mediators;
      if (mediators != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return std::make_pair(p, q);  // least, by scan order
  }
  return std::nullopt;
}

void check_functor(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map) {
  const int n = src.size();
  if (static_cast<int>(map.size()) != n) throw ValidationError("NotAFunctor", "map is not total");
  for (Idx x = 0; x < n; ++x)
    if (map[x] < 0 || map[x] >= dst.size())
      throw ValidationError("NotAFunctor", "image out of range", {x});
  for (Idx x = 0; x < n; ++x)
    if (dst.dom[map[x]] != map[src.dom[x]] || dst.cod[map[x]] != map[src.cod[x]])
      throw ValidationError("NotAFunctor", "does not commute with dom/cod at " + src.arrows[x],
                            {x});
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (src.composable(x, y) && dst.comp(map[x], map[y]) != map[src.comp(x, y)])
        throw ValidationError("NotAFunctor", "does not preserve composition", {x, y});
}

bool is_faithful(const FinCategory& src, const FinCategory&, std::span<const Idx> map) {
  for (Idx x = 0; x < src.size(); ++x)
    for (Idx y = 0; y < src.size(); ++y)
      if (x != y && src.dom[x] == src.dom[y] && src.cod[x] == src.cod[y] && map[x] == map[y])
        return false;
  return true;
}

bool is_full(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map) {
  for (Idx e : src.identities)
    for (Idx f : src.identities)
      for (Idx z = 0; z < dst.size(); ++z) {
        if (dst.dom[z] != map[e] || dst.cod[z] != map[f]) continue;
        bool hit = false;
        for (Idx x = 0; x < src.size() && !hit; ++x)
          hit = src.dom[x] == e && src.cod[x] == f && map[x] == z;
        if (!hit) return false;
      }
  return true;
}

bool is_essentially_surjective(const FinCategory& src, const FinCategory& dst,
                               std::span<const Idx> map) {
  for (Idx eps : dst.identities) {
    bool hit = false;
    for (Idx e : src.identities) {
      for (Idx u = 0; u < dst.size() && !hit; ++u)
        hit = dst.is_iso(u) && dst.dom[u] == eps && dst.cod[u] == map[e];
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map) {
  check_functor(src, dst, map);
  return is_faithful(src, dst, map) && is_full(src, dst, map) &&
         is_essentially_surjective(src, dst, map);
}

namespace {

bool completable(const FinCategory& c, Idx a, Idx b) {
  for (Idx p = 0; p < c.size(); ++p) {
    if (!c.composable(a, p)) continue;
    for (Idx q = 0; q < c.size(); ++q)
      if (c.composable(b, q) && c.comp(a, p) == c.comp(b, q)) return true;
  }
  return false;
}

}  // namespace

bool has_all_pullbacks(const FinCategory& c) {
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (c.cod[a] == c.cod[b] && !pullback(c, a, b)) return false;
  return true;
}

bool has_all_allowable_pullbacks(const FinCategory& c) {
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (completable(c, a, b) && !pullback(c, a, b)) return false;
  return true;
}

bool has_all_allowable_pullbacks_restricted(const FinCategory& c) {
  for (Idx a = 0; a < c.size(); ++a)
    for (Idx b = 0; b < c.size(); ++b)
      if (c.cod[a] == c.cod[b] && completable(c, a, b) && !pullback(c, a, b)) return false;
  return true;
}

Report lemma_report_category(const FinCategory& c) {
  Report rep;

  {
    // Any two universal completion candidates of the same cospan are
    // linked by an isomorphism (so the choice of pullback is immaterial).
    bool ok = true;
    std::string witness;
    for (Idx y = 0; y < c.size() && ok; ++y)
      for (Idx w = 0; w < c.size() && ok; ++w) {
        std::vector<std::pair<Idx, Idx>> completions, universal;
        for (Idx p = 0; p < c.size(); ++p) {
          if (!c.composable(y, p)) continue;
          for (Idx q = 0; q < c.size(); ++q)
            if (c.composable(w, q) && c.comp(y, p) == c.comp(w, q)) completions.emplace_back(p, q);
        }
        for (auto [p, q] : completions) {
          bool uni = true;
          for (auto [p2, q2] : completions) {
            int mediators = 0;
            for (Idx h = 0; h < c.size(); ++h)
              if (c.composable(p, h) && c.comp(p, h) == p2 && c.composable(q, h) &&
                  c.comp(q, h) == q2)
                ++mediators;
            if (mediators != 1) uni = false;
          }
          if (uni) universal.emplace_back(p, q);
        }
        for (auto [p, q] : universal)
          for (auto [p2, q2] : universal) {
            bool linked = false;
            for (Idx h = 0; h < c.size(); ++h)
              if (c.is_iso(h) && c.composable(p, h) && c.comp(p, h) == p2 && c.composable(q, h) &&
                  c.comp(q, h) == q2)
                linked = true;
            if (!linked) {
              ok = false;
              witness = c.arrows[y] + ", " + c.arrows[w];
            }
          }
      }
    rep.add("universal completion candidates are isomorphic", ok, witness);
  }

  rep.add("allowable-pullback predicates agree", has_all_allowable_pullbacks(c) ==
                                                     has_all_allowable_pullbacks_restricted(c));
  return rep;
}

}  // namespace esnkit
