#include "esnkit/mcalister.hpp"

#include <algorithm>
#include <numeric>

#include "esnkit/error.hpp"
#include "esnkit/iso.hpp"

namespace esnkit {

namespace {

void check_poset(const Poset& p) {
  const int n = p.size();
  if (p.leq.rows() != n || p.leq.cols() != n)
    throw ValidationError("SchemaError", "poset order matrix has the wrong shape");
  for (Idx a = 0; a < n; ++a)
    if (!p.leq(a, a)) throw ValidationError("NotAPartialOrder", "not reflexive", {a});
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a))
        throw ValidationError("NotAPartialOrder", "not antisymmetric", {a, b});
      if (p.leq(a, b))
        for (Idx c = 0; c < n; ++c)
          if (p.leq(b, c) && !p.leq(a, c))
            throw ValidationError("NotAPartialOrder", "not transitive", {a, b, c});
    }
}

std::optional<Idx> poset_meet(const Poset& p, Idx a, Idx b) {
  std::optional<Idx> best;
  for (Idx m = 0; m < p.size(); ++m) {
    if (!p.leq(m, a) || !p.leq(m, b)) continue;
    if (!best || p.leq(*best, m)) best = m;
  }
  if (!best) return std::nullopt;
  for (Idx m = 0; m < p.size(); ++m)
    if (p.leq(m, a) && p.leq(m, b) && !p.leq(m, *best)) return std::nullopt;
  return best;
}

}  // namespace

GroupPosetAction validate_group_poset_action(InvSemigroup group, Poset poset, IdxTable action) {
  if (!group.is_group())
    throw ValidationError("TargetNotGroup", "the acting semigroup must be a group");
  check_poset(poset);
  const int ng = group.size();
  const int nx = poset.size();
  if (action.rows() != ng || action.cols() != nx)
    throw ValidationError("SchemaError", "action table has the wrong shape");
  for (Idx g = 0; g < ng; ++g)
    for (Idx x = 0; x < nx; ++x)
      if (action(g, x) < 0 || action(g, x) >= nx)
        throw ValidationError("SchemaError", "action entry out of range", {g, x});

  const Idx one = *group.identity_element();
  for (Idx x = 0; x < nx; ++x)
    if (action(one, x) != x)
      throw ValidationError("NotAnAction", "identity does not act trivially", {x});
  for (Idx g = 0; g < ng; ++g)
    for (Idx h = 0; h < ng; ++h)
      for (Idx x = 0; x < nx; ++x)
        if (action(g, action(h, x)) != action(group.mul(g, h), x))
          throw ValidationError("NotAnAction", "action does not respect multiplication", {g, h, x});
  // order automorphisms: each g preserves the order (reflection follows
  // from the inverse acting too)
  for (Idx g = 0; g < ng; ++g)
    for (Idx x = 0; x < nx; ++x)
      for (Idx y = 0; y < nx; ++y)
        if (poset.leq(x, y) && !poset.leq(action(g, x), action(g, y)))
          throw ValidationError("NotAnAction", "action is not by order automorphisms", {g, x, y});

  GroupPosetAction a;
  a.group = std::move(group);
  a.poset = std::move(poset);
  a.action = std::move(action);
  return a;
}

Idx SemidirectGroupoid::index_of(Idx x, Idx g) const {
  return x * static_cast<Idx>(group_as_groupoid.size()) + g;
}

SemidirectGroupoid semidirect_groupoid(const GroupPosetAction& a) {
  const int ng = a.group.size();
  const int nx = a.poset.size();
  const long long n = static_cast<long long>(ng) * nx;
  if (n > conversion_cap())
    throw ValidationError("SizeTooLarge", "semidirect product exceeds the conversion cap");
  const Idx one = *a.group.identity_element();

  auto idx = [&](Idx x, Idx g) { return x * ng + g; };
  std::vector<std::string> names;
  std::vector<Idx> dom(n), cod(n), inv(n);
  IdxTable comp(static_cast<int>(n), static_cast<int>(n));
  BoolMatrix leq(static_cast<int>(n));
  for (Idx x = 0; x < nx; ++x)
    for (Idx g = 0; g < ng; ++g) {
      names.push_back("(" + a.poset.elements[x] + "," + a.group.elements[g] + ")");
      const Idx ginv = a.group.inv[g];
      dom[idx(x, g)] = idx(a.act(ginv, x), one);
      cod[idx(x, g)] = idx(x, one);
      inv[idx(x, g)] = idx(a.act(ginv, x), ginv);
    }
  for (Idx x = 0; x < nx; ++x)
    for (Idx g = 0; g < ng; ++g)
      for (Idx y = 0; y < nx; ++y)
        for (Idx h = 0; h < ng; ++h) {
          if (x == a.act(g, y)) comp(idx(x, g), idx(y, h)) = idx(x, a.group.mul(g, h));
          if (g == h && a.poset.leq(x, y)) leq.set(idx(x, g), idx(y, h), true);
        }

  SemidirectGroupoid out;
  out.groupoid = validate_ordered_groupoid(std::move(names), std::move(dom), std::move(cod),
                                           std::move(inv), std::move(comp), std::move(leq));
  for (Idx x = 0; x < nx; ++x)
    for (Idx g = 0; g < ng; ++g) {
      out.poset_part.push_back(x);
      out.group_part.push_back(g);
      out.pi2.push_back(g);
    }

  // the group as a one-identity groupoid with equality order
  {
    std::vector<Idx> gdom(ng, one), gcod(ng, one), ginv = a.group.inv;
    IdxTable gcomp(ng, ng);
    BoolMatrix gleq(ng);
    for (Idx g = 0; g < ng; ++g) {
      gleq.set(g, g, true);
      for (Idx h = 0; h < ng; ++h) gcomp(g, h) = a.group.mul(g, h);
    }
    out.group_as_groupoid = validate_ordered_groupoid(a.group.elements, std::move(gdom),
                                                      std::move(gcod), std::move(ginv),
                                                      std::move(gcomp), std::move(gleq));
  }

  // pi2 must classify as a surjective ordered covering functor.
  FunctorFlags flags = classify_functor(out.groupoid, out.group_as_groupoid, out.pi2);
  if (!flags.ordered || !flags.star_bijective)
    throw ValidationError("InternalInconsistency", "pi2 is not an ordered covering functor");
  return out;
}

CoveringFactorization covering_to_semidirect(const OrdGroupoid& source,
                                             const OrdGroupoid& group_target,
                                             const std::vector<Idx>& functor) {
  if (group_target.identities.size() != 1)
    throw ValidationError("TargetNotGroup", "target groupoid has more than one identity");
  FunctorFlags flags = classify_functor(source, group_target, functor);
  if (!flags.ordered || !flags.star_bijective)
    throw ValidationError("NotCovering", "functor is not an ordered covering");
  {
    std::vector<char> hit(group_target.size(), 0);
    for (Idx x = 0; x < source.size(); ++x) hit[functor[x]] = 1;
    for (Idx g = 0; g < group_target.size(); ++g)
      if (!hit[g]) throw ValidationError("NotCovering", "functor is not surjective", {g});
  }

  // group table from the one-identity groupoid
  InvSemigroup group;
  {
    IdxTable table(group_target.size(), group_target.size());
    for (Idx g = 0; g < group_target.size(); ++g)
      for (Idx h = 0; h < group_target.size(); ++h) table(g, h) = group_target.comp(g, h);
    group = validate_inverse_semigroup(group_target.elements, std::move(table));
  }

  // X = the identities of the source with the induced order
  Poset x;
  std::vector<Idx> ident = source.identities;
  x.elements.reserve(ident.size());
  for (Idx e : ident) x.elements.push_back(source.elements[e]);
  x.leq = BoolMatrix(static_cast<int>(ident.size()));
  for (size_t i = 0; i < ident.size(); ++i)
    for (size_t j = 0; j < ident.size(); ++j)
      x.leq.set(static_cast<Idx>(i), static_cast<Idx>(j), source.leq(ident[i], ident[j]));

  // g.e = cod of the unique arrow in the star of e mapping to g
  IdxTable action(group.size(), static_cast<int>(ident.size()));
  for (Idx g = 0; g < group.size(); ++g)
    for (size_t ei = 0; ei < ident.size(); ++ei) {
      Idx found = undef;
      for (Idx z = 0; z < source.size(); ++z)
        if (source.dom[z] == ident[ei] && functor[z] == g) {
          found = z;
          break;
        }
      if (found == undef)
        throw ValidationError("NotCovering", "star misses a group element", {ident[ei], g});
      const Idx codid =
          static_cast<Idx>(std::find(ident.begin(), ident.end(), source.cod[found]) -
                           ident.begin());
      action(g, static_cast<Idx>(ei)) = codid;
    }

  CoveringFactorization out;
  out.action = validate_group_poset_action(std::move(group), std::move(x), std::move(action));
  out.semidirect = semidirect_groupoid(out.action);

  // theta(z) = (cod z, f z), an isomorphism with pi2 . theta = f
  std::vector<Idx> e_index(source.size(), undef);
  for (size_t i = 0; i < ident.size(); ++i) e_index[ident[i]] = static_cast<Idx>(i);
  out.theta.resize(source.size());
  for (Idx z = 0; z < source.size(); ++z)
    out.theta[z] = out.semidirect.index_of(e_index[source.cod[z]], functor[z]);

  FunctorFlags tf = classify_functor(source, out.semidirect.groupoid, out.theta);
  std::vector<char> seen(out.semidirect.groupoid.size(), 0);
  bool bijective = source.size() == out.semidirect.groupoid.size();
  for (Idx z = 0; z < source.size() && bijective; ++z) {
    if (seen[out.theta[z]]) bijective = false;
    seen[out.theta[z]] = 1;
  }
  if (!tf.ordered || !tf.ordered_embedding || !bijective)
    throw ValidationError("InternalInconsistency", "theta is not an isomorphism onto P(G,X)");
  for (Idx z = 0; z < source.size(); ++z)
    if (out.semidirect.pi2[out.theta[z]] != functor[z])
      throw ValidationError("InternalInconsistency", "pi2 . theta differs from the functor", {z});
  return out;
}

McAlisterTriple validate_mcalister_triple(GroupPosetAction base, std::vector<Idx> y) {
  const int nx = base.poset.size();
  std::vector<char> in_y(nx, 0);
  for (Idx v : y) {
    if (v < 0 || v >= nx) throw ValidationError("SchemaError", "Y member out of range", {v});
    in_y[v] = 1;
  }
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (y.empty()) throw ValidationError("MT1Violation", "Y is empty");

  // MT1: order ideal and meet semilattice under the induced order
  for (Idx v : y)
    for (Idx w = 0; w < nx; ++w)
      if (base.poset.leq(w, v) && !in_y[w])
        throw ValidationError("MT1Violation",
                              base.poset.elements[w] + " <= " + base.poset.elements[v] +
                                  " lies outside Y",
                              {w, v});
  for (Idx v : y)
    for (Idx w : y) {
      std::optional<Idx> best;
      for (Idx m : y) {
        if (!base.poset.leq(m, v) || !base.poset.leq(m, w)) continue;
        if (!best || base.poset.leq(*best, m)) best = m;
      }
      bool ok = best.has_value();
      if (ok)
        for (Idx m : y)
          if (base.poset.leq(m, v) && base.poset.leq(m, w) && !base.poset.leq(m, *best)) ok = false;
      if (!ok)
        throw ValidationError("MT1Violation",
                              "no meet of " + base.poset.elements[v] + ", " +
                                  base.poset.elements[w] + " within Y",
                              {v, w});
    }

  // MT2: G.Y = X
  for (Idx x = 0; x < nx; ++x) {
    bool covered = false;
    for (Idx g = 0; g < base.group.size() && !covered; ++g)
      for (Idx v : y)
        if (base.act(g, v) == x) {
          covered = true;
          break;
        }
    if (!covered)
      throw ValidationError("MT2Violation", base.poset.elements[x] + " is not in G.Y", {x});
  }

  // MT3: g.Y meets Y
  for (Idx g = 0; g < base.group.size(); ++g) {
    bool meets = false;
    for (Idx v : y)
      if (in_y[base.act(g, v)]) {
        meets = true;
        break;
      }
    if (!meets)
      throw ValidationError("MT3Violation", "g.Y and Y are disjoint for g = " +
                                                base.group.elements[g],
                            {g});
  }

  McAlisterTriple t;
  t.base = std::move(base);
  t.y = std::move(y);
  t.in_y = std::move(in_y);
  return t;
}

PSemigroup p_semigroup(const McAlisterTriple& t) {
  const auto& base = t.base;
  const int ng = base.group.size();

  std::vector<std::pair<Idx, Idx>> carrier;  // (y, g), lexicographic
  for (Idx v : t.y)
    for (Idx g = 0; g < ng; ++g)
      if (t.in_y[base.act(base.group.inv[g], v)]) carrier.emplace_back(v, g);

  const int n = static_cast<int>(carrier.size());
  auto find = [&](Idx v, Idx g) {
    for (Idx i = 0; i < n; ++i)
      if (carrier[i] == std::make_pair(v, g)) return i;
    return static_cast<Idx>(undef);
  };

  std::vector<std::string> names;
  for (auto [v, g] : carrier)
    names.push_back("(" + base.poset.elements[v] + "," + base.group.elements[g] + ")");
  IdxTable table(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      const auto [e, g] = carrier[i];
      const auto [f, h] = carrier[j];
      auto m = poset_meet(base.poset, e, base.act(g, f));
      if (!m)
        throw ValidationError("MeetMissing", names[i] + " * " + names[j] +
                                                 " has no meet in X (forbidden by the meet lemma)",
                              {i, j});
      const Idx k = find(*m, base.group.mul(g, h));
      if (k == undef)
        throw ValidationError("InternalInconsistency", "product escaped the carrier", {i, j});
      table(i, j) = k;
    }

  PSemigroup out;
  out.semigroup = validate_inverse_semigroup(std::move(names), std::move(table));
  for (auto [v, g] : carrier) {
    out.y_part.push_back(v);
    out.g_part.push_back(g);
  }
  if (!is_e_unitary(out.semigroup))
    throw ValidationError("InternalInconsistency", "P(G,X,Y) must be E-unitary");

  // idempotents are exactly {(y,1)} and order-isomorphic to Y
  const Idx one = *base.group.identity_element();
  for (Idx i = 0; i < n; ++i)
    if (out.semigroup.is_idempotent(i) != (out.g_part[i] == one))
      throw ValidationError("InternalInconsistency", "idempotents are not the (y,1) pairs", {i});
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      if (out.g_part[i] == one && out.g_part[j] == one &&
          out.semigroup.leq(i, j) != base.poset.leq(out.y_part[i], out.y_part[j]))
        throw ValidationError("InternalInconsistency", "idempotent order differs from Y", {i, j});
  return out;
}

MaxGroupImage max_group_image(const InvSemigroup& s) {
  const int n = s.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      bool related = false;
      for (Idx u = 0; u < n && !related; ++u) related = s.leq(u, a) && s.leq(u, b);
      if (related) parent[find(a)] = find(b);
    }

  std::vector<Idx> class_of(n), reps;
  for (Idx a = 0; a < n; ++a) {
    const int r = find(a);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      class_of[a] = static_cast<Idx>(reps.size());
      reps.push_back(r);
    } else {
      class_of[a] = static_cast<Idx>(it - reps.begin());
    }
  }

  const int m = static_cast<int>(reps.size());
  IdxTable table(m, m, undef);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      const Idx p = class_of[s.mul(a, b)];
      Idx& cell = table(class_of[a], class_of[b]);
      if (cell != undef && cell != p)
        throw ValidationError("InternalInconsistency", "sigma is not a congruence", {a, b});
      cell = p;
    }

  std::vector<std::string> names;
  for (Idx r : reps) names.push_back("[" + s.elements[r] + "]");
  MaxGroupImage out;
  out.group = validate_inverse_semigroup(std::move(names), std::move(table));
  if (!out.group.is_group())
    throw ValidationError("InternalInconsistency", "sigma quotient is not a group");
  out.sigma = std::move(class_of);
  if (!is_homomorphism(s, out.group, out.sigma))
    throw ValidationError("InternalInconsistency", "sigma is not a homomorphism");

  // cross-check: E-unitarity is equivalent to sigma being star injective
  bool star_injective = true;
  for (Idx a = 0; a < n && star_injective; ++a)
    for (Idx b = 0; b < n && star_injective; ++b)
      if (a != b && s.mul(s.inv[a], a) == s.mul(s.inv[b], b) && out.sigma[a] == out.sigma[b])
        star_injective = false;
  if (star_injective != is_e_unitary(s))
    throw ValidationError("InternalInconsistency",
                          "sigma star-injectivity disagrees with E-unitarity");
  return out;
}

Report verify_semidirect_enlargement(const InvSemigroup& s, const GroupPosetAction& a,
                                     const std::vector<Idx>& iota) {
  Report rep;
  const OrdGroupoid gs = groupoid_of(s);
  const SemidirectGroupoid p = semidirect_groupoid(a);
  if (static_cast<int>(iota.size()) != gs.size())
    throw ValidationError("SchemaError", "embedding data has the wrong length");
  for (Idx v : iota)
    if (v < 0 || v >= p.groupoid.size())
      throw ValidationError("SchemaError", "embedding image out of range", {v});

  bool embedding = false;
  std::string detail;
  try {
    FunctorFlags flags = classify_functor(gs, p.groupoid, iota);
    embedding = flags.ordered_embedding;
  } catch (const ValidationError& e) {
    detail = e.what();
  }
  rep.add("iota is an ordered embedding into P(G,X)", embedding, detail);

  bool enlargement = false;
  if (embedding) {
    std::vector<Idx> image(iota.begin(), iota.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    try {
      enlargement = is_enlargement(p.groupoid, image);
    } catch (const ValidationError& e) {
      detail = e.what();
    }
  }
  rep.add("P(G,X) is an enlargement of the image", enlargement,
          embedding ? "" : "skipped: no embedding");

  bool surjective = true;
  {
    std::vector<char> hit(a.group.size(), 0);
    for (Idx x = 0; x < gs.size(); ++x) hit[p.pi2[iota[x]]] = 1;
    for (Idx g = 0; g < a.group.size(); ++g) surjective = surjective && hit[g];
  }
  rep.add("pi2 restricted to the image is surjective", surjective);

  const bool eu = is_e_unitary(s);
  rep.add("S is E-unitary", eu,
          eu ? "witnesses agree with the characterization"
             : "no witness demanded for a non-E-unitary S");
  return rep;
}

TripleSearchResult search_mcalister_triple(const InvSemigroup& s) {
  TripleSearchResult out;
  out.e_unitary = is_e_unitary(s);
  out.report.add("input is E-unitary", out.e_unitary);
  if (!out.e_unitary) return out;

  const MaxGroupImage mgi = max_group_image(s);
  const auto idems = s.idempotent_list();
  const int ng = mgi.group.size();
  const int ne = static_cast<int>(idems.size());

  // Orbit closure of G x E under (g,e) ~ (g sigma(u)^-1, u e u^-1) for
  // every u with e <= u^-1 u; the germs of the conjugation action.
  const int total = ng * ne;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto cell = [&](Idx g, int ei) { return g * ne + ei; };
  auto idem_pos = [&](Idx e) {
    return static_cast<int>(std::find(idems.begin(), idems.end(), e) - idems.begin());
  };
  for (Idx g = 0; g < ng; ++g)
    for (int ei = 0; ei < ne; ++ei)
      for (Idx u = 0; u < s.size(); ++u) {
        const Idx e = idems[ei];
        if (!s.leq(e, s.mul(s.inv[u], u))) continue;
        const Idx conj = s.mul(s.mul(u, e), s.inv[u]);
        const Idx g2 = mgi.group.mul(g, mgi.group.inv[mgi.sigma[u]]);
        parent[find(cell(g, ei))] = find(cell(g2, idem_pos(conj)));
      }

  std::vector<Idx> class_of(total);
  std::vector<int> reps;
  for (int i = 0; i < total; ++i) {
    const int r = find(i);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      class_of[i] = static_cast<Idx>(reps.size());
      reps.push_back(r);
    } else {
      class_of[i] = static_cast<Idx>(it - reps.begin());
    }
  }

  const int nx = static_cast<int>(reps.size());
  Poset x;
  for (int i = 0; i < nx; ++i) {
    const int rep = reps[i];
    x.elements.push_back("[" + mgi.group.elements[rep / ne] + "," + s.elements[idems[rep % ne]] +
                         "]");
  }
  x.leq = BoolMatrix(nx);
  for (Idx g = 0; g < ng; ++g)
    for (int ei = 0; ei < ne; ++ei)
      for (int fj = 0; fj < ne; ++fj)
        if (s.leq(idems[ei], idems[fj]))
          x.leq.set(class_of[cell(g, ei)], class_of[cell(g, fj)], true);
  // the induced relation must be a partial order for the heuristic to work
  try {
    check_poset(x);
  } catch (const ValidationError& e) {
    out.report.add("orbit closure yields a poset", false, e.what());
    return out;
  }
  out.report.add("orbit closure yields a poset", true);

  IdxTable action(ng, nx);
  for (Idx k = 0; k < ng; ++k)
    for (Idx g = 0; g < ng; ++g)
      for (int ei = 0; ei < ne; ++ei)
        action(k, class_of[cell(g, ei)]) = class_of[cell(mgi.group.mul(k, g), ei)];

  std::vector<Idx> y;
  const Idx one = *mgi.group.identity_element();
  for (int ei = 0; ei < ne; ++ei) y.push_back(class_of[cell(one, ei)]);

  try {
    GroupPosetAction base = validate_group_poset_action(mgi.group, std::move(x), std::move(action));
    out.triple = validate_mcalister_triple(std::move(base), std::move(y));
    out.report.add("candidate triple satisfies MT1-MT3", true);
  } catch (const ValidationError& e) {
    out.report.add("candidate triple satisfies MT1-MT3", false, e.what());
    return out;
  }

  // verify the canonical map s -> ([1, s s^-1], sigma(s)) is an isomorphism
  const PSemigroup p = p_semigroup(*out.triple);
  bool iso = p.semigroup.size() == s.size();
  std::vector<Idx> map(s.size(), undef);
  if (iso) {
    for (Idx a = 0; a < s.size(); ++a) {
      const Idx yc = class_of[cell(one, idem_pos(s.mul(a, s.inv[a])))];
      Idx found = undef;
      for (Idx i = 0; i < p.semigroup.size(); ++i)
        if (p.y_part[i] == yc && p.g_part[i] == mgi.sigma[a]) found = i;
      map[a] = found;
      if (found == undef) iso = false;
    }
  }
  if (iso) {
    std::vector<char> seen(s.size(), 0);
    for (Idx a = 0; a < s.size(); ++a) {
      if (seen[map[a]]) iso = false;
      seen[map[a]] = 1;
    }
    for (Idx a = 0; a < s.size() && iso; ++a)
      for (Idx b = 0; b < s.size() && iso; ++b)
        iso = map[s.mul(a, b)] == p.semigroup.mul(map[a], map[b]);
  }
  out.report.add("P(G,X,Y) reproduces S via the canonical map", iso,
                 iso ? "" : "no witness found");
  if (!iso) out.triple.reset();
  return out;
}

}  // namespace esnkit
