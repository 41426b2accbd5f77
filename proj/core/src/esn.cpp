#include "esnkit/esn.hpp"

#include <numeric>

#include "esnkit/error.hpp"

namespace esnkit {

OrdGroupoid groupoid_of(const InvSemigroup& s) {
  const int n = s.size();
  std::vector<Idx> dom(n), cod(n);
  IdxTable comp(n, n);
  for (Idx a = 0; a < n; ++a) {
    dom[a] = s.mul(s.inv[a], a);
    cod[a] = s.mul(a, s.inv[a]);
  }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (auto r = restricted_product(s, a, b)) comp(a, b) = *r;
  // this always validates as an inductive groupoid; a failure here is a
  // bug upstream
  OrdGroupoid g =
      validate_ordered_groupoid(s.elements, std::move(dom), std::move(cod), s.inv, std::move(comp),
                                s.leq);
  if (!is_inductive(g))
    throw ValidationError("InternalInconsistency", "groupoid of a semigroup must be inductive");
  return g;
}

InvSemigroup semigroup_of(const OrdGroupoid& g) {
  if (!is_inductive(g)) throw ValidationError("NotInductive", "identities lack some meets");
  const int n = g.size();
  IdxTable table(n, n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      auto p = pseudoproduct(g, x, y);
      if (!p)
        throw ValidationError("InternalInconsistency",
                              "pseudoproduct undefined in an inductive groupoid", {x, y});
      table(x, y) = *p;
    }
  InvSemigroup s = validate_inverse_semigroup(g.elements, std::move(table));
  // the idempotents are precisely the identities
  for (Idx x = 0; x < n; ++x)
    if (s.is_idempotent(x) != g.is_identity(x))
      throw ValidationError("InternalInconsistency", "idempotents differ from identities", {x});
  return s;
}

InvSemigroup semigroup_of_with_zero(const OrdGroupoid& g) {
  if (!is_star_inductive(g))
    throw ValidationError("NotStarInductive", "a bounded identity pair lacks a meet");
  const int n = g.size();
  if (n + 1 > conversion_cap())
    throw ValidationError("SizeTooLarge", "output would exceed the conversion cap");
  for (const auto& name : g.elements)
    if (name == "0")
      throw ValidationError("SchemaError", "carrier already names an element \"0\"");

  std::vector<std::string> elements;
  elements.reserve(n + 1);
  elements.emplace_back("0");
  elements.insert(elements.end(), g.elements.begin(), g.elements.end());
  IdxTable table(n + 1, n + 1, 0);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      auto p = pseudoproduct(g, x, y);
      table(x + 1, y + 1) = p ? *p + 1 : 0;
    }
  return validate_inverse_semigroup(std::move(elements), std::move(table), Idx{0});
}

EsnWitness verify_esn_roundtrip(const InvSemigroup& s) {
  const InvSemigroup back = semigroup_of(groupoid_of(s));
  for (Idx a = 0; a < s.size(); ++a)
    for (Idx b = 0; b < s.size(); ++b)
      if (back.mul(a, b) != s.mul(a, b))
        throw ValidationError("RoundTripMismatch", "table differs at " + s.elements[a] + ", " +
                                                       s.elements[b],
                              {a, b});
  if (back.leq != s.leq) throw ValidationError("RoundTripMismatch", "natural order differs");
  if (back.inv != s.inv) throw ValidationError("RoundTripMismatch", "inverses differ");
  EsnWitness w;
  w.forward.resize(s.size());
  std::iota(w.forward.begin(), w.forward.end(), 0);
  w.backward = w.forward;
  return w;
}

EsnWitness verify_esn_roundtrip_g(const OrdGroupoid& g) {
  const OrdGroupoid back = groupoid_of(semigroup_of(g));
  if (back.comp != g.comp) throw ValidationError("RoundTripMismatch", "composition table differs");
  if (back.dom != g.dom || back.cod != g.cod || back.inv != g.inv)
    throw ValidationError("RoundTripMismatch", "groupoid structure maps differ");
  if (back.leq != g.leq) throw ValidationError("RoundTripMismatch", "order differs");
  EsnWitness w;
  w.forward.resize(g.size());
  std::iota(w.forward.begin(), w.forward.end(), 0);
  w.backward = w.forward;
  return w;
}

FunctorFlags transport_prehomomorphism(const InvSemigroup& src, const InvSemigroup& dst,
                                       std::span<const Idx> map) {
  if (!is_prehomomorphism(src, dst, map))
    throw ValidationError("NotAPrehomomorphism", "map is not a prehomomorphism");
  const OrdGroupoid gs = groupoid_of(src);
  const OrdGroupoid gt = groupoid_of(dst);
  FunctorFlags flags = classify_functor(gs, gt, map);
  if (!flags.ordered)
    throw ValidationError("InternalInconsistency",
                          "prehomomorphism did not transport to an ordered functor");
  // Theorem: homomorphisms correspond exactly to inductive functors.
  if (is_homomorphism(src, dst, map) != flags.inductive)
    throw ValidationError("InternalInconsistency",
                          "homomorphism/inductive-functor correspondence failed");
  return flags;
}

bool transport_ordered_functor(const OrdGroupoid& src, const OrdGroupoid& dst,
                               std::span<const Idx> map) {
  FunctorFlags flags = classify_functor(src, dst, map);
  if (!flags.ordered) throw ValidationError("NotOrderedFunctor", "map is not order-preserving");
  const InvSemigroup ss = semigroup_of(src);
  const InvSemigroup st = semigroup_of(dst);
  if (!is_prehomomorphism(ss, st, map))
    throw ValidationError("InternalInconsistency",
                          "ordered functor did not transport to a prehomomorphism");
  if (flags.inductive != is_homomorphism(ss, st, map))
    throw ValidationError("InternalInconsistency",
                          "inductive-functor/homomorphism correspondence failed");
  return flags.inductive;
}

}  // namespace esnkit
