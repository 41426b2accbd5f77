#ifndef ESNKIT_AFFINE_HPP
#define ESNKIT_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "esnkit/cancellative.hpp"
#include "esnkit/category.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit {

// A plain finite groupoid (no order; the order is born on the quotient).
struct Groupoid {
  std::vector<std::string> elements;
  std::vector<Idx> dom, cod, inv;
  IdxTable comp;

  // derived
  std::vector<char> identity;
  std::vector<Idx> identities;

  int size() const { return static_cast<int>(elements.size()); }
  bool is_identity(Idx x) const { return identity[x] != 0; }
  bool composable(Idx x, Idx y) const { return dom[x] == cod[y]; }
  bool is_principal() const;
};

Groupoid validate_groupoid(std::vector<std::string> elements, std::vector<Idx> dom,
                           std::vector<Idx> cod, std::vector<Idx> inv, IdxTable comp);
Groupoid strip_order(const OrdGroupoid& g);

// A category acting on a groupoid: act(a,x) is defined exactly when
// dom(a) = pi(x), and the action axioms A1-A8 hold (A7: the groupoid is
// principal; A8: the domain and range of a.x and b.x collapse together).
struct GroupoidAction {
  FinCategory cat;
  Groupoid gpd;
  std::vector<Idx> pi;  // gpd element -> cat identity
  IdxTable act;         // |cat| x |gpd|

  bool act_defined(Idx a, Idx x) const { return cat.dom[a] == pi[x]; }
  Idx apply(Idx a, Idx x) const { return act(a, x); }

  // x <= y under the action preorder: x = a.y for some a.
  bool preceq(Idx x, Idx y) const;
  std::vector<Idx> orbit(Idx x) const;  // C.x as a sorted list
};

// Checks A1-A8 exhaustively, with one AxiomViolation(tag, witnesses) per
// axiom, plus the derived consequences: each pi-fiber is a union of
// connected components, and actions send identities to identities.
GroupoidAction validate_action(FinCategory cat, Groupoid gpd, std::vector<Idx> pi, IdxTable act);

// Affine = action + right cancellative category + surjective pi + right
// cancellation (a.x = b.x forces a = b).
struct AffineSystem {
  GroupoidAction base;
};

AffineSystem validate_affine(GroupoidAction base);

// The quotient ordered groupoid J(C,G): carrier = equivalence classes of
// the action preorder, product through compatible representatives
// (re-verified over all representative pairs), order induced by the
// preorder.
struct JGroupoid {
  OrdGroupoid groupoid;
  std::vector<Idx> class_of;  // gpd element -> J element
  std::vector<Idx> rep;       // J element -> least representative
};

JGroupoid j_of(const GroupoidAction& s);

// Orbit condition: nonempty intersections of identity orbits are orbits.
// Equivalent to J(C,G) being *-inductive.
bool orbit_condition(const GroupoidAction& s);

// The canonical affine system (R(G), R(G)) of an ordered groupoid.
struct CanonicalAffine {
  AffineSystem system;
  LeechCategory cat;                       // R(G)
  std::vector<std::pair<Idx, Idx>> pairs;  // gpd carrier: (x,y), cod x = cod y
  Idx pair_index(Idx x, Idx y) const;
};

CanonicalAffine canonical_affine(const OrdGroupoid& g);

// alpha(g) = [(cod g, g)] is an isomorphism G -> J(R(G), R(G)); checked
// exactly as constructed. Throws Mismatch on any failure.
Report verify_canonical_universality(const OrdGroupoid& g);

struct MorphismFlags {
  bool morphism = false;
  bool equivalence = false;  // E1-E3
};

// A morphism of affine systems is a functor pair compatible with the
// actions; an equivalence also satisfies E1-E3. induced_functor builds
// the ordered functor J(s1) -> J(s2) and verifies it is an isomorphism
// whenever the morphism is an equivalence.
MorphismFlags affine_morphism_check(const AffineSystem& s1, const AffineSystem& s2,
                                    const std::vector<Idx>& cat_map,
                                    const std::vector<Idx>& gpd_map);
std::vector<Idx> induced_functor(const AffineSystem& s1, const AffineSystem& s2,
                                 const std::vector<Idx>& cat_map, const std::vector<Idx>& gpd_map);

bool is_cyclic(const AffineSystem& s);
bool is_affine_monoid_system(const AffineSystem& s);

// From a category acting on a set: the R* relation, its principal
// groupoid, and the diagonal action, validated through A8.
struct SetAction {
  FinCategory cat;
  int set_size = 0;
  std::vector<std::string> point_names;
  std::vector<Idx> pi;
  IdxTable act;
};

GroupoidAction rstar_system(const SetAction& s);

// An inverse semigroup with zero, rebuilt from its three ingredients:
// the right cancellative category of the nonzero part, Green's R-relation
// groupoid, and the natural action. Verifies the explicit isomorphism.
Report semigroup_from_affine(const InvSemigroup& s);

// Groupoid of the nonzero part of an inverse semigroup with zero.
OrdGroupoid nonzero_groupoid(const InvSemigroup& s);

// The per-lemma battery for actions: J-product well-definedness over all
// representative choices, selector-based pseudoproduct agreement, the
// preorder/orbit cross-checks, and the A7+A8 consequence.
Report lemma_report_affine(const GroupoidAction& s);

}  // namespace esnkit

#endif  // ESNKIT_AFFINE_HPP
