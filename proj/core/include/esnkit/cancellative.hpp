#ifndef ESNKIT_CANCELLATIVE_HPP
#define ESNKIT_CANCELLATIVE_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "esnkit/category.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit {

// The ordered groupoid of spans of a left cancellative category: classes
// [a,b] of arrow pairs with a common domain, up to the isomorphism action.
// Carriers are canonical representatives (lexicographically least pair in
// the orbit), so equality tests are on-the-nose.
struct SpanGroupoid {
  OrdGroupoid groupoid;
  std::vector<std::pair<Idx, Idx>> reps;        // canonical (a,b) per element
  std::map<std::pair<Idx, Idx>, Idx> index;     // every pair in U -> class
  Idx class_of(Idx a, Idx b) const { return index.at({a, b}); }
};

// G(C) for left cancellative C; throws NotLeftCancellative. The result has
// maximal identities, [a,a]° = [cod a, cod a], and every D-class contains
// a maximal identity (both verified).
SpanGroupoid g_of_left(const FinCategory& c);

// The dual construction on pairs with a common codomain, up to the left
// isomorphism action; throws NotRightCancellative.
SpanGroupoid g_of_right(const FinCategory& c);

// L(G): arrows (e,x) with cod x <= e, composition (e,x)(f,y) = (e, x(x)y);
// always left cancellative, with invertible arrows forming a groupoid
// isomorphic to G (verified). R(G) is the dual on pairs (x,e) with
// dom x <= e; the isomorphism L(G)^op = R(G) is verified arrow by arrow.
struct LeechCategory {
  FinCategory category;
  std::vector<std::pair<Idx, Idx>> arrows;   // (e,x) for L, (x,e) for R
  std::map<std::pair<Idx, Idx>, Idx> index;
  std::vector<Idx> unit_embedding;           // G -> invertible arrows
  Idx index_of(Idx first, Idx second) const { return index.at({first, second}); }
};

LeechCategory l_of(const OrdGroupoid& g);
LeechCategory r_of(const OrdGroupoid& g);

// C embeds in LG(C) as a full, isomorphism-dense subcategory via
// iota(a) = ([cod a, cod a], [a, dom a]); hence the two are equivalent.
Report verify_lg_roundtrip(const FinCategory& c);

// The triple groupoid over G: <e,x,f> with dom x <= f, cod x <= e. It is
// isomorphic to GL(G) via alpha<e,x,f> = [(e,x),(f,dom x)] and, when G has
// maximal identities with the D-class property, an enlargement of G.
struct BarGroupoid {
  OrdGroupoid groupoid;
  std::vector<std::array<Idx, 3>> triples;
  std::map<std::array<Idx, 3>, Idx> index;
  std::vector<Idx> alpha;  // bar G -> GL(G)
  Report report;
};

BarGroupoid bar_groupoid(const OrdGroupoid& g);

// G^l(C) for a left rooted category: spans with both legs into the weak
// terminal identity. Coincides with the local subgroupoid of G(C) at
// [1,1] (cross-checked against the pseudoproduct description). Throws
// NotWeakTerminal.
SpanGroupoid g_rooted(const FinCategory& c, Idx one);

std::optional<Idx> find_weak_terminal_identity(const FinCategory& c);
std::optional<Idx> find_maximum_identity(const OrdGroupoid& g);

// The rooted correspondence, one report line per item:
//  - from a groupoid with maximum identity: L(G) is left rooted and
//    G^l(L(G)) is isomorphic to G via x -> [(1,x),(1,dom x)];
//  - from a left rooted category: G^l(C) has a maximum identity and
//    theta(a) = ([c_f,c_f],[c_f a,c_e]) is an equivalence C -> L(G^l(C));
//  - with all (allowable) pullbacks the associated inverse monoid
//    (with zero) validates.
Report verify_rooted_theorem_g(const OrdGroupoid& g);
Report verify_rooted_theorem_c(const FinCategory& c);

// The associated left rooted category of an inverse monoid is cancellative
// iff the monoid is E-unitary; the failing direction carries a witness
// pair. Throws NotAMonoid.
Report e_unitary_iff_cancellative(const InvSemigroup& s);

// For a 0-bisimple inverse monoid, the left cancellative monoid
// L1 = {s : s^-1 s = 1} determines it; also checks that principal right
// ideals are disjoint or intersect in a principal right ideal. Throws
// NotAMonoid.
struct BisimpleData {
  bool zero_stripped = false;
  bool bisimple = false;
  std::optional<FinCategory> l1;
  std::vector<Idx> l1_members;
  bool principal_ideal_condition = false;
};

BisimpleData bisimple_monoid_data(const InvSemigroup& s);

}  // namespace esnkit

#endif  // ESNKIT_CANCELLATIVE_HPP
