#ifndef ESNKIT_MCALISTER_HPP
#define ESNKIT_MCALISTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "esnkit/esn.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit {

// A finite poset with named points.
struct Poset {
  std::vector<std::string> elements;
  BoolMatrix leq;
  int size() const { return static_cast<int>(elements.size()); }
};

// A group acting on a poset by order automorphisms on the left.
struct GroupPosetAction {
  InvSemigroup group;  // validated, single idempotent
  Poset poset;
  IdxTable action;  // |G| x |X| -> X

  Idx act(Idx g, Idx x) const { return action(g, x); }
};

// Validates: group is a group, poset is a poset, identity acts trivially,
// the action respects multiplication and preserves the order.
GroupPosetAction validate_group_poset_action(InvSemigroup group, Poset poset, IdxTable action);

// P(G,X): carrier X x G, (x,g)(y,h) = (x,gh) iff x = g.y, ordered
// coordinatewise on X with equal group parts.
struct SemidirectGroupoid {
  OrdGroupoid groupoid;
  std::vector<Idx> poset_part;  // per element
  std::vector<Idx> group_part;
  OrdGroupoid group_as_groupoid;   // the target of pi2
  std::vector<Idx> pi2;            // ordered covering functor onto the group
  Idx index_of(Idx x, Idx g) const;
};

SemidirectGroupoid semidirect_groupoid(const GroupPosetAction& a);

// A surjective ordered covering functor onto a group is, up to
// isomorphism, the projection of a semidirect product. Returns the
// recovered action together with the isomorphism theta with pi2 .theta = f.
struct CoveringFactorization {
  GroupPosetAction action;
  SemidirectGroupoid semidirect;
  std::vector<Idx> theta;  // source -> P(G,X), an isomorphism
};

CoveringFactorization covering_to_semidirect(const OrdGroupoid& source,
                                             const OrdGroupoid& group_target,
                                             const std::vector<Idx>& functor);

struct McAlisterTriple {
  GroupPosetAction base;
  std::vector<Idx> y;  // subset of the poset, sorted
  std::vector<char> in_y;
};

// MT1 (order ideal + meet semilattice within Y), MT2 (G.Y = X),
// MT3 (g.Y meets Y for every g). Errors MT1Violation/MT2Violation/
// MT3Violation with witnesses.
McAlisterTriple validate_mcalister_triple(GroupPosetAction base, std::vector<Idx> y);

// P(G,X,Y) with product (e,g)(f,h) = (e /\ g.f, gh); the meet is computed
// in X and must exist (MeetMissing otherwise, which is a bug by the meet
// lemma). Output is validated, E-unitary, idempotents order-isomorphic
// to Y.
struct PSemigroup {
  InvSemigroup semigroup;
  std::vector<Idx> y_part, g_part;  // carrier decoding
};

PSemigroup p_semigroup(const McAlisterTriple& t);

// Quotient by the least group congruence (s ~ t iff some u <= s,t).
struct MaxGroupImage {
  InvSemigroup group;
  std::vector<Idx> sigma;  // S -> group, surjective homomorphism
};

MaxGroupImage max_group_image(const InvSemigroup& s);

// Checks the semidirect-enlargement characterization of E-unitarity on
// caller-supplied embedding data: iota must be an ordered embedding of the
// groupoid of S into P(G,X), the image an enlargement, and pi2 surjective
// on the image.
Report verify_semidirect_enlargement(const InvSemigroup& s, const GroupPosetAction& a,
                                     const std::vector<Idx>& iota);

// Best-effort converse of the P-theorem: builds a candidate triple from
// the maximum group image and the idempotents via orbit closure, then
// verifies it reproduces S. Heuristic: absence of a witness never refutes
// E-unitarity.
struct TripleSearchResult {
  bool e_unitary = false;
  std::optional<McAlisterTriple> triple;
  Report report;
};

TripleSearchResult search_mcalister_triple(const InvSemigroup& s);

}  // namespace esnkit

#endif  // ESNKIT_MCALISTER_HPP
