#ifndef ESNKIT_ORDERED_GROUPOID_HPP
#define ESNKIT_ORDERED_GROUPOID_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esnkit/types.hpp"

namespace esnkit {

// A finite ordered groupoid: partial composition comp(x,y), defined exactly
// when dom(x) = cod(y); inversion; identity maps; and a partial order
// subject to the (OG) axioms. Composition applies the right factor first,
// like function composition.
struct OrdGroupoid {
  std::vector<std::string> elements;
  std::vector<Idx> dom, cod, inv;
  IdxTable comp;
  BoolMatrix leq;

  // derived
  std::vector<char> identity;
  std::vector<Idx> identities;

  int size() const { return static_cast<int>(elements.size()); }
  bool is_identity(Idx x) const { return identity[x] != 0; }
  bool below(Idx a, Idx b) const { return leq(a, b); }
  bool composable(Idx x, Idx y) const { return dom[x] == cod[y]; }
};

// Which axiomatization of "ordered groupoid" to enforce. Restriction is
// {OG1,OG2,OG3} with OG3* re-checked; OrderIdeal is {OG1,OG2,OI,OG4}; Both
// runs the two systems as mutual oracles and requires agreement.
enum class OgAxioms { Restriction, OrderIdeal, Both };

// Verifies groupoid laws, the partial order, and the ordered-groupoid
// axioms. Errors carry the violated axiom name and witnesses, e.g.
// OG3Violation(x,e,z1,z2). Also asserts the derived hom-set triviality.
OrdGroupoid validate_ordered_groupoid(std::vector<std::string> elements, std::vector<Idx> dom,
                                      std::vector<Idx> cod, std::vector<Idx> inv, IdxTable comp,
                                      BoolMatrix leq, OgAxioms axioms = OgAxioms::Both);

// (x|e): the unique z <= x with dom(z) = e. Requires e identity, e <= dom(x).
Idx restriction(const OrdGroupoid& g, Idx x, Idx e);

// (e|x), computed as (x^-1|e)^-1 and cross-checked against direct search.
Idx corestriction(const OrdGroupoid& g, Idx e, Idx x);

// Greatest lower bound of two identities among identities, if any. Ties
// (two maximal lower bounds) mean "no meet".
std::optional<Idx> identity_meet(const OrdGroupoid& g, Idx e, Idx f);

// x (x) y = (x|e)(e|y) with e = dom(x) /\ cod(y); simultaneously computes
// the maximum of <x,y> = {(x',y') composable, x' <= x, y' <= y} and throws
// OracleMismatch if the two characterizations disagree.
std::optional<Idx> pseudoproduct(const OrdGroupoid& g, Idx x, Idx y);

bool is_inductive(const OrdGroupoid& g);
bool is_star_inductive(const OrdGroupoid& g);

struct FunctorFlags {
  bool ordered = false;
  bool inductive = false;
  bool star_injective = false;
  bool star_bijective = false;  // covering
  bool ordered_embedding = false;
};

// Verifies the map is a functor (throws NotAFunctor with witness) and
// computes the classification flags by definition.
FunctorFlags classify_functor(const OrdGroupoid& src, const OrdGroupoid& dst,
                              std::span<const Idx> map);

// GE1-GE3 for a candidate ordered subgroupoid given by its member set.
// Throws NotAnOrderedSubgroupoid if the subset is not one.
bool is_enlargement(const OrdGroupoid& h, const std::vector<Idx>& members);

// Connected components of the underlying groupoid (edges {dom(x),cod(x)}).
// Returns a component id per element.
std::vector<int> d_classes(const OrdGroupoid& g);

struct MaximalIdentityStructure {
  // e -> e°, present iff every identity is below exactly one maximal identity
  std::optional<std::vector<Idx>> circ;  // indexed by element; undef off identities
  bool every_dclass_has_maximal = false;
};

MaximalIdentityStructure maximal_identity_structure(const OrdGroupoid& g);

// The per-lemma battery for ordered groupoids: restriction calculus,
// factorization of elements below a product, monotonicity, pseudoproduct
// oracle agreement and associativity-where-defined.
Report lemma_report_groupoid(const OrdGroupoid& g);

}  // namespace esnkit

#endif  // ESNKIT_ORDERED_GROUPOID_HPP
