#ifndef ESNKIT_ESN_HPP
#define ESNKIT_ESN_HPP

#include <span>
#include <vector>

#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit {

// Witness of an on-the-nose round trip: both maps are identity index maps.
struct EsnWitness {
  std::vector<Idx> forward;
  std::vector<Idx> backward;
};

// The inductive groupoid of an inverse semigroup: same carrier, restricted
// product, dom(s) = s^-1 s, cod(s) = s s^-1, natural partial order.
OrdGroupoid groupoid_of(const InvSemigroup& s);

// The inverse semigroup of an inductive groupoid: table = pseudoproduct.
// Throws NotInductive.
InvSemigroup semigroup_of(const OrdGroupoid& g);

// Adjoins a zero (always index 0, named "0") to a *-inductive groupoid and
// sends undefined pseudoproducts there. Throws NotStarInductive.
InvSemigroup semigroup_of_with_zero(const OrdGroupoid& g);

// Table and order equality is demanded on the same carrier indices, not up
// to isomorphism. Throws RoundTripMismatch.
EsnWitness verify_esn_roundtrip(const InvSemigroup& s);
EsnWitness verify_esn_roundtrip_g(const OrdGroupoid& g);

// A prehomomorphism reinterpreted as an ordered functor between the
// associated groupoids (and back). The returned flags must report ordered;
// homomorphisms correspond to inductive functors. Throws
// NotAPrehomomorphism / NotOrderedFunctor.
FunctorFlags transport_prehomomorphism(const InvSemigroup& src, const InvSemigroup& dst,
                                       std::span<const Idx> map);
bool transport_ordered_functor(const OrdGroupoid& src, const OrdGroupoid& dst,
                               std::span<const Idx> map);

}  // namespace esnkit

#endif  // ESNKIT_ESN_HPP
