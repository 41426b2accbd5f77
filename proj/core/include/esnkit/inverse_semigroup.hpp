#ifndef ESNKIT_INVERSE_SEMIGROUP_HPP
#define ESNKIT_INVERSE_SEMIGROUP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esnkit/types.hpp"

namespace esnkit {

// A finite inverse semigroup given by a total multiplication table.
// Validation populates the derived caches (unique inverses, idempotents,
// natural partial order); values are immutable afterwards.
struct InvSemigroup {
  std::vector<std::string> elements;
  IdxTable table;
  std::optional<Idx> zero;

  // derived
  std::vector<Idx> inv;
  std::vector<char> idempotent;
  BoolMatrix leq;  // leq(s,t) <=> s = t e for some idempotent e

  int size() const { return static_cast<int>(elements.size()); }
  Idx mul(Idx a, Idx b) const { return table(a, b); }
  bool is_idempotent(Idx a) const { return idempotent[a] != 0; }
  bool below(Idx a, Idx b) const { return leq(a, b); }
  std::vector<Idx> idempotent_list() const;

  // The unique identity element, if this semigroup is a monoid.
  std::optional<Idx> identity_element() const;
  bool is_group() const;
};

// Checks associativity, uniqueness of inverses, commuting idempotents and
// (when set) that the zero is absorbing; fills the derived caches.
// Throws NotAssociative(i,j,k), NoUniqueInverse(i), IdempotentsDontCommute(e,f),
// ZeroNotAbsorbing(z,s).
InvSemigroup validate_inverse_semigroup(std::vector<std::string> elements, IdxTable table,
                                        std::optional<Idx> zero = {});

// Recomputes the natural partial order from the table: m(s,t) iff s = t e
// for some idempotent e.
BoolMatrix natural_partial_order(const InvSemigroup& s);

// s . t, defined exactly when s^-1 s = t t^-1.
std::optional<Idx> restricted_product(const InvSemigroup& s, Idx a, Idx b);

// Rebuilds the full product from the restricted product and the order:
// e = s^-1 s t t^-1, s' = s e, t' = e t, result s'.t'. Must agree with the
// table; throws InternalInconsistency otherwise.
Idx reconstruct_full_product(const InvSemigroup& s, Idx a, Idx b);

// theta(st) <= theta(s) theta(t) for all pairs, cross-checked against the
// restricted-product + order characterization. Throws
// CharacterizationMismatch if the two tests disagree.
bool is_prehomomorphism(const InvSemigroup& src, const InvSemigroup& dst,
                        std::span<const Idx> map);

// Equality theta(st) = theta(s) theta(t), cross-checked against
// prehomomorphism + multiplicativity on idempotents.
bool is_homomorphism(const InvSemigroup& src, const InvSemigroup& dst,
                     std::span<const Idx> map);

// e <= s with e idempotent forces s idempotent.
bool is_e_unitary(const InvSemigroup& s);

// Runs the per-lemma battery for inverse semigroups: full-product
// reconstruction on all pairs, uniqueness of order-restrictions, order
// facts. One line per check.
Report lemma_report_semigroup(const InvSemigroup& s);

}  // namespace esnkit

#endif  // ESNKIT_INVERSE_SEMIGROUP_HPP
