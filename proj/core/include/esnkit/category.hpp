#ifndef ESNKIT_CATEGORY_HPP
#define ESNKIT_CATEGORY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esnkit/types.hpp"

namespace esnkit {

// A finite category given by its arrow set: dom/cod map into identity
// arrows, comp(x,y) = x after y, defined exactly when dom(x) = cod(y).
// Cancellativity flags and the isomorphism set are computed on validation.
struct FinCategory {
  std::vector<std::string> arrows;
  std::vector<Idx> dom, cod;
  IdxTable comp;

  // derived
  std::vector<char> identity;
  std::vector<Idx> identities;
  bool left_cancellative = false;
  bool right_cancellative = false;
  std::vector<Idx> iso_inverse;  // two-sided inverse arrow, or undef

  int size() const { return static_cast<int>(arrows.size()); }
  bool is_identity(Idx x) const { return identity[x] != 0; }
  bool is_iso(Idx x) const { return iso_inverse[x] != undef; }
  bool composable(Idx x, Idx y) const { return dom[x] == cod[y]; }
};

// Category laws by exhaustive scan; cancellativity flags by triple scan.
// Throws NotACategory(witness).
FinCategory validate_category(std::vector<std::string> arrows, std::vector<Idx> dom,
                              std::vector<Idx> cod, IdxTable comp);

FinCategory opposite(const FinCategory& c);

// A pullback of the cospan (y, w): a completing pair (p, q) with
// y p = w q through which every other completion factors uniquely.
// Returns the least universal candidate, or nothing.
std::optional<std::pair<Idx, Idx>> pullback(const FinCategory& c, Idx y, Idx w);

// Functor checks between categories.
void check_functor(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map);
bool is_faithful(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map);
bool is_full(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map);
bool is_essentially_surjective(const FinCategory& src, const FinCategory& dst,
                               std::span<const Idx> map);
bool is_equivalence(const FinCategory& src, const FinCategory& dst, std::span<const Idx> map);

// Every cospan has a pullback / every completable cospan has a pullback.
// The "allowable" predicate is stated twice in the source material, with
// and without the explicit cod(a) = cod(b) restriction; both are exposed.
bool has_all_pullbacks(const FinCategory& c);
bool has_all_allowable_pullbacks(const FinCategory& c);
bool has_all_allowable_pullbacks_restricted(const FinCategory& c);

// Per-lemma battery for categories (pullback universality facts).
Report lemma_report_category(const FinCategory& c);

}  // namespace esnkit

#endif  // ESNKIT_CATEGORY_HPP
