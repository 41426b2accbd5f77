#ifndef ESNKIT_ISO_HPP
#define ESNKIT_ISO_HPP

#include <optional>
#include <vector>

#include "esnkit/category.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit {

// Backtracking isomorphism search over finite relational structures, with
// iterated-refinement pruning on invariant profiles. Deterministic: the
// first witness in search order is reported. Throws IsoSearchBudget once
// more than `budget` search nodes are expanded.
struct RelStructure {
  int n = 0;
  std::vector<long long> unary;               // initial invariant colors
  std::vector<const IdxTable*> ops;           // partial binary operations
  std::vector<const std::vector<Idx>*> maps;  // unary functions
  std::vector<const BoolMatrix*> rels;        // binary relations
};

std::optional<std::vector<Idx>> find_isomorphism(const RelStructure& a, const RelStructure& b,
                                                 long long budget = 1000000);

std::optional<std::vector<Idx>> find_isomorphism(const InvSemigroup& a, const InvSemigroup& b,
                                                 long long budget = 1000000);
std::optional<std::vector<Idx>> find_isomorphism(const OrdGroupoid& a, const OrdGroupoid& b,
                                                 long long budget = 1000000);
std::optional<std::vector<Idx>> find_isomorphism(const FinCategory& a, const FinCategory& b,
                                                 long long budget = 1000000);

}  // namespace esnkit

#endif  // ESNKIT_ISO_HPP
