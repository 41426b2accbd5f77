#ifndef ESNKIT_GENERATORS_HPP
#define ESNKIT_GENERATORS_HPP

#include <string>

#include "esnkit/category.hpp"
#include "esnkit/inverse_semigroup.hpp"

namespace esnkit {

// Standard families, all validated before return. Generators refuse
// carriers larger than generator_cap(). Throws UnknownFamily / SizeTooLarge.
//
// Inverse semigroups:
//   symmetric_inverse_monoid(n)  all partial injections on an n-set
//   chain_semilattice(n)         n-chain under min
//   diamond_semilattice(k)       bottom, k incomparable middles, top
//   cyclic_group(n)              Z_n
//   brandt(n)                    Brandt semigroup over the trivial group
InvSemigroup gen_symmetric_inverse_monoid(int n);
InvSemigroup gen_chain_semilattice(int n);
InvSemigroup gen_diamond_semilattice(int k);
InvSemigroup gen_cyclic_group(int n);
InvSemigroup gen_brandt(int n);

// Categories:
//   monoid_category(n)          Z_n as a one-object category
//   chain_poset_category(n)     the n-chain poset, arrows = comparabilities
//   diamond_poset_category(k)   bottom, k middles, top as a poset category
//   free_category(n)            paths in the doubled-chain quiver on n+1
//                               vertices (two parallel edges per step)
FinCategory gen_monoid_category(int n);
FinCategory gen_chain_poset_category(int n);
FinCategory gen_diamond_poset_category(int k);
FinCategory gen_free_category(int n);

bool is_semigroup_family(const std::string& family);
bool is_category_family(const std::string& family);
InvSemigroup generate_standard(const std::string& family, int n);
FinCategory generate_category(const std::string& family, int n);

}  // namespace esnkit

#endif  // ESNKIT_GENERATORS_HPP
