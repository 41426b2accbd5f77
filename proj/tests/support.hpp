#ifndef ESNKIT_TESTS_SUPPORT_HPP
#define ESNKIT_TESTS_SUPPORT_HPP

// Test-only oracles and randomized structure generators. The oracles stay
// independent of the library code paths they check: partial injections
// are composed directly as maps, orders come from graph containment, and
// expected counts come from closed formulas.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "esnkit/generators.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/mcalister.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace testsupport {

// A partial injection on {0..n-1}; img[x] = -1 means undefined at x.
struct PartialMap {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()); }

  // (this after first)(x) = this(first(x))
  PartialMap after(const PartialMap& first) const {
    PartialMap out{std::vector<int>(img.size(), -1)};
    for (int x = 0; x < degree(); ++x)
      if (first.img[x] != -1 && img[first.img[x]] != -1) out.img[x] = img[first.img[x]];
    return out;
  }

  PartialMap inverse() const {
    PartialMap out{std::vector<int>(img.size(), -1)};
    for (int x = 0; x < degree(); ++x)
      if (img[x] != -1) out.img[img[x]] = x;
    return out;
  }

  bool subset_of(const PartialMap& other) const {
    for (int x = 0; x < degree(); ++x)
      if (img[x] != -1 && other.img[x] != img[x]) return false;
    return true;
  }

  bool operator==(const PartialMap&) const = default;
  bool operator<(const PartialMap& o) const {
    auto key = [](const PartialMap& f) {
      int mask = 0, count = 0;
      for (int x = 0; x < f.degree(); ++x)
        if (f.img[x] != -1) {
          mask |= 1 << x;
          ++count;
        }
      return std::make_tuple(count, mask, f.img);
    };
    return key(*this) < key(o);
  }
};

// All partial injections on an n-set, in the canonical order the library
// documents: by domain size, then domain mask, then image tuple.
inline std::vector<PartialMap> all_partial_injections(int n) {
  std::vector<PartialMap> out;
  std::vector<int> current(n, -1);
  auto rec = [&](auto&& self, int pos, int domain_mask, int used) -> void {
    if (pos == n) {
      out.push_back({current});
      return;
    }
    if ((domain_mask >> pos & 1) == 0) {
      self(self, pos + 1, domain_mask, used);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used >> img & 1) continue;
      current[pos] = img;
      self(self, pos + 1, domain_mask, used | (1 << img));
      current[pos] = -1;
    }
  };
  for (int mask = 0; mask < (1 << n); ++mask) rec(rec, 0, mask, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// The multiplication table of I_n computed purely from map composition.
struct InOracle {
  std::vector<PartialMap> maps;
  esnkit::IdxTable table;

  explicit InOracle(int n) : maps(all_partial_injections(n)) {
    const int m = static_cast<int>(maps.size());
    std::map<PartialMap, esnkit::Idx> pos;
    for (esnkit::Idx i = 0; i < m; ++i) pos[maps[i]] = i;
    table = esnkit::IdxTable(m, m);
    for (esnkit::Idx i = 0; i < m; ++i)
      for (esnkit::Idx j = 0; j < m; ++j) table(i, j) = pos.at(maps[i].after(maps[j]));
  }
};

inline long long in_size_formula(int n) {
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

// ---- randomized structures (all deterministic under the given rng) ----

// Intersection-closed family of subsets of a small ground set, as a meet
// semilattice under intersection.
inline esnkit::InvSemigroup random_semilattice(std::mt19937& rng, int ground = 4, int seeds = 3) {
  std::uniform_int_distribution<int> pick(0, (1 << ground) - 1);
  std::vector<int> masks;
  for (int i = 0; i < seeds; ++i) masks.push_back(pick(rng));
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      if (std::find(masks.begin(), masks.end(), masks[i] & masks[j]) == masks.end())
        masks.push_back(masks[i] & masks[j]);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  const int m = static_cast<int>(masks.size());
  std::vector<std::string> names;
  for (int v : masks) names.push_back("s" + std::to_string(v));
  esnkit::IdxTable table(m, m);
  for (esnkit::Idx i = 0; i < m; ++i)
    for (esnkit::Idx j = 0; j < m; ++j) {
      const int meet = masks[i] & masks[j];
      table(i, j) = static_cast<esnkit::Idx>(
          std::find(masks.begin(), masks.end(), meet) - masks.begin());
    }
  return esnkit::validate_inverse_semigroup(std::move(names), std::move(table));
}

// A random poset as the reachability order of a DAG on {0..n-1}.
inline esnkit::BoolMatrix random_poset(std::mt19937& rng, int n, double density = 0.3) {
  esnkit::BoolMatrix leq(n);
  std::bernoulli_distribution edge(density);
  for (esnkit::Idx i = 0; i < n; ++i) leq.set(i, i, true);
  for (esnkit::Idx i = 0; i < n; ++i)
    for (esnkit::Idx j = i + 1; j < n; ++j)
      if (edge(rng)) leq.set(i, j, true);
  for (esnkit::Idx k = 0; k < n; ++k)
    for (esnkit::Idx i = 0; i < n; ++i)
      for (esnkit::Idx j = 0; j < n; ++j)
        if (leq(i, k) && leq(k, j)) leq.set(i, j, true);
  return leq;
}

// A McAlister triple built from a core meet semilattice K, a chain wing
// replicated over Z_n and rotated by the action, and Y = K + wing copy 0.
// Valid by construction; the validator re-checks everything.
inline esnkit::McAlisterTriple random_triple(std::mt19937& rng) {
  std::uniform_int_distribution<int> ground_pick(1, 3), seed_pick(1, 2);
  std::vector<int> masks;
  {
    const int ground = ground_pick(rng);
    std::uniform_int_distribution<int> pick(0, (1 << ground) - 1);
    for (int i = 0, seeds = seed_pick(rng) + 1; i < seeds; ++i) masks.push_back(pick(rng));
    for (size_t i = 0; i < masks.size(); ++i)
      for (size_t j = 0; j < masks.size(); ++j)
        if (std::find(masks.begin(), masks.end(), masks[i] & masks[j]) == masks.end())
          masks.push_back(masks[i] & masks[j]);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    while (static_cast<int>(masks.size()) > 3) masks.pop_back();  // keep X small
    // keep the family intersection closed after truncation
    for (size_t i = 0; i < masks.size(); ++i)
      for (size_t j = 0; j < masks.size(); ++j)
        if (std::find(masks.begin(), masks.end(), masks[i] & masks[j]) == masks.end())
          masks.push_back(masks[i] & masks[j]);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  }
  const int k = static_cast<int>(masks.size());

  std::uniform_int_distribution<int> len_pick(1, 2);
  const int wing = len_pick(rng);
  const int max_copies = std::max(1, (8 - k) / wing);
  std::uniform_int_distribution<int> copies_pick(1, std::min(4, max_copies));
  const int ng = copies_pick(rng);

  // kappa: monotone anchor of each wing level into K
  std::vector<int> kappa(wing);
  {
    std::uniform_int_distribution<int> pick(0, k - 1);
    kappa[wing - 1] = pick(rng);
    for (int w = wing - 2; w >= 0; --w) {
      std::vector<int> below;
      for (int i = 0; i < k; ++i)
        if ((masks[i] & masks[kappa[w + 1]]) == masks[i]) below.push_back(i);
      kappa[w] = below[std::uniform_int_distribution<int>(0, (int)below.size() - 1)(rng)];
    }
  }

  const int nx = k + ng * wing;
  std::vector<std::string> xnames;
  for (int i = 0; i < k; ++i) xnames.push_back("k" + std::to_string(i));
  for (int c = 0; c < ng; ++c)
    for (int w = 0; w < wing; ++w)
      xnames.push_back("w" + std::to_string(w) + "c" + std::to_string(c));
  auto wing_index = [&](int c, int w) { return k + c * wing + w; };

  esnkit::BoolMatrix leq(nx);
  for (esnkit::Idx i = 0; i < nx; ++i) leq.set(i, i, true);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((masks[i] & masks[j]) == masks[i]) leq.set(i, j, true);
  for (int c = 0; c < ng; ++c)
    for (int w = 0; w < wing; ++w) {
      for (int w2 = w; w2 < wing; ++w2) leq.set(wing_index(c, w), wing_index(c, w2), true);
      for (int i = 0; i < k; ++i)
        if ((masks[i] & masks[kappa[w]]) == masks[i]) leq.set(i, wing_index(c, w), true);
    }

  esnkit::InvSemigroup group = esnkit::gen_cyclic_group(ng);
  esnkit::IdxTable action(ng, nx);
  for (int g = 0; g < ng; ++g) {
    for (int i = 0; i < k; ++i) action(g, i) = i;
    for (int c = 0; c < ng; ++c)
      for (int w = 0; w < wing; ++w) action(g, wing_index(c, w)) = wing_index((c + g) % ng, w);
  }

  std::vector<esnkit::Idx> y;
  for (int i = 0; i < k; ++i) y.push_back(i);
  for (int w = 0; w < wing; ++w) y.push_back(wing_index(0, w));

  esnkit::GroupPosetAction base = esnkit::validate_group_poset_action(
      std::move(group), esnkit::Poset{std::move(xnames), std::move(leq)}, std::move(action));
  return esnkit::validate_mcalister_triple(std::move(base), std::move(y));
}

}  // namespace testsupport

#endif  // ESNKIT_TESTS_SUPPORT_HPP
