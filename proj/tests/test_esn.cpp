#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esnkit/error.hpp"
#include "esnkit/esn.hpp"
#include "esnkit/generators.hpp"
#include "support.hpp"

using namespace esnkit;

namespace {

std::vector<InvSemigroup> roundtrip_corpus() {
  std::vector<InvSemigroup> corpus;
  for (int n = 1; n <= 3; ++n) corpus.push_back(gen_symmetric_inverse_monoid(n));
  for (int n = 1; n <= 6; ++n) corpus.push_back(gen_cyclic_group(n));
  for (int n = 1; n <= 5; ++n) corpus.push_back(gen_chain_semilattice(n));
  for (int k = 1; k <= 3; ++k) corpus.push_back(gen_diamond_semilattice(k));
  for (int n = 1; n <= 3; ++n) corpus.push_back(gen_brandt(n));
  std::mt19937 rng(424242);
  for (int i = 0; i < 6; ++i) corpus.push_back(testsupport::random_semilattice(rng));
  return corpus;
}

}  // namespace

TEST_CASE("semigroup -> groupoid: structure carried verbatim") {
  const InvSemigroup s = gen_symmetric_inverse_monoid(2);
  const OrdGroupoid g = groupoid_of(s);
  CHECK(g.size() == s.size());
  CHECK(g.leq == s.leq);
  CHECK(g.inv == s.inv);
  for (Idx a = 0; a < s.size(); ++a) {
    CHECK(g.dom[a] == s.mul(s.inv[a], a));
    CHECK(g.cod[a] == s.mul(a, s.inv[a]));
    CHECK(g.is_identity(a) == s.is_idempotent(a));
  }
}

TEST_CASE("groupoid -> semigroup requires inductivity") {
  // two incomparable identities with no lower bound: *-inductive, not
  // inductive, so only the zero adjunction applies
  std::vector<Idx> dc = {0, 1};
  IdxTable comp(2, 2);
  comp(0, 0) = 0;
  comp(1, 1) = 1;
  BoolMatrix anti(2);
  anti.set(0, 0, true);
  anti.set(1, 1, true);
  const OrdGroupoid g = validate_ordered_groupoid({"e", "f"}, dc, dc, dc, comp, anti);
  CHECK_THROWS_WITH_AS(semigroup_of(g), doctest::Contains("NotInductive"), ValidationError);

  const InvSemigroup s0 = semigroup_of_with_zero(g);
  CHECK(s0.size() == 3);
  CHECK(s0.zero == Idx{0});
  CHECK(s0.elements[0] == "0");
  // 3-element semilattice 0 < e, 0 < f with ef = 0
  CHECK(s0.mul(1, 2) == 0);
  CHECK(s0.mul(2, 1) == 0);
  CHECK(s0.is_idempotent(1));
  CHECK(s0.leq(0, 1));
  CHECK(s0.leq(0, 2));
}

TEST_CASE("ESN round trips are on-the-nose over the corpus") {
  const auto corpus = roundtrip_corpus();
  CHECK(corpus.size() >= 20);
  for (const auto& s : corpus) {
    const EsnWitness w = verify_esn_roundtrip(s);
    CHECK(static_cast<int>(w.forward.size()) == s.size());
    const OrdGroupoid g = groupoid_of(s);
    verify_esn_roundtrip_g(g);
  }
}

TEST_CASE("zero adjunction: nonzero part of S(G)^0 recovers G") {
  // applies to every *-inductive corpus groupoid
  const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
  const InvSemigroup s0 = semigroup_of_with_zero(g);
  REQUIRE(s0.zero == Idx{0});
  for (Idx x = 0; x < g.size(); ++x)
    for (Idx y = 0; y < g.size(); ++y) {
      auto p = pseudoproduct(g, x, y);
      CHECK(s0.mul(x + 1, y + 1) == (p ? *p + 1 : 0));
      CHECK(s0.leq(x + 1, y + 1) == g.leq(x, y));
    }
  CHECK_THROWS_WITH_AS(semigroup_of_with_zero(groupoid_of(s0)), doctest::Contains("\"0\""),
                       ValidationError);
}

TEST_CASE("idempotents, inverses and order survive the round trip verbatim") {
  const auto corpus = roundtrip_corpus();
  for (const auto& s : corpus) {
    const InvSemigroup back = semigroup_of(groupoid_of(s));
    CHECK(back.idempotent == s.idempotent);
    CHECK(back.inv == s.inv);
    CHECK(back.leq == s.leq);
  }
}

TEST_CASE("full product decomposition holds inside recovered semigroups") {
  const OrdGroupoid g = groupoid_of(gen_symmetric_inverse_monoid(2));
  const InvSemigroup s = semigroup_of(g);
  for (Idx x = 0; x < s.size(); ++x)
    for (Idx y = 0; y < s.size(); ++y)
      CHECK(reconstruct_full_product(s, x, y) == s.mul(x, y));
}

TEST_CASE("prehomomorphisms transport to ordered functors and back") {
  const InvSemigroup diamond = gen_diamond_semilattice(2);
  const InvSemigroup chain = gen_chain_semilattice(4);
  const std::vector<Idx> theta = {0, 1, 2, 3};

  const FunctorFlags flags = transport_prehomomorphism(diamond, chain, theta);
  CHECK(flags.ordered);
  CHECK_FALSE(flags.inductive);  // not meet preserving, hence not a homomorphism

  // identity map on I2: homomorphism <-> inductive functor
  const InvSemigroup s = gen_symmetric_inverse_monoid(2);
  std::vector<Idx> id(s.size());
  for (Idx i = 0; i < s.size(); ++i) id[i] = i;
  CHECK(transport_prehomomorphism(s, s, id).inductive);
  CHECK(transport_ordered_functor(groupoid_of(s), groupoid_of(s), id));

  // a non-prehomomorphism is rejected
  Idx swap = undef;
  for (Idx a = 0; a < s.size(); ++a)
    if (!s.is_idempotent(a) && s.inv[a] == a && s.mul(a, a) != a) swap = a;
  const std::vector<Idx> constant(s.size(), swap);
  CHECK_THROWS_WITH_AS(transport_prehomomorphism(s, s, constant),
                       doctest::Contains("NotAPrehomomorphism"), ValidationError);
}

TEST_CASE("transport respects composition of morphisms") {
  const InvSemigroup diamond = gen_diamond_semilattice(2);
  const InvSemigroup chain4 = gen_chain_semilattice(4);
  const InvSemigroup chain2 = gen_chain_semilattice(2);
  const std::vector<Idx> f = {0, 1, 2, 3};
  const std::vector<Idx> g = {0, 0, 1, 1};
  std::vector<Idx> gf(diamond.size());
  for (Idx a = 0; a < diamond.size(); ++a) gf[a] = g[f[a]];

  const OrdGroupoid gd = groupoid_of(diamond);
  const OrdGroupoid g4 = groupoid_of(chain4);
  const OrdGroupoid g2 = groupoid_of(chain2);
  CHECK(classify_functor(gd, g4, f).ordered);
  CHECK(classify_functor(g4, g2, g).ordered);
  CHECK(classify_functor(gd, g2, gf).ordered);
}
