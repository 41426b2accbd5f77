#include "esnkit/inverse_semigroup.hpp"

#include <string>

#include "esnkit/error.hpp"

namespace esnkit {

std::vector<Idx> InvSemigroup::idempotent_list() const {
  std::vector<Idx> out;
  for (Idx e = 0; e < size(); ++e)
    if (idempotent[e]) out.push_back(e);
  return out;
}

std::optional<Idx> InvSemigroup::identity_element() const {
  for (Idx e = 0; e < size(); ++e) {
    bool id = true;
    for (Idx s = 0; s < size() && id; ++s)
      id = mul(e, s) == s && mul(s, e) == s;
    if (id) return e;
  }
  return std::nullopt;
}

bool InvSemigroup::is_group() const {
  int count = 0;
  for (Idx e = 0; e < size(); ++e)
    if (idempotent[e]) ++count;
  return count == 1;
}

static BoolMatrix compute_natural_order(const IdxTable& table, const std::vector<char>& idem) {
  const int n = table.rows();
  BoolMatrix m(n);
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t)
      for (Idx e = 0; e < n; ++e)
        if (idem[e] && table(t, e) == s) {
          m.set(s, t, true);
          break;
        }
  return m;
}

InvSemigroup validate_inverse_semigroup(std::vector<std::string> elements, IdxTable table,
                                        std::optional<Idx> zero) {
  const int n = table.rows();
  if (n == 0 || table.cols() != n || static_cast<int>(elements.size()) != n)
    throw ValidationError("SchemaError", "multiplication table must be square and nonempty");
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      if (table(i, j) < 0 || table(i, j) >= n)
        throw ValidationError("SchemaError", "table entry out of range", {i, j});
  if (zero && (*zero < 0 || *zero >= n))
    throw ValidationError("SchemaError", "zero index out of range", {*zero});

  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j)
      for (Idx k = 0; k < n; ++k)
        if (table(table(i, j), k) != table(i, table(j, k)))
          throw ValidationError("NotAssociative",
                                "(" + elements[i] + " " + elements[j] + ") " + elements[k] +
                                    " != " + elements[i] + " (" + elements[j] + " " + elements[k] + ")",
                                {i, j, k});

  InvSemigroup s;
  s.elements = std::move(elements);
  s.table = std::move(table);
  s.zero = zero;
  s.inv.assign(n, undef);
  for (Idx a = 0; a < n; ++a) {
    int found = 0;
    for (Idx b = 0; b < n; ++b) {
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
        ++found;
        s.inv[a] = b;
      }
    }
    if (found != 1)
      throw ValidationError("NoUniqueInverse",
                            s.elements[a] + " has " + std::to_string(found) + " inverses", {a});
  }

  s.idempotent.assign(n, 0);
  for (Idx e = 0; e < n; ++e) s.idempotent[e] = (s.mul(e, e) == e) ? 1 : 0;
  for (Idx e = 0; e < n; ++e)
    for (Idx f = 0; f < n; ++f)
      if (s.idempotent[e] && s.idempotent[f] && s.mul(e, f) != s.mul(f, e))
        throw ValidationError("IdempotentsDontCommute", s.elements[e] + ", " + s.elements[f],
                              {e, f});

  if (s.zero) {
    const Idx z = *s.zero;
    for (Idx a = 0; a < n; ++a)
      if (s.mul(z, a) != z || s.mul(a, z) != z)
        throw ValidationError("ZeroNotAbsorbing", s.elements[z] + " vs " + s.elements[a], {z, a});
  }

  s.leq = compute_natural_order(s.table, s.idempotent);

  // The natural order of a valid inverse semigroup is a partial order; a
  // failure here is a bug in the checks above, not in the input.
  for (Idx a = 0; a < n; ++a)
    if (!s.leq(a, a)) throw ValidationError("InternalInconsistency", "order not reflexive", {a});
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (a != b && s.leq(a, b) && s.leq(b, a))
        throw ValidationError("InternalInconsistency", "order not antisymmetric", {a, b});
      if (s.leq(a, b))
        for (Idx c = 0; c < n; ++c)
          if (s.leq(b, c) && !s.leq(a, c))
            throw ValidationError("InternalInconsistency", "order not transitive", {a, b, c});
    }
  return s;
}

BoolMatrix natural_partial_order(const InvSemigroup& s) {
  return compute_natural_order(s.table, s.idempotent);
}

std::optional<Idx> restricted_product(const InvSemigroup& s, Idx a, Idx b) {
  if (s.mul(s.inv[a], a) != s.mul(b, s.inv[b])) return std::nullopt;
  return s.mul(a, b);
}

Idx reconstruct_full_product(const InvSemigroup& s, Idx a, Idx b) {
  const Idx e = s.mul(s.mul(s.inv[a], a), s.mul(b, s.inv[b]));
  const Idx a1 = s.mul(a, e);
  const Idx b1 = s.mul(e, b);
  auto r = restricted_product(s, a1, b1);
  if (!r)
    throw ValidationError("InternalInconsistency", "restricted product of restrictions undefined",
                          {a, b});
  if (*r != s.mul(a, b))
    throw ValidationError("InternalInconsistency", "reconstruction disagrees with the table",
                          {a, b, *r});
  return *r;
}

namespace {

bool prehom_direct(const InvSemigroup& s, const InvSemigroup& t, std::span<const Idx> map) {
  for (Idx a = 0; a < s.size(); ++a)
    for (Idx b = 0; b < s.size(); ++b)
      if (!t.leq(map[s.mul(a, b)], t.mul(map[a], map[b]))) return false;
  return true;
}

// characterization: preserves the restricted product and the natural order
bool prehom_characterization(const InvSemigroup& s, const InvSemigroup& t,
                             std::span<const Idx> map) {
  for (Idx a = 0; a < s.size(); ++a)
    for (Idx b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) && !t.leq(map[a], map[b])) return false;
      auto r = restricted_product(s, a, b);
      if (r) {
        auto rt = restricted_product(t, map[a], map[b]);
        if (!rt || *rt != map[*r]) return false;
      }
    }
  return true;
}

}  // namespace

bool is_prehomomorphism(const InvSemigroup& src, const InvSemigroup& dst,
                        std::span<const Idx> map) {
  const bool direct = prehom_direct(src, dst, map);
  const bool characterized = prehom_characterization(src, dst, map);
  if (direct != characterized)
    throw ValidationError("CharacterizationMismatch",
                          "prehomomorphism tests disagree: direct=" + std::to_string(direct));
  return direct;
}

bool is_homomorphism(const InvSemigroup& src, const InvSemigroup& dst, std::span<const Idx> map) {
  bool direct = true;
  for (Idx a = 0; a < src.size() && direct; ++a)
    for (Idx b = 0; b < src.size() && direct; ++b)
      direct = map[src.mul(a, b)] == dst.mul(map[a], map[b]);

  // characterization: a prehomomorphism that is multiplicative on idempotents
  bool characterized = is_prehomomorphism(src, dst, map);
  for (Idx e = 0; e < src.size() && characterized; ++e)
    for (Idx f = 0; f < src.size() && characterized; ++f)
      if (src.is_idempotent(e) && src.is_idempotent(f))
        characterized = map[src.mul(e, f)] == dst.mul(map[e], map[f]);

  if (direct != characterized)
    throw ValidationError("CharacterizationMismatch",
                          "homomorphism tests disagree: direct=" + std::to_string(direct));
  return direct;
}

bool is_e_unitary(const InvSemigroup& s) {
  for (Idx e = 0; e < s.size(); ++e)
    if (s.is_idempotent(e))
      for (Idx a = 0; a < s.size(); ++a)
        if (s.leq(e, a) && !s.is_idempotent(a)) return false;
  return true;
}

Report lemma_report_semigroup(const InvSemigroup& s) {
  Report rep;
  const int n = s.size();

  {
    bool ok = true;
    std::string witness;
    for (Idx a = 0; a < n && ok; ++a)
      for (Idx b = 0; b < n && ok; ++b) {
        try {
          reconstruct_full_product(s, a, b);
        } catch (const ValidationError&) {
          ok = false;
          witness = s.elements[a] + " * " + s.elements[b];
        }
      }
    rep.add("full product reconstruction (all pairs)", ok, witness);
  }

  {
    // se is the unique a <= s with a^-1 a = e, for each idempotent e <= s^-1 s.
    bool ok = true;
    std::string witness;
    for (Idx a = 0; a < n && ok; ++a)
      for (Idx e = 0; e < n && ok; ++e) {
        if (!s.is_idempotent(e) || !s.leq(e, s.mul(s.inv[a], a))) continue;
        const Idx expect = s.mul(a, e);
        int hits = 0;
        for (Idx b = 0; b < n; ++b)
          if (s.leq(b, a) && s.mul(s.inv[b], b) == e) ++hits;
        if (hits != 1 || !s.leq(expect, a) || s.mul(s.inv[expect], expect) != e) {
          ok = false;
          witness = s.elements[a] + ", e=" + s.elements[e];
        }
      }
    rep.add("unique restriction below each element (all eligible pairs)", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (Idx a = 0; a < n && ok; ++a) {
      // the dual: es is the unique b <= s with b b^-1 = e
      for (Idx e = 0; e < n && ok; ++e) {
        if (!s.is_idempotent(e) || !s.leq(e, s.mul(a, s.inv[a]))) continue;
        const Idx expect = s.mul(e, a);
        int hits = 0;
        for (Idx b = 0; b < n; ++b)
          if (s.leq(b, a) && s.mul(b, s.inv[b]) == e) ++hits;
        if (hits != 1 || !s.leq(expect, a) || s.mul(expect, s.inv[expect]) != e) {
          ok = false;
          witness = s.elements[a] + ", e=" + s.elements[e];
        }
      }
    }
    rep.add("unique corestriction below each element (all eligible pairs)", ok, witness);
  }

  {
    // On a group the natural order degenerates to equality.
    bool relevant = s.is_group();
    bool ok = true;
    if (relevant) {
      for (Idx a = 0; a < n && ok; ++a)
        for (Idx b = 0; b < n && ok; ++b)
          if (s.leq(a, b) != (a == b)) ok = false;
    }
    rep.add("group order is equality", ok, relevant ? "" : "not a group, vacuous");
  }

  return rep;
}

}  // namespace esnkit
