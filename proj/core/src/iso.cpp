#include "esnkit/iso.hpp"

#include <algorithm>
#include <map>

#include "esnkit/error.hpp"

namespace esnkit {

namespace {

// Iterated color refinement over all declared operations and relations,
// run jointly on both structures so equal signatures receive equal color
// ids. Equal colors are a necessary condition for elements to correspond.
std::vector<std::vector<long long>> signatures(const RelStructure& s,
                                               const std::vector<long long>& color) {
  std::vector<std::vector<long long>> sig(s.n);
  for (Idx i = 0; i < s.n; ++i) {
    auto& v = sig[i];
    v.push_back(color[i]);
    for (const auto* f : s.maps) v.push_back(color[(*f)[i]]);
    std::vector<long long> row;
    for (Idx j = 0; j < s.n; ++j) {
      long long entry = 0;
      for (const auto* op : s.ops) {
        entry = entry * 1000003 + (op->defined(i, j) ? color[(*op)(i, j)] + 2 : 1);
        entry = entry * 1000003 + (op->defined(j, i) ? color[(*op)(j, i)] + 2 : 1);
      }
      for (const auto* r : s.rels)
        entry = entry * 4 + ((*r)(i, j) ? 2 : 0) + ((*r)(j, i) ? 1 : 0);
      row.push_back(entry * 1000003 + color[j]);
    }
    std::sort(row.begin(), row.end());
    v.insert(v.end(), row.begin(), row.end());
  }
  return sig;
}

std::pair<std::vector<long long>, std::vector<long long>> refine_jointly(const RelStructure& a,
                                                                         const RelStructure& b) {
  std::vector<long long> ca = a.unary, cb = b.unary;
  ca.resize(a.n, 0);
  cb.resize(b.n, 0);
  for (int round = 0; round < a.n + b.n + 2; ++round) {
    const auto sig_a = signatures(a, ca);
    const auto sig_b = signatures(b, cb);
    // canonical ids: position of the signature in the sorted union
    std::map<std::vector<long long>, long long> canon;
    for (const auto& v : sig_a) canon.emplace(v, 0);
    for (const auto& v : sig_b) canon.emplace(v, 0);
    long long id = 0;
    for (auto& [key, value] : canon) value = id++;
    std::vector<long long> na(a.n), nb(b.n);
    for (Idx i = 0; i < a.n; ++i) na[i] = canon.at(sig_a[i]);
    for (Idx i = 0; i < b.n; ++i) nb[i] = canon.at(sig_b[i]);
    if (na == ca && nb == cb) break;
    ca = std::move(na);
    cb = std::move(nb);
  }
  return {ca, cb};
}

struct Searcher {
  const RelStructure& a;
  const RelStructure& b;
  std::vector<long long> ca, cb;
  std::vector<Idx> map;      // a -> b, undef while unassigned
  std::vector<char> used;    // b side
  long long nodes = 0;
  long long budget;

  bool consistent(Idx i, Idx j) const {
    if (ca[i] != cb[j]) return false;
    for (size_t k = 0; k < a.maps.size(); ++k) {
      const Idx fi = (*a.maps[k])[i];
      const Idx fj = (*b.maps[k])[j];
      if (map[fi] != undef && map[fi] != fj) return false;
    }
    for (size_t k = 0; k < a.rels.size(); ++k)
      for (Idx i2 = 0; i2 < a.n; ++i2) {
        if (map[i2] == undef) continue;
        if ((*a.rels[k])(i, i2) != (*b.rels[k])(j, map[i2])) return false;
        if ((*a.rels[k])(i2, i) != (*b.rels[k])(map[i2], j)) return false;
      }
    for (size_t k = 0; k < a.ops.size(); ++k) {
      const auto& oa = *a.ops[k];
      const auto& ob = *b.ops[k];
      for (Idx i2 = 0; i2 < a.n; ++i2) {
        if (map[i2] == undef) continue;
        if (oa.defined(i, i2) != ob.defined(j, map[i2])) return false;
        if (oa.defined(i2, i) != ob.defined(map[i2], j)) return false;
        if (oa.defined(i, i2)) {
          const Idx p = oa(i, i2);
          if (map[p] != undef && map[p] != ob(j, map[i2])) return false;
        }
        if (oa.defined(i2, i)) {
          const Idx p = oa(i2, i);
          if (map[p] != undef && map[p] != ob(map[i2], j)) return false;
        }
      }
    }
    return true;
  }

  bool assign(Idx next) {
    if (next == a.n) return full_check();
    for (Idx j = 0; j < b.n; ++j) {
      if (used[j]) continue;
      if (++nodes > budget)
        throw ValidationError("IsoSearchBudget", "isomorphism search exceeded its node budget");
      if (!consistent(next, j)) continue;
      map[next] = j;
      used[j] = 1;
      if (assign(next + 1)) return true;
      map[next] = undef;
      used[j] = 0;
    }
    return false;
  }

  bool full_check() const {
    for (size_t k = 0; k < a.maps.size(); ++k)
      for (Idx i = 0; i < a.n; ++i)
        if (map[(*a.maps[k])[i]] != (*b.maps[k])[map[i]]) return false;
    for (size_t k = 0; k < a.ops.size(); ++k)
      for (Idx i = 0; i < a.n; ++i)
        for (Idx i2 = 0; i2 < a.n; ++i2) {
          const auto& oa = *a.ops[k];
          const auto& ob = *b.ops[k];
          if (oa.defined(i, i2) != ob.defined(map[i], map[i2])) return false;
          if (oa.defined(i, i2) && map[oa(i, i2)] != ob(map[i], map[i2])) return false;
        }
    for (size_t k = 0; k < a.rels.size(); ++k)
      for (Idx i = 0; i < a.n; ++i)
        for (Idx i2 = 0; i2 < a.n; ++i2)
          if ((*a.rels[k])(i, i2) != (*b.rels[k])(map[i], map[i2])) return false;
    return true;
  }
};

}  // namespace

std::optional<std::vector<Idx>> find_isomorphism(const RelStructure& a, const RelStructure& b,
                                                 long long budget) {
  if (a.n != b.n || a.ops.size() != b.ops.size() || a.maps.size() != b.maps.size() ||
      a.rels.size() != b.rels.size())
    return std::nullopt;
  auto [ca, cb] = refine_jointly(a, b);
  Searcher s{a, b, std::move(ca), std::move(cb), std::vector<Idx>(a.n, undef),
             std::vector<char>(b.n, 0), 0, budget};
  {
    // color histograms must match
    auto ha = s.ca, hb = s.cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  if (!s.assign(0)) return std::nullopt;
  return s.map;
}

std::optional<std::vector<Idx>> find_isomorphism(const InvSemigroup& a, const InvSemigroup& b,
                                                 long long budget) {
  RelStructure ra, rb;
  ra.n = a.size();
  rb.n = b.size();
  ra.unary.assign(ra.n, 0);
  rb.unary.assign(rb.n, 0);
  ra.ops = {&a.table};
  rb.ops = {&b.table};
  ra.maps = {&a.inv};
  rb.maps = {&b.inv};
  ra.rels = {&a.leq};
  rb.rels = {&b.leq};
  return find_isomorphism(ra, rb, budget);
}

std::optional<std::vector<Idx>> find_isomorphism(const OrdGroupoid& a, const OrdGroupoid& b,
                                                 long long budget) {
  RelStructure ra, rb;
  ra.n = a.size();
  rb.n = b.size();
  ra.unary.assign(ra.n, 0);
  rb.unary.assign(rb.n, 0);
  ra.ops = {&a.comp};
  rb.ops = {&b.comp};
  ra.maps = {&a.dom, &a.cod, &a.inv};
  rb.maps = {&b.dom, &b.cod, &b.inv};
  ra.rels = {&a.leq};
  rb.rels = {&b.leq};
  return find_isomorphism(ra, rb, budget);
}

std::optional<std::vector<Idx>> find_isomorphism(const FinCategory& a, const FinCategory& b,
                                                 long long budget) {
  RelStructure ra, rb;
  ra.n = a.size();
  rb.n = b.size();
  ra.unary.assign(ra.n, 0);
  rb.unary.assign(rb.n, 0);
  ra.ops = {&a.comp};
  rb.ops = {&b.comp};
  ra.maps = {&a.dom, &a.cod};
  rb.maps = {&b.dom, &b.cod};
  return find_isomorphism(ra, rb, budget);
}

}  // namespace esnkit
