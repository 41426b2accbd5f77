#include "esnkit/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "esnkit/error.hpp"

namespace esnkit {

namespace {

void require_cap(long long n, const std::string& family) {
  if (n > generator_cap())
    throw ValidationError("SizeTooLarge", family + " would have " + std::to_string(n) +
                                              " elements (cap " +
                                              std::to_string(generator_cap()) + ")");
}

// A partial injection on {1..n}, stored as image[i] (0-based) or undef.
using PartialInjection = std::vector<Idx>;

PartialInjection compose(const PartialInjection& s, const PartialInjection& t) {
  // (s t)(x) = s(t(x)): apply the right factor first.
  PartialInjection out(t.size(), undef);
  for (size_t x = 0; x < t.size(); ++x)
    if (t[x] != undef && s[t[x]] != undef) out[x] = s[t[x]];
  return out;
}

std::string injection_name(const PartialInjection& f) {
  std::string s = "{";
  bool first = true;
  for (size_t x = 0; x < f.size(); ++x) {
    if (f[x] == undef) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(x + 1) + "->" + std::to_string(f[x] + 1);
  }
  return s + "}";
}

void enumerate_injections(int n, int pos, std::uint32_t domain, PartialInjection& current,
                          std::uint32_t used, std::vector<PartialInjection>& out) {
  if (pos == n) {
    out.push_back(current);
    return;
  }
  if ((domain >> pos & 1u) == 0) {
    enumerate_injections(n, pos + 1, domain, current, used, out);
    return;
  }
  for (Idx img = 0; img < n; ++img) {
    if (used >> img & 1u) continue;
    current[pos] = img;
    enumerate_injections(n, pos + 1, domain, current, used | (1u << img), out);
    current[pos] = undef;
  }
}

}  // namespace

InvSemigroup gen_symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 12) throw ValidationError("SizeTooLarge", "n must be in 1..12");
  long long count = 0;
  {
    // sum over k of C(n,k)^2 k!
    auto binom = [](int a, int b) {
      long long r = 1;
      for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
      return r;
    };
    long long fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fact *= k;
      count += binom(n, k) * binom(n, k) * fact;
    }
  }
  require_cap(count, "symmetric_inverse_monoid(" + std::to_string(n) + ")");

  std::vector<PartialInjection> maps;
  for (std::uint32_t domain = 0; domain < (1u << n); ++domain) {
    PartialInjection current(n, undef);
    enumerate_injections(n, 0, domain, current, 0, maps);
  }
  // deterministic order: by (popcount of domain, domain mask, image tuple);
  // the empty map sorts first and is the zero.
  std::sort(maps.begin(), maps.end(), [n](const PartialInjection& a, const PartialInjection& b) {
    auto key = [n](const PartialInjection& f) {
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i)
        if (f[i] != undef) mask |= 1u << i;
      return std::make_pair(std::popcount(mask), mask);
    };
    if (key(a) != key(b)) return key(a) < key(b);
    return a < b;
  });

  std::map<PartialInjection, Idx> index;
  std::vector<std::string> names;
  for (Idx i = 0; i < static_cast<Idx>(maps.size()); ++i) {
    index[maps[i]] = i;
    names.push_back(injection_name(maps[i]));
  }
  const int m = static_cast<int>(maps.size());
  IdxTable table(m, m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j) table(i, j) = index.at(compose(maps[i], maps[j]));
  return validate_inverse_semigroup(std::move(names), std::move(table), Idx{0});
}

InvSemigroup gen_chain_semilattice(int n) {
  if (n < 1) throw ValidationError("SizeTooLarge", "n must be positive");
  require_cap(n, "chain_semilattice");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  IdxTable table(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) table(i, j) = std::min(i, j);
  return validate_inverse_semigroup(std::move(names), std::move(table));
}

InvSemigroup gen_diamond_semilattice(int k) {
  if (k < 1) throw ValidationError("SizeTooLarge", "k must be positive");
  const int n = k + 2;  // bottom, k middles, top
  require_cap(n, "diamond_semilattice");
  std::vector<std::string> names;
  names.push_back("bot");
  for (int i = 0; i < k; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("top");
  const Idx bot = 0, top = n - 1;
  IdxTable table(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      if (i == j) table(i, j) = i;
      else if (i == top) table(i, j) = j;
      else if (j == top) table(i, j) = i;
      else table(i, j) = bot;
    }
  return validate_inverse_semigroup(std::move(names), std::move(table));
}

InvSemigroup gen_cyclic_group(int n) {
  if (n < 1) throw ValidationError("SizeTooLarge", "n must be positive");
  require_cap(n, "cyclic_group");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  IdxTable table(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) table(i, j) = (i + j) % n;
  return validate_inverse_semigroup(std::move(names), std::move(table));
}

InvSemigroup gen_brandt(int n) {
  if (n < 1) throw ValidationError("SizeTooLarge", "n must be positive");
  const long long m = static_cast<long long>(n) * n + 1;
  require_cap(m, "brandt");
  std::vector<std::string> names;
  names.push_back("0");
  auto pair_index = [n](int i, int j) { return 1 + i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  IdxTable table(static_cast<int>(m), static_cast<int>(m), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) table(pair_index(i, j), pair_index(k, l)) = pair_index(i, l);
  return validate_inverse_semigroup(std::move(names), std::move(table), Idx{0});
}

FinCategory gen_monoid_category(int n) {
  if (n < 1) throw ValidationError("SizeTooLarge", "n must be positive");
  require_cap(n, "monoid_category");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<Idx> dom(n, 0), cod(n, 0);
  IdxTable comp(n, n);
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) comp(i, j) = (i + j) % n;
  return validate_category(std::move(names), std::move(dom), std::move(cod), std::move(comp));
}

namespace {

// Poset-as-category: one arrow e -> f per comparable pair e <= f.
FinCategory poset_category(const std::vector<std::string>& obj, const BoolMatrix& leq) {
  const int m = static_cast<int>(obj.size());
  std::vector<std::string> names;
  std::vector<Idx> dom, cod;
  std::vector<std::pair<Idx, Idx>> pairs;  // (from, to)
  IdxTable idx(m, m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b)
      if (leq(a, b)) {
        idx(a, b) = static_cast<Idx>(pairs.size());
        pairs.emplace_back(a, b);
        names.push_back(a == b ? "id_" + obj[a] : obj[a] + "<=" + obj[b]);
      }
  const int n = static_cast<int>(pairs.size());
  for (auto [a, b] : pairs) {
    dom.push_back(idx(a, a));
    cod.push_back(idx(b, b));
  }
  IdxTable comp(n, n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (dom[x] == cod[y]) comp(x, y) = idx(pairs[y].first, pairs[x].second);
  return validate_category(std::move(names), std::move(dom), std::move(cod), std::move(comp));
}

}  // namespace

FinCategory gen_chain_poset_category(int n) {
  if (n < 1) throw ValidationError("SizeTooLarge", "n must be positive");
  require_cap(static_cast<long long>(n) * (n + 1) / 2, "chain_poset_category");
  std::vector<std::string> obj;
  for (int i = 0; i < n; ++i) obj.push_back(std::to_string(i));
  BoolMatrix leq(n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = a; b < n; ++b) leq.set(a, b, true);
  return poset_category(obj, leq);
}

FinCategory gen_diamond_poset_category(int k) {
  if (k < 1) throw ValidationError("SizeTooLarge", "k must be positive");
  const int m = k + 2;
  std::vector<std::string> obj;
  obj.push_back("bot");
  for (int i = 0; i < k; ++i) obj.push_back("m" + std::to_string(i));
  obj.push_back("top");
  BoolMatrix leq(m);
  for (Idx a = 0; a < m; ++a) {
    leq.set(a, a, true);
    leq.set(0, a, true);
    leq.set(a, m - 1, true);
  }
  return poset_category(obj, leq);
}

FinCategory gen_free_category(int n) {
  // Paths in the doubled-chain quiver: vertices 0..n, edges a_i, b_i from
  // vertex i to i+1. Acyclic, so the path category is finite.
  if (n < 1 || n > 14) throw ValidationError("SizeTooLarge", "n must be in 1..14");
  struct Path {
    int from;
    std::string word;  // edge letters, applied left to right along the chain
  };
  std::vector<Path> paths;
  std::map<std::pair<int, std::string>, Idx> index;
  for (int v = 0; v <= n; ++v) {
    paths.push_back({v, ""});
  }
  // breadth-first by length
  for (size_t head = 0; head < paths.size(); ++head) {
    Path p = paths[head];
    const int end = p.from + static_cast<int>(p.word.size());
    if (end == n) continue;
    for (char c : {'a', 'b'}) {
      paths.push_back({p.from, p.word + c});
      require_cap(static_cast<long long>(paths.size()), "free_category");
    }
  }
  std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) {
    return std::tie(x.from, x.word) < std::tie(y.from, y.word);
  });
  for (Idx i = 0; i < static_cast<Idx>(paths.size()); ++i)
    index[{paths[i].from, paths[i].word}] = i;

  const int m = static_cast<int>(paths.size());
  std::vector<std::string> names;
  std::vector<Idx> dom(m), cod(m);
  for (Idx i = 0; i < m; ++i) {
    const auto& p = paths[i];
    const int end = p.from + static_cast<int>(p.word.size());
    names.push_back(std::to_string(p.from) + ":" + (p.word.empty() ? "id" : p.word));
    dom[i] = index.at({p.from, ""});
    cod[i] = index.at({end, ""});
  }
  IdxTable comp(m, m);
  for (Idx x = 0; x < m; ++x)
    for (Idx y = 0; y < m; ++y)
      if (dom[x] == cod[y]) {
        // x after y: y's word runs first along the chain
        comp(x, y) = index.at({paths[y].from, paths[y].word + paths[x].word});
      }
  return validate_category(std::move(names), std::move(dom), std::move(cod), std::move(comp));
}

bool is_semigroup_family(const std::string& family) {
  return family == "symmetric_inverse_monoid" || family == "chain_semilattice" ||
         family == "diamond_semilattice" || family == "cyclic_group" || family == "brandt";
}

bool is_category_family(const std::string& family) {
  return family == "monoid_category" || family == "chain_poset_category" ||
         family == "diamond_poset_category" || family == "free_category";
}

InvSemigroup generate_standard(const std::string& family, int n) {
  if (family == "symmetric_inverse_monoid") return gen_symmetric_inverse_monoid(n);
  if (family == "chain_semilattice") return gen_chain_semilattice(n);
  if (family == "diamond_semilattice") return gen_diamond_semilattice(n);
  if (family == "cyclic_group") return gen_cyclic_group(n);
  if (family == "brandt") return gen_brandt(n);
  throw ValidationError("UnknownFamily", family);
}

FinCategory generate_category(const std::string& family, int n) {
  if (family == "monoid_category") return gen_monoid_category(n);
  if (family == "chain_poset_category") return gen_chain_poset_category(n);
  if (family == "diamond_poset_category") return gen_diamond_poset_category(n);
  if (family == "free_category") return gen_free_category(n);
  throw ValidationError("UnknownFamily", family);
}

}  // namespace esnkit
