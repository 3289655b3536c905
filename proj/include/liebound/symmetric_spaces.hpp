// Inner symmetric pairs (G, K) of maximal rank, obtained by deleting one
// node of the extended Dynkin diagram, and the spanning number ell of G/K.

#pragma once

#include <functional>
#include <optional>

#include "root_datum.hpp"

namespace liebound {

// ---------------------------------------------------------------------------
// Diagram utilities

/// Extended Cartan matrix, node 0 = -theta, nodes 1..n Bourbaki.
inline IntMatrix extended_cartan(const RootDatum& rd) {
  const int n = rd.rank();
  IntMatrix a(n + 1, IntVec(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i + 1][j + 1] = rd.cartan[i][j];
  const IntVec theta_labels = rd.root_to_labels(rd.highest_root_marks);
  const IntVec theta_co = rd.coroot(rd.highest_root_index());
  a[0][0] = 2;
  for (int i = 0; i < n; ++i) a[i + 1][0] = -theta_labels[i];
  for (int j = 0; j < n; ++j) {
    long s = 0;
    for (int k = 0; k < n; ++k) s += theta_co[k] * rd.cartan[k][j];
    a[0][j + 1] = -s;
  }
  return a;
}

/// Node permutations preserving a generalized Cartan matrix (backtracking).
inline std::vector<std::vector<int>> matrix_automorphisms(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a[i][j] == a[c][perm[j]] && a[j][i] == a[perm[j]][c];
      if (!ok) continue;
      perm[i] = c;
      used[c] = true;
      extend(i + 1);
      used[c] = false;
    }
    perm[i] = -1;
  };
  extend(0);
  return out;
}

/// Identifies a connected finite-type Cartan matrix.  B2 and C2 both come
/// back as B2; a three-node chain is A3 (never D3).
inline SimpleType classify_connected(const IntMatrix& m) {
  const int k = static_cast<int>(m.size());
  if (k == 1) return {Family::A, 1};
  std::vector<int> degree(k, 0);
  int multi_a = -1, multi_b = -1, bond = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const long p = m[i][j] * m[j][i];
      if (p == 0) continue;
      ++degree[i];
      ++degree[j];
      if (p > 1) {
        multi_a = i;
        multi_b = j;
        bond = static_cast<int>(p);
      }
    }
  if (bond == 3) return {Family::G, 2};
  if (bond == 2) {
    if (k == 2) return {Family::B, 2};
    if (degree[multi_a] == 2 && degree[multi_b] == 2) return {Family::F, 4};
    const int end = degree[multi_a] == 1 ? multi_a : multi_b;
    const int other = end == multi_a ? multi_b : multi_a;
    // |<end^vee, other>| = 2 means end is the short root
    const bool end_short = m[end][other] == -2;
    return {end_short ? Family::B : Family::C, k};
  }
  if (bond != 1) fail("not a finite-type Cartan matrix");
  const auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return {Family::A, k};
  const int b = static_cast<int>(branch - degree.begin());
  std::vector<int> arms;
  for (int j = 0; j < k; ++j) {
    if (j == b || m[b][j] == 0) continue;
    int len = 1, prev = b, cur = j;
    while (true) {
      int nxt = -1;
      for (int x = 0; x < k; ++x)
        if (x != prev && x != cur && m[cur][x] != 0) nxt = x;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k};
  fail("not a finite-type Dynkin diagram");
}

/// Simple components of the subdiagram on the given nodes, sorted.
inline std::vector<SimpleType> subdiagram_components(const IntMatrix& a, const std::vector<int>& nodes) {
  std::vector<SimpleType> out;
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < nodes.size(); ++v)
        if (!seen[v] && a[nodes[u]][nodes[v]] != 0) {
          seen[v] = true;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    IntMatrix sub(comp.size(), IntVec(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = a[nodes[comp[i]]][nodes[comp[j]]];
    out.push_back(classify_connected(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Space tags

struct SpaceTag {
  enum class Kind {
    RealGrassmannian,     // SO(n)/SO(p)xSO(n-p)
    ComplexGrassmannian,  // SU(n)/S(U(p)xU(n-p))
    QuatGrassmannian,     // Sp(n)/Sp(p)xSp(n-p)
    HermitianC,           // Sp(n)/U(n)
    HermitianD,           // SO(2n)/U(n)
    Sphere,               // S^n
    Exceptional,          // named
    Product,
  };
  Kind kind = Kind::Sphere;
  long n = 0;
  long p = 0;
  std::string name;  // exceptional spaces, e.g. "E8/SO16"
  std::vector<SpaceTag> factors;

  bool operator==(const SpaceTag&) const = default;

  static SpaceTag grassmannian(Kind k, long n, long p) { return {k, n, p, {}, {}}; }
  static SpaceTag hermitian(Kind k, long n) { return {k, n, 0, {}, {}}; }
  static SpaceTag sphere(long dim) { return {Kind::Sphere, dim, 0, {}, {}}; }
  static SpaceTag exceptional(std::string nm) { return {Kind::Exceptional, 0, 0, std::move(nm), {}}; }
};

inline std::string to_string(const SpaceTag& t) {
  using K = SpaceTag::Kind;
  auto np = [&](const char* s) { return std::string(s) + "(" + std::to_string(t.n) + "," + std::to_string(t.p) + ")"; };
  switch (t.kind) {
    case K::RealGrassmannian: return np("RealGrassmannian");
    case K::ComplexGrassmannian: return np("ComplexGrassmannian");
    case K::QuatGrassmannian: return np("QuatGrassmannian");
    case K::HermitianC: return "HermitianCtype(" + std::to_string(t.n) + ")";
    case K::HermitianD: return "HermitianDtype(" + std::to_string(t.n) + ")";
    case K::Sphere: return "Sphere(" + std::to_string(t.n) + ")";
    case K::Exceptional: return t.name;
    case K::Product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < t.factors.size(); ++i) s += (i ? "," : "") + to_string(t.factors[i]);
      return s + ")";
    }
  }
  return "?";
}

/// Resolves low-rank coincidences so that isometric spaces (up to covering)
/// receive one tag: HGr(2,1)=S^4, CGr(2,1)=S^2, Sp(1)/U(1)=S^2, RGr(n,1)=S^(n-1),
/// SO(6)/U(3)=CP^3, SO(8)/U(4)=RGr(8,2), RGr(4,2)=S^2xS^2.
inline SpaceTag canonicalize(SpaceTag t) {
  using K = SpaceTag::Kind;
  switch (t.kind) {
    case K::RealGrassmannian:
    case K::ComplexGrassmannian:
    case K::QuatGrassmannian:
      if (t.n < 2 || t.p < 1 || t.p >= t.n)
        fail("degenerate Grassmannian " + to_string(t));
      t.p = std::min(t.p, t.n - t.p);
      if (t.kind == K::RealGrassmannian && t.p == 1) return SpaceTag::sphere(t.n - 1);
      if (t.kind == K::ComplexGrassmannian && t.n == 2) return SpaceTag::sphere(2);
      if (t.kind == K::QuatGrassmannian && t.n == 2) return SpaceTag::sphere(4);
      if (t.kind == K::RealGrassmannian && t.n == 4) {
        SpaceTag prod;
        prod.kind = K::Product;
        prod.factors = {SpaceTag::sphere(2), SpaceTag::sphere(2)};
        return prod;
      }
      return t;
    case K::HermitianC:
      if (t.n < 1) fail("degenerate space " + to_string(t));
      if (t.n == 1) return SpaceTag::sphere(2);
      return t;
    case K::HermitianD:
      if (t.n < 3) fail("space " + to_string(t) + " is not irreducible");
      if (t.n == 3) return SpaceTag::grassmannian(K::ComplexGrassmannian, 4, 1);
      if (t.n == 4) return SpaceTag::grassmannian(K::RealGrassmannian, 8, 2);
      return t;
    case K::Product:
      for (auto& f : t.factors) f = canonicalize(f);
      return t;
    default:
      return t;
  }
}

/// Spanning number ell of the symmetric space.
inline int ell_symmetric_space(const SpaceTag& raw) {
  using K = SpaceTag::Kind;
  const SpaceTag t = canonicalize(raw);
  switch (t.kind) {
    case K::Sphere:
      if (t.n < 1) fail("degenerate sphere");
      return static_cast<int>(t.n + 1);
    case K::RealGrassmannian:
    case K::ComplexGrassmannian:
    case K::QuatGrassmannian: {
      if (t.kind == K::QuatGrassmannian && t.n == 3 && t.p == 1) return 4;
      const long ceil_ratio = (t.n + t.p - 1) / t.p;
      return static_cast<int>(std::max(3L, ceil_ratio));
    }
    case K::HermitianC:
    case K::HermitianD:
      return 3;
    case K::Exceptional: {
      static const std::map<std::string, int> known = {
          {"G2/SO4", 3},      {"F4/Sp3Sp1", 3},   {"F4/Spin9", 4},  {"E6/Spin10U1", 3},
          {"E6/SU6SU2", 3},   {"E7/E6U1", 3},     {"E7/SU8", 3},    {"E7/Spin12SU2", 3},
          {"E8/SO16", 3},     {"E8/E7SU2", 3},
      };
      auto it = known.find(t.name);
      if (it == known.end()) fail("unrecognized symmetric space tag '" + t.name + "'");
      return it->second;
    }
    case K::Product: {
      if (t.factors.empty()) fail("empty product space");
      int best = 0;
      for (const auto& f : t.factors) best = std::max(best, ell_symmetric_space(f));
      return best;
    }
  }
  fail("unrecognized symmetric space tag");
}

// ---------------------------------------------------------------------------
// Pairs

struct SymmetricPair {
  SimpleType ambient;
  int node = 0;  // Bourbaki index of the removed node
  int mark = 0;
  std::vector<SimpleType> k_semisimple;
  int k_torus_dim = 0;
  long dim_k = 0;
  long dim_gk = 0;
  SpaceTag space_tag;
  int ell = 0;
};

namespace detail {

inline std::string components_key(const std::vector<SimpleType>& comps, int torus) {
  std::string s;
  for (const auto& c : comps) s += c.name() + ",";
  if (torus) s += "T";
  return s;
}

inline SpaceTag grassmannian_tag(SpaceTag::Kind k, long n, long p) {
  return SpaceTag::grassmannian(k, n, std::min(p, n - p));
}

inline SpaceTag tag_for(SimpleType g, int node, const std::vector<SimpleType>& comps, int torus) {
  using K = SpaceTag::Kind;
  const long r = g.rank;
  switch (g.family) {
    case Family::A:
      return grassmannian_tag(K::ComplexGrassmannian, r + 1, node);
    case Family::B:
      return grassmannian_tag(K::RealGrassmannian, 2 * r + 1, node == 1 ? 2 : 2 * node);
    case Family::C:
      if (node == r) return SpaceTag::hermitian(K::HermitianC, r);
      return grassmannian_tag(K::QuatGrassmannian, r, node);
    case Family::D:
      if (node >= r - 1) return SpaceTag::hermitian(K::HermitianD, r);
      return grassmannian_tag(K::RealGrassmannian, 2 * r, node == 1 ? 2 : 2 * node);
    default: break;
  }
  static const std::map<std::string, std::string> exceptional = {
      {"A1,A1,", "G2/SO4"},      {"A1,C3,", "F4/Sp3Sp1"}, {"B4,", "F4/Spin9"},
      {"D5,T", "E6/Spin10U1"},   {"A1,A5,", "E6/SU6SU2"}, {"E6,T", "E7/E6U1"},
      {"A7,", "E7/SU8"},         {"A1,D6,", "E7/Spin12SU2"}, {"D8,", "E8/SO16"},
      {"A1,E7,", "E8/E7SU2"},
  };
  auto it = exceptional.find(components_key(comps, torus));
  if (it == exceptional.end())
    fail("no symmetric space tag for " + g.name() + " node " + std::to_string(node));
  return SpaceTag::exceptional(it->second);
}

}  // namespace detail

/// One pair per extended-diagram node with mark 1 or 2, up to diagram
/// automorphisms of the extended diagram.
inline std::vector<SymmetricPair> enumerate_inner_symmetric_pairs(const RootDatum& rd) {
  const int n = rd.rank();
  const IntMatrix ext = extended_cartan(rd);
  const auto autos = matrix_automorphisms(ext);
  const long dim_g = group_dimension(rd);

  std::set<std::vector<int>> seen;
  std::vector<SymmetricPair> out;
  for (int node = 1; node <= n; ++node) {
    const int mark = static_cast<int>(rd.highest_root_marks[node - 1]);
    if (mark != 1 && mark != 2) continue;
    std::vector<int> removed = mark == 1 ? std::vector<int>{0, node} : std::vector<int>{node};
    std::vector<int> key;
    for (const auto& g : autos) {
      std::vector<int> img;
      for (int x : removed) img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      if (key.empty() || img < key) key = img;
    }
    if (!seen.insert(key).second) continue;

    SymmetricPair p;
    p.ambient = rd.type;
    p.node = node;
    p.mark = mark;
    p.k_torus_dim = mark == 1 ? 1 : 0;
    std::vector<int> keep;
    for (int x = 0; x <= n; ++x)
      if (std::find(removed.begin(), removed.end(), x) == removed.end()) keep.push_back(x);
    p.k_semisimple = keep.empty() ? std::vector<SimpleType>{} : subdiagram_components(ext, keep);
    long odd = 0;
    for (const IntVec& root : rd.positive_roots)
      if (root[node - 1] % 2 != 0) ++odd;
    p.dim_gk = 2 * odd;
    p.dim_k = dim_g - p.dim_gk;
    p.space_tag = detail::tag_for(rd.type, node, p.k_semisimple, p.k_torus_dim);
    p.ell = ell_symmetric_space(p.space_tag);
    out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<SymmetricPair> enumerate_inner_symmetric_pairs(SimpleType t) {
  return enumerate_inner_symmetric_pairs(build_root_datum(t));
}

struct EllGroupReport {
  SimpleType ambient;
  long computed = 0;
  SymmetricPair argmax_pair;
  std::optional<long> table4;
  bool agrees = false;
};

/// max over inner pairs of ell * (4 + dim G/K); ties keep the first pair.
inline EllGroupReport ell_group(SimpleType t, std::optional<long> table4 = std::nullopt) {
  EllGroupReport rep;
  rep.ambient = t;
  for (const auto& p : enumerate_inner_symmetric_pairs(t)) {
    const long v = p.ell * (4 + p.dim_gk);
    if (v > rep.computed) {
      rep.computed = v;
      rep.argmax_pair = p;
    }
  }
  rep.table4 = table4;
  rep.agrees = table4 && *table4 == rep.computed;
  return rep;
}

}  // namespace liebound
