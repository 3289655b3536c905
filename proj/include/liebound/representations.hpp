// Irreducible modules: Weyl dimension, Freudenthal weight systems,
// Frobenius-Schur type, central kernels, bounded enumeration.

#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "root_datum.hpp"

namespace liebound {

/// Dynkin labels in Bourbaki order.
using Weight = IntVec;

struct WeightHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

inline void require_weight(const RootDatum& rd, const Weight& w, bool dominant = true) {
  if (static_cast<int>(w.size()) != rd.rank())
    fail("weight has " + std::to_string(w.size()) + " labels, " + rd.type.name() + " needs " +
         std::to_string(rd.rank()));
  if (dominant && !is_dominant(w))
    fail("highest weight must be dominant");
}

inline BigInt weyl_dimension(const RootDatum& rd, const Weight& hw) {
  require_weight(rd, hw);
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k) {
    const IntVec cv = rd.coroot(k);
    long a = 0, b = 0;
    for (int j = 0; j < rd.rank(); ++j) {
      a += (hw[j] + 1) * cv[j];
      b += cv[j];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

struct WeightSystem {
  Weight highest;
  /// Weight -> multiplicity, ordered lexicographically by labels.
  std::map<Weight, long> entries;

  long total() const {
    long s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
  }
  long multiplicity(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
};

/// Freudenthal recursion, level by level below the highest weight.
inline WeightSystem weight_system(const RootDatum& rd, const Weight& hw) {
  require_weight(rd, hw);
  const int n = rd.rank();
  std::vector<IntVec> root_labels;
  for (const IntVec& r : rd.positive_roots) root_labels.push_back(rd.root_to_labels(r));

  // depth beta (simple-root coordinates) with mu = hw - beta
  std::unordered_map<Weight, std::pair<long, IntVec>, WeightHash> known;
  known.emplace(hw, std::make_pair(1L, IntVec(n, 0)));
  std::vector<Weight> layer{hw};

  auto inner_with_root = [&](const Weight& nu, std::size_t k) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += nu[j] * rd.positive_roots[k][j] * rd.symmetrizers[j];
    return s;
  };

  while (!layer.empty()) {
    std::map<Weight, IntVec> candidates;
    for (const Weight& nu : layer) {
      const IntVec& beta = known.at(nu).second;
      for (int i = 0; i < n; ++i) {
        Weight mu = nu;
        for (int j = 0; j < n; ++j) mu[j] -= rd.cartan[j][i];
        if (candidates.count(mu)) continue;
        IntVec b = beta;
        b[i] += 1;
        candidates.emplace(std::move(mu), std::move(b));
      }
    }
    std::vector<Weight> next;
    for (auto& [mu, beta] : candidates) {
      long denom = -rd.inner_roots(beta, beta);
      for (int i = 0; i < n; ++i) denom += 2 * beta[i] * (hw[i] + 1) * rd.symmetrizers[i];
      long numer = 0;
      for (std::size_t k = 0; k < root_labels.size(); ++k) {
        Weight nu = mu;
        while (true) {
          for (int j = 0; j < n; ++j) nu[j] += root_labels[k][j];
          auto it = known.find(nu);
          if (it == known.end()) break;
          numer += 2 * it->second.first * inner_with_root(nu, k);
        }
      }
      if (numer == 0) continue;
      if (denom <= 0 || numer % denom != 0)
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      known.emplace(mu, std::make_pair(numer / denom, beta));
      next.push_back(mu);
    }
    layer = std::move(next);
  }

  WeightSystem ws;
  ws.highest = hw;
  for (auto& [w, v] : known) ws.entries.emplace(w, v.first);
  return ws;
}

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i on labels.
inline Weight simple_reflection(const RootDatum& rd, const Weight& mu, int i) {
  Weight out = mu;
  for (int j = 0; j < rd.rank(); ++j) out[j] -= mu[i] * rd.cartan[j][i];
  return out;
}

enum class FsType { real, complex, quaternionic };

inline std::string to_string(FsType f) {
  switch (f) {
    case FsType::real: return "real";
    case FsType::complex: return "complex";
    case FsType::quaternionic: return "quaternionic";
  }
  return "?";
}

/// 2 rho^vee in simple-coroot coordinates.
inline IntVec two_rho_coroot(const RootDatum& rd) {
  IntVec s(rd.rank(), 0);
  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k) {
    const IntVec cv = rd.coroot(k);
    for (int j = 0; j < rd.rank(); ++j) s[j] += cv[j];
  }
  return s;
}

inline FsType fs_indicator(const RootDatum& rd, const Weight& hw) {
  require_weight(rd, hw);
  if (dual_involution(rd.type, hw) != hw) return FsType::complex;
  const IntVec t = two_rho_coroot(rd);
  long s = 0;
  for (int j = 0; j < rd.rank(); ++j) s += hw[j] * t[j];
  return s % 2 == 0 ? FsType::real : FsType::quaternionic;
}

struct IrrepInfo {
  Weight highest;
  BigInt dim_c;
  FsType fs_type = FsType::real;
  BigInt dim_r;
};

inline BigInt real_dimension(const IrrepInfo& info) {
  return info.fs_type == FsType::real ? info.dim_c : BigInt(2 * info.dim_c);
}

inline IrrepInfo irrep_info(const RootDatum& rd, const Weight& hw) {
  IrrepInfo info;
  info.highest = hw;
  info.dim_c = weyl_dimension(rd, hw);
  info.fs_type = fs_indicator(rd, hw);
  info.dim_r = real_dimension(info);
  return info;
}

/// Nonzero dominant weights with real dimension <= bound, sorted by (dim_r, labels).
/// Every factor of the Weyl product is nondecreasing in each label, so the
/// walk stops along an axis as soon as the complex dimension passes the bound.
inline std::vector<IrrepInfo> enumerate_irreps_below(const RootDatum& rd, long bound) {
  std::vector<IrrepInfo> out;
  if (bound <= 0) return out;
  const int n = rd.rank();
  Weight w(n, 0);
  std::function<void(int)> walk = [&](int axis) {
    if (axis == n) {
      if (std::any_of(w.begin(), w.end(), [](long x) { return x != 0; })) {
        IrrepInfo info = irrep_info(rd, w);
        if (info.dim_r <= bound) out.push_back(std::move(info));
      }
      return;
    }
    for (w[axis] = 0;; ++w[axis]) {
      if (weyl_dimension(rd, w) > bound) break;
      walk(axis + 1);
    }
    w[axis] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const IrrepInfo& a, const IrrepInfo& b) {
    return a.dim_r != b.dim_r ? a.dim_r < b.dim_r : a.highest < b.highest;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Center of the simply connected group.

namespace detail {

/// Exact inverse of an integer matrix scaled by its determinant:
/// returns (adj, det) with inverse = adj / det.
inline std::pair<IntMatrix, long> scaled_inverse(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  // fraction-free Gauss-Jordan on rationals represented as BigInt pairs
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  Q det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) fail("singular Cartan matrix");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Q p = a[c][c];
    for (auto& x : a[c]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  const long d = static_cast<long>(boost::multiprecision::numerator(det));
  IntMatrix adj(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Q v = a[i][n + j] * d;
      adj[i][j] = static_cast<long>(boost::multiprecision::numerator(v));
    }
  return {adj, d};
}

}  // namespace detail

/// Center Z = P^vee / Q^vee of the simply connected group.  An element is a
/// coweight, stored in simple-coroot coordinates scaled by det(cartan) and
/// reduced mod det.
struct CenterGroup {
  long det = 1;
  IntMatrix inverse_scaled;  // det * cartan^{-1}
  std::vector<IntVec> elements;  // identity first
  std::vector<std::string> names;  // "1" or "z<node>" or products

  IntVec add(const IntVec& x, const IntVec& y) const {
    IntVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = ((x[i] + y[i]) % det + det) % det;
    return z;
  }
  bool is_identity(const IntVec& x) const {
    return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
  }
  int order(const IntVec& x) const {
    IntVec y = x;
    int k = 1;
    while (!is_identity(y)) {
      y = add(y, x);
      ++k;
    }
    return k;
  }
  /// det * <hw, z>; the element acts on the module with highest weight hw by
  /// exp(2 pi i <hw,z>).
  long scaled_pairing(const Weight& hw, const IntVec& z) const {
    long s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += hw[i] * z[i];
    return s;
  }
  bool acts_trivially(const Weight& hw, const IntVec& z) const { return scaled_pairing(hw, z) % det == 0; }
};

inline CenterGroup center_group(const RootDatum& rd) {
  CenterGroup g;
  auto [adj, det] = detail::scaled_inverse(rd.cartan);
  if (det < 0) {
    det = -det;
    for (auto& row : adj)
      for (auto& x : row) x = -x;
  }
  g.det = det;
  g.inverse_scaled = adj;
  const int n = rd.rank();
  // fundamental coweight omega_i^vee = sum_j (cartan^{-1})_{ij} alpha_j^vee;
  // the nontrivial classes are those with highest-root mark 1.
  g.elements.push_back(IntVec(n, 0));
  g.names.push_back("1");
  for (int i = 0; i < n; ++i) {
    if (rd.highest_root_marks[i] != 1) continue;
    IntVec z(n);
    for (int j = 0; j < n; ++j) z[j] = ((adj[i][j] % det) + det) % det;
    g.elements.push_back(z);
    g.names.push_back("z" + std::to_string(i + 1));
  }
  return g;
}

struct KernelDescriptor {
  int order = 1;
  bool cyclic = true;
  std::vector<std::string> generators;  // center element names
  std::vector<int> invariant_factors;   // e.g. {2,2} or {4}
};

inline std::string to_string(const KernelDescriptor& k) {
  if (k.order == 1) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < k.invariant_factors.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(k.invariant_factors[i]);
  }
  return s;
}

/// Subgroup of the center of the simply connected group acting trivially.
inline KernelDescriptor central_kernel(const RootDatum& rd, const Weight& hw) {
  require_weight(rd, hw);
  const CenterGroup g = center_group(rd);
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < g.elements.size(); ++k)
    if (g.acts_trivially(hw, g.elements[k])) members.push_back(k);

  KernelDescriptor out;
  out.order = static_cast<int>(members.size());
  if (out.order == 1) {
    out.invariant_factors = {};
    return out;
  }
  // greedy generating set: largest order first
  std::vector<std::size_t> by_order(members.begin() + 1, members.end());
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return g.order(g.elements[a]) > g.order(g.elements[b]); });
  std::set<IntVec> span{g.elements[0]};
  for (std::size_t k : by_order) {
    if (span.count(g.elements[k])) continue;
    out.generators.push_back(g.names[k]);
    out.invariant_factors.push_back(g.order(g.elements[k]));
    std::set<IntVec> grown = span;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const IntVec& a : std::vector<IntVec>(grown.begin(), grown.end()))
        for (const IntVec& b : std::vector<IntVec>(grown.begin(), grown.end()))
          changed |= grown.insert(g.add(a, b)).second;
      changed |= grown.insert(g.elements[k]).second;
    }
    span = std::move(grown);
  }
  out.cyclic = out.invariant_factors.size() == 1;
  return out;
}

}  // namespace liebound
