// Root data of the compact simple Lie types.
//
// Node numbering follows Bourbaki throughout.  The Cartan matrix is stored
// as cartan[i][j] = <alpha_i^vee, alpha_j>, so column j holds the Dynkin
// labels of the simple root alpha_j.  Symmetrizers d_i = (alpha_i,alpha_i)/2
// are normalized so that short roots have d = 1.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liebound {

using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<long>;
using IntMatrix = std::vector<IntVec>;

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const SimpleType&) const = default;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

inline bool valid_rank(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

inline SimpleType make_type(Family f, int r) {
  if (!valid_rank(f, r))
    fail("invalid rank " + std::to_string(r) + " for family " + std::string(1, static_cast<char>(f)));
  return {f, r};
}

/// Parses "G2", "E8", "a3" ... ; throws on anything else.
inline SimpleType parse_type(std::string_view s) {
  if (s.size() < 2)
    fail("cannot parse simple type '" + std::string(s) + "'");
  char c = s[0];
  if (c >= 'a' && c <= 'z')
    c = static_cast<char>(c - 'a' + 'A');
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos)
    fail("unknown family in '" + std::string(s) + "'");
  int r = 0;
  for (char d : s.substr(1)) {
    if (d < '0' || d > '9')
      fail("cannot parse rank in '" + std::string(s) + "'");
    r = r * 10 + (d - '0');
    if (r > 1000)
      fail("rank too large in '" + std::string(s) + "'");
  }
  return make_type(static_cast<Family>(c), r);
}

namespace detail {

inline void bond(IntMatrix& a, int i, int j) {  // simply laced edge, 0-based
  a[i][j] = -1;
  a[j][i] = -1;
}

inline IntMatrix cartan_matrix(SimpleType t) {
  const int n = t.rank;
  IntMatrix a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    a[i][i] = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 1);
      break;
    case Family::E:
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::F:
      bond(a, 0, 1);
      bond(a, 2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

inline IntVec symmetrizers(SimpleType t) {
  const int n = t.rank;
  IntVec d(n, 1);
  switch (t.family) {
    case Family::B: std::fill(d.begin(), d.end() - 1, 2); break;
    case Family::C: d[n - 1] = 2; break;
    case Family::F: d[0] = d[1] = 2; break;
    case Family::G: d[1] = 3; break;
    default: break;
  }
  return d;
}

}  // namespace detail

/// Exact root combinatorics of one simple type.  Immutable after build.
struct RootDatum {
  SimpleType type;
  IntMatrix cartan;
  IntVec symmetrizers;
  /// Positive roots in simple-root coordinates, graded by height then lexicographic.
  std::vector<IntVec> positive_roots;
  IntVec highest_root_marks;
  IntVec weyl_vector_labels;

  int rank() const { return type.rank; }

  /// Dynkin labels <alpha_i^vee, beta> of a root-lattice element given in
  /// simple-root coordinates.
  IntVec root_to_labels(const IntVec& coeffs) const {
    IntVec out(rank(), 0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        out[i] += cartan[i][j] * coeffs[j];
    return out;
  }

  /// (beta, gamma) for root-lattice elements in simple-root coordinates.
  long inner_roots(const IntVec& b, const IntVec& c) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += b[i] * c[j] * symmetrizers[i] * cartan[i][j];
    return s;
  }

  /// Simple-coroot coordinates of the coroot of a positive root.
  IntVec coroot(std::size_t root_index) const {
    const IntVec& c = positive_roots.at(root_index);
    const long half_norm = inner_roots(c, c) / 2;
    IntVec out(rank());
    for (int j = 0; j < rank(); ++j)
      out[j] = c[j] * symmetrizers[j] / half_norm;
    return out;
  }

  std::size_t highest_root_index() const { return positive_roots.size() - 1; }
};

inline long height(const IntVec& v) {
  long h = 0;
  for (long x : v) h += x;
  return h;
}

/// Builds the positive roots by root strings through the simple roots.
inline RootDatum build_root_datum(SimpleType t) {
  if (!valid_rank(t.family, t.rank))
    fail("invalid simple type " + t.name());
  RootDatum rd;
  rd.type = t;
  rd.cartan = detail::cartan_matrix(t);
  rd.symmetrizers = detail::symmetrizers(t);
  const int n = t.rank;

  std::set<IntVec> known;
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<IntVec> all = layer;
  while (!layer.empty()) {
    std::set<IntVec> next;
    for (const IntVec& beta : layer) {
      const IntVec labels = rd.root_to_labels(beta);
      for (int i = 0; i < n; ++i) {
        // q = largest k with beta - k alpha_i a root; p = q - <beta, alpha_i^vee>
        int q = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        if (q - labels[i] > 0) {
          IntVec up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const IntVec& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  std::sort(all.begin(), all.end(), [](const IntVec& a, const IntVec& b) {
    const long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rd.positive_roots = std::move(all);
  rd.highest_root_marks = rd.positive_roots.back();
  rd.weyl_vector_labels.assign(n, 1);
  return rd;
}

inline long group_dimension(const RootDatum& rd) {
  return rd.rank() + 2 * static_cast<long>(rd.positive_roots.size());
}

inline long group_dimension(SimpleType t) { return group_dimension(build_root_datum(t)); }

/// <w, alpha^vee> for a weight in fundamental-weight coordinates.
inline long pair(const IntVec& w, std::size_t root_index, const RootDatum& rd) {
  if (static_cast<int>(w.size()) != rd.rank())
    fail("weight length " + std::to_string(w.size()) + " does not match rank " + std::to_string(rd.rank()));
  if (root_index >= rd.positive_roots.size()) fail("root index " + std::to_string(root_index) + " out of range");
  const IntVec cv = rd.coroot(root_index);
  long s = 0;
  for (int j = 0; j < rd.rank(); ++j)
    s += w[j] * cv[j];
  return s;
}

/// Diagram automorphism realizing -w0 on Dynkin labels.
inline IntVec dual_involution(SimpleType t, IntVec w) {
  if (static_cast<int>(w.size()) != t.rank)
    fail("weight length does not match rank of " + t.name());
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      std::reverse(w.begin(), w.end());
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(w[n - 2], w[n - 1]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(w[0], w[5]);
        std::swap(w[2], w[4]);
      }
      break;
    default:
      break;
  }
  return w;
}

/// All diagram automorphisms of the finite Dynkin diagram, as label permutations
/// (perm[i] = image node).  Identity first.
inline std::vector<std::vector<int>> diagram_automorphisms(SimpleType t) {
  const int n = t.rank;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<int>> out{id};
  auto from_swap = [&](std::initializer_list<std::pair<int, int>> swaps) {
    std::vector<int> p = id;
    for (auto [a, b] : swaps) std::swap(p[a], p[b]);
    return p;
  };
  if (t.family == Family::A && n > 1) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    out.push_back(p);
  } else if (t.family == Family::D && n == 4) {
    // permutations of the three outer nodes 0, 2, 3 around node 1
    const int outer[3] = {0, 2, 3};
    int perm[3] = {0, 1, 2};
    while (std::next_permutation(perm, perm + 3)) {
      std::vector<int> p = id;
      for (int k = 0; k < 3; ++k) p[outer[k]] = outer[perm[k]];
      out.push_back(p);
    }
  } else if (t.family == Family::D) {
    out.push_back(from_swap({{n - 2, n - 1}}));
  } else if (t.family == Family::E && n == 6) {
    out.push_back(from_swap({{0, 5}, {2, 4}}));
  }
  return out;
}

inline IntVec apply_permutation(const std::vector<int>& perm, const IntVec& w) {
  IntVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[perm[i]] = w[i];
  return out;
}

}  // namespace liebound
