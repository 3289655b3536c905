// Necessary conditions for a representation of a simple group to have an
// orbit space with non-empty boundary: the dimension bound, the nice
// involution codimension bound and the circle-stratum weight count.

#pragma once

#include <numeric>

#include "representations.hpp"
#include "symmetric_spaces.hpp"

namespace liebound {

struct GroupShape {
  long ss_dim = 0;
  long ss_rank = 0;
  long ss_factors = 0;
  long center_dim = 0;

  GroupShape operator+(const GroupShape& o) const {
    return {ss_dim + o.ss_dim, ss_rank + o.ss_rank, ss_factors + o.ss_factors, center_dim + o.center_dim};
  }

  static GroupShape simple(SimpleType t) {
    const RootDatum rd = build_root_datum(t);
    return {group_dimension(rd), t.rank, 1, 0};
  }
  static GroupShape torus(long k) { return {0, 0, 0, k}; }
};

struct AlphaBeta {
  long alpha = 0;
  long beta = 0;
  bool operator==(const AlphaBeta&) const = default;
};

inline AlphaBeta alpha_beta(const GroupShape& g) {
  if (g.ss_dim < 0 || g.ss_rank < 0 || g.ss_factors < 0 || g.center_dim < 0)
    fail("group shape entries must be non-negative");
  return {2 * g.ss_dim + 8 * g.ss_rank + 4 * g.ss_factors, 2 * g.center_dim};
}

// ---------------------------------------------------------------------------
// Involutions

/// sigma = exp(pi i omega_node^vee) times a central element z.  On a weight mu
/// it acts by exp(pi i (c(mu) + 2<hw, z>)) where c(mu) is the coefficient of
/// the removed simple root in mu.  Exponents are kept scaled by det(cartan).
struct InvolutionAction {
  SymmetricPair pair;
  long det = 1;
  IntVec coweight;     // det * omega_node^vee in coroot coordinates
  long shift = 0;      // det * 2<hw, z>, reduced mod 2*det
  std::string twist;   // name of z

  long scaled_exponent(const Weight& mu) const {
    long s = shift;
    for (std::size_t j = 0; j < mu.size(); ++j) s += coweight[j] * mu[j];
    return s;
  }
  /// 0 or 1 when sigma acts on the mu-weight space by +1 or -1; empty when the
  /// eigenvalue is not real.
  std::optional<int> parity_of(const Weight& mu) const {
    const long e = scaled_exponent(mu);
    if (e % det != 0) return std::nullopt;
    return static_cast<int>(((e / det) % 2 + 2) % 2);
  }
};

/// The untwisted action of the pair's involution.
inline InvolutionAction involution_action(const RootDatum& rd, const SymmetricPair& p) {
  const CenterGroup cg = center_group(rd);
  InvolutionAction a;
  a.pair = p;
  a.det = cg.det;
  a.coweight = cg.inverse_scaled[p.node - 1];
  a.twist = "1";
  return a;
}

/// All lifts sigma*z, z central, with distinct action on the module.  A lift
/// whose eigenvalues on the module are not real fixes nothing.
inline std::vector<InvolutionAction> lifts(const RootDatum& rd, const SymmetricPair& p, const Weight& hw) {
  const CenterGroup cg = center_group(rd);
  const InvolutionAction base = involution_action(rd, p);
  std::vector<InvolutionAction> out;
  std::set<long> shifts;
  for (std::size_t k = 0; k < cg.elements.size(); ++k) {
    InvolutionAction a = base;
    const long m = 2 * cg.det;
    a.shift = ((2 * cg.scaled_pairing(hw, cg.elements[k])) % m + m) % m;
    a.twist = cg.names[k];
    if (shifts.insert(a.shift).second) out.push_back(std::move(a));
  }
  return out;
}

/// Lifts acting with real eigenvalues (+1/-1 on every weight space).
inline std::vector<InvolutionAction> real_lifts(const RootDatum& rd, const SymmetricPair& p, const Weight& hw) {
  std::vector<InvolutionAction> out;
  for (auto& a : lifts(rd, p, hw))
    if (a.parity_of(hw)) out.push_back(std::move(a));
  return out;
}

/// Complex dimension of the +1 eigenspace.
inline long fixed_subspace_dim(const WeightSystem& ws, const InvolutionAction& act) {
  long s = 0;
  for (const auto& [mu, m] : ws.entries) {
    const auto par = act.parity_of(mu);
    if (par && *par == 0) s += m;
  }
  return s;
}

inline long odd_subspace_dim(const WeightSystem& ws, const InvolutionAction& act) {
  long s = 0;
  for (const auto& [mu, m] : ws.entries) {
    const auto par = act.parity_of(mu);
    if (par && *par == 1) s += m;
  }
  return s;
}

inline long realification_factor(FsType f) { return f == FsType::real ? 1 : 2; }

struct NiceResult {
  bool pass = false;
  std::optional<SymmetricPair> witness;
  std::string twist;
  long fixed_r = 0;
  long codim_r = 0;
  long allowed = 0;  // 4 + dim G/K of the witness
};

/// A pair passes if some lift acts non-trivially with real fixed-space
/// codimension at most 4 + dim G/K.  The reported witness minimizes
/// codim - (4 + dim G/K); on failure it is the closest pair.
inline NiceResult nice_involution_screen(const RootDatum& rd, const IrrepInfo& rep, const WeightSystem& ws,
                                         const std::vector<SymmetricPair>& pairs) {
  NiceResult best;
  long best_slack = std::numeric_limits<long>::max();
  const long factor = realification_factor(rep.fs_type);
  const long dim_c = static_cast<long>(rep.dim_c);
  const long dim_r = static_cast<long>(rep.dim_r);
  for (const auto& p : pairs) {
    for (const auto& act : lifts(rd, p, rep.highest)) {
      const long fixed = fixed_subspace_dim(ws, act);
      if (fixed == dim_c) continue;  // acts trivially, lies in the kernel
      const long codim = dim_r - factor * fixed;
      const long allowed = 4 + p.dim_gk;
      const long slack = codim - allowed;
      if (slack < best_slack) {
        best_slack = slack;
        best.pass = slack <= 0;
        best.witness = p;
        best.twist = act.twist;
        best.fixed_r = factor * fixed;
        best.codim_r = codim;
        best.allowed = allowed;
      }
    }
  }
  if (!best.witness) best.codim_r = dim_r;
  return best;
}

inline NiceResult nice_involution_screen(const RootDatum& rd, const IrrepInfo& rep) {
  return nice_involution_screen(rd, rep, weight_system(rd, rep.highest), enumerate_inner_symmetric_pairs(rd));
}

// ---------------------------------------------------------------------------
// Circle strata

namespace detail {

inline long det_bareiss(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Integer normal of the span of rank-1 vectors in Z^rank (generalized cross
/// product), normalized to primitive with first nonzero entry positive.
inline IntVec normal_of(const std::vector<IntVec>& vs, int rank) {
  IntVec nrm(rank);
  for (int c = 0; c < rank; ++c) {
    IntMatrix minor;
    for (const auto& v : vs) {
      IntVec row;
      for (int j = 0; j < rank; ++j)
        if (j != c) row.push_back(v[j]);
      minor.push_back(row);
    }
    nrm[c] = ((c % 2) ? -1 : 1) * det_bareiss(minor);
  }
  return nrm;
}

inline IntVec primitive(IntVec v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) return v;
  for (long& x : v) x /= g;
  for (long x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (long& y : v) y = -y;
    break;
  }
  return v;
}

inline long dot(const IntVec& a, const IntVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

struct CircleResult {
  bool pass = true;       // false = excluded
  long f_max = 0;         // real dimension
  bool f_max_exact = true;
  long f_required = 0;
  bool circle_only = false;
};

/// Largest complex dimension of the span of weights lying in one rational
/// hyperplane through 0.  Exact search over hyperplanes spanned by
/// (rank-1)-subsets of weight directions when that is at most `budget`
/// subsets; otherwise a lower bound from root and coweight hyperplanes.
inline std::pair<long, bool> max_hyperplane_weight_count(const RootDatum& rd, const WeightSystem& ws,
                                                          long budget = 200000) {
  const int r = rd.rank();
  const long zero_mult = ws.multiplicity(Weight(r, 0));
  auto count_on = [&](const IntVec& normal) {
    long s = 0;
    for (const auto& [mu, m] : ws.entries)
      if (detail::dot(normal, mu) == 0) s += m;
    return s;
  };
  if (r == 1) return {zero_mult, true};

  std::set<IntVec> dirs;
  for (const auto& [mu, m] : ws.entries)
    if (std::any_of(mu.begin(), mu.end(), [](long x) { return x != 0; })) dirs.insert(detail::primitive(mu));
  const std::vector<IntVec> d(dirs.begin(), dirs.end());

  // number of (r-1)-subsets, capped
  double combos = 1;
  for (int i = 0; i < r - 1; ++i) combos = combos * static_cast<double>(d.size() - i) / (i + 1);
  long best = zero_mult;
  if (combos <= static_cast<double>(budget) && static_cast<int>(d.size()) >= r - 1) {
    std::set<IntVec> normals;
    std::vector<int> idx(r - 1);
    std::iota(idx.begin(), idx.end(), 0);
    const int total = static_cast<int>(d.size());
    while (true) {
      std::vector<IntVec> vs;
      for (int i : idx) vs.push_back(d[i]);
      IntVec nrm = detail::normal_of(vs, r);
      if (std::any_of(nrm.begin(), nrm.end(), [](long x) { return x != 0; })) {
        nrm = detail::primitive(nrm);
        if (normals.insert(nrm).second) best = std::max(best, count_on(nrm));
      }
      int k = r - 2;
      while (k >= 0 && idx[k] == total - (r - 1) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {best, true};
  }
  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k) best = std::max(best, count_on(rd.coroot(k)));
  const CenterGroup cg = center_group(rd);
  for (const IntVec& row : cg.inverse_scaled) best = std::max(best, count_on(row));
  return {best, false};
}

/// S^1-stratum obstruction: dim V - 2 = dim G - n + f with n >= rank G forces
/// f >= dim V - 2 - dim G + rank.  Exclusion requires an exact f_max and the
/// caller's assertion that the circle case is the only live one.
inline CircleResult circle_stratum_screen(const RootDatum& rd, const IrrepInfo& rep, const WeightSystem& ws,
                                          bool circle_only) {
  CircleResult out;
  out.circle_only = circle_only;
  const auto [count, exact] = max_hyperplane_weight_count(rd, ws);
  out.f_max = realification_factor(rep.fs_type) * count;
  out.f_max_exact = exact;
  out.f_required = static_cast<long>(rep.dim_r) - 2 - group_dimension(rd) + rd.rank();
  out.pass = !(circle_only && exact && out.f_required > out.f_max);
  return out;
}

// ---------------------------------------------------------------------------
// Dimension bound

enum class BoundChoice { computed, table4, max };

inline std::string to_string(BoundChoice b) {
  switch (b) {
    case BoundChoice::computed: return "computed";
    case BoundChoice::table4: return "table4";
    case BoundChoice::max: return "max";
  }
  return "?";
}

inline BoundChoice parse_bound_choice(std::string_view s) {
  if (s == "computed") return BoundChoice::computed;
  if (s == "table4") return BoundChoice::table4;
  if (s == "max") return BoundChoice::max;
  fail("unknown bound choice '" + std::string(s) + "' (expected computed|table4|max)");
}

/// Both candidate values of ell_G for one type.
struct EllBounds {
  SimpleType type;
  long computed = 0;
  std::optional<long> table4;

  long select(BoundChoice c) const {
    switch (c) {
      case BoundChoice::computed: return computed;
      case BoundChoice::table4:
        if (!table4) fail("no tabulated ell value for " + type.name());
        return *table4;
      case BoundChoice::max: return table4 ? std::max(computed, *table4) : computed;
    }
    return computed;
  }
};

inline bool dimension_screen(const IrrepInfo& rep, const EllBounds& bounds, BoundChoice choice) {
  return rep.dim_r <= bounds.select(choice);
}

}  // namespace liebound
