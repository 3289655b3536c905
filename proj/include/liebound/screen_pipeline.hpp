// Candidate enumeration under the ell_G bound followed by the three screens,
// cross-referenced against Table 1 membership and the atlas notes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liebound/atlas.hpp"
#include "liebound/boundary.hpp"

namespace liebound {

struct ScreenVerdict {
  IrrepInfo rep;
  long bound = 0;
  bool dim_pass = false;
  NiceResult nice;
  CircleResult circle;
  bool overall = false;
  std::optional<std::string> table1_id;
  std::optional<std::string> manual_exclusion;
  std::vector<std::string> notes;

  bool in_table1() const { return table1_id.has_value(); }
  /// A survivor outside Table 1 must carry a manual-argument note.
  bool explainable() const { return !overall || in_table1() || manual_exclusion.has_value(); }
};

inline ScreenVerdict screen_one(const Atlas& atlas, const RootDatum& rd, const std::vector<SymmetricPair>& pairs,
                                const IrrepInfo& rep, long bound) {
  ScreenVerdict v;
  v.rep = rep;
  v.bound = bound;
  v.dim_pass = rep.dim_r <= bound;
  const WeightSystem ws = weight_system(rd, rep.highest);
  v.nice = nice_involution_screen(rd, rep, ws, pairs);
  v.circle = circle_stratum_screen(rd, rep, ws, atlas.circle_only(rd.type, rep.highest));
  v.overall = v.dim_pass && v.nice.pass && v.circle.pass;
  if (const auto e = atlas.find_table1(rd.type, rep.highest)) v.table1_id = e->id;
  v.manual_exclusion = atlas.manual_exclusion(rd.type, rep.highest);

  if (!v.nice.pass) v.notes.push_back("no involution with codimension <= 4 + dim G/K");
  if (!v.circle.pass) v.notes.push_back("circle stratum cannot accommodate the required isotropy");
  if (v.circle.circle_only && !v.circle.f_max_exact) v.notes.push_back("f_max is a lower bound only");
  if (v.in_table1() && !v.overall) v.notes.push_back("table 1 member rejected by a screen");
  if (v.overall && !v.in_table1())
    v.notes.push_back(v.manual_exclusion ? "survivor excluded by manual argument: " + *v.manual_exclusion
                                         : "survivor outside table 1 without a recorded argument");
  return v;
}

inline std::vector<ScreenVerdict> screen_pipeline(const Atlas& atlas, SimpleType t, BoundChoice choice) {
  const RootDatum rd = build_root_datum(t);
  const long bound = atlas.ell_bounds(t).select(choice);
  const auto pairs = enumerate_inner_symmetric_pairs(rd);
  std::vector<ScreenVerdict> out;
  for (const IrrepInfo& rep : enumerate_irreps_below(rd, bound)) out.push_back(screen_one(atlas, rd, pairs, rep, bound));
  return out;
}

/// Every Table 1 member passed and every survivor is a member or annotated.
inline bool pipeline_consistent(const std::vector<ScreenVerdict>& vs) {
  for (const auto& v : vs) {
    if (v.in_table1() && !v.overall) return false;
    if (!v.explainable()) return false;
  }
  return true;
}

}  // namespace liebound
