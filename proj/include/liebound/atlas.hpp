// Reference tables as data: loading, instantiation, membership, and the
// cross-table verification harness.
//
// Rows name a group series ("SU", "SO", "Spin", "Sp", "G2" ... "E8") and a
// parameter range; realize() maps a (series, n) to its simple type.  SO(n)
// rows are relative to SO(n) = Spin(n)/ker(R^n), everything else to the
// simply connected group.

#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liebound/boundary.hpp"
#include "liebound/formula.hpp"
#include "liebound/representations.hpp"
#include "liebound/root_datum.hpp"
#include "liebound/symmetric_spaces.hpp"

namespace liebound {

using Json = nlohmann::json;

inline std::string default_data_dir() {
#ifdef LIEBOUND_DATA_DIR
  return LIEBOUND_DATA_DIR;
#else
  return "data";
#endif
}

inline Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open data file " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("malformed JSON in " + path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Groups and local isomorphisms

inline bool is_exceptional_series(const std::string& s) {
  return s == "G2" || s == "F4" || s == "E6" || s == "E7" || s == "E8";
}

struct GroupRef {
  std::string series;
  long n = 0;  // unused for exceptional series

  bool operator==(const GroupRef&) const = default;

  std::string name() const {
    return is_exceptional_series(series) ? series : series + "(" + std::to_string(n) + ")";
  }
  Bindings bindings() const { return is_exceptional_series(series) ? Bindings{} : Bindings{{"n", n}}; }
};

/// Simple type of a group; nullopt when the group is not simple (SO(4), SU(1)).
inline std::optional<SimpleType> realize(const GroupRef& g) {
  const long n = g.n;
  if (is_exceptional_series(g.series)) return parse_type(g.series);
  if (g.series == "SU") {
    if (n < 2) return std::nullopt;
    return make_type(Family::A, static_cast<int>(n - 1));
  }
  if (g.series == "SO" || g.series == "Spin") {
    if (n == 3) return make_type(Family::A, 1);
    if (n < 5) return std::nullopt;
    if (n % 2 == 1) return make_type(Family::B, static_cast<int>((n - 1) / 2));
    return make_type(Family::D, static_cast<int>(n / 2));
  }
  if (g.series == "Sp") {
    if (n < 1) return std::nullopt;
    if (n == 1) return make_type(Family::A, 1);
    return make_type(Family::C, static_cast<int>(n));
  }
  fail("unknown group series '" + g.series + "'");
}

/// Representative of the local isomorphism class: C2 -> B2, D3 -> A3.
inline SimpleType canonical_type(SimpleType t) {
  if (t.family == Family::C && t.rank == 2) return {Family::B, 2};
  if (t.family == Family::D && t.rank == 3) return {Family::A, 3};
  return t;
}

inline bool locally_isomorphic(SimpleType a, SimpleType b) { return canonical_type(a) == canonical_type(b); }

/// Transports Dynkin labels along B2 = C2 and A3 = D3.
inline Weight convert_weight(SimpleType from, SimpleType to, const Weight& w) {
  if (from == to) return w;
  if (!locally_isomorphic(from, to)) fail("types " + from.name() + " and " + to.name() + " are not isomorphic");
  if (from.rank == 2) return {w[1], w[0]};
  return {w[1], w[0], w[2]};  // A3 middle node is the D3 branch node
}

/// Orbit representative of a weight under diagram automorphisms, in the
/// canonical type of its local isomorphism class.
inline std::pair<SimpleType, Weight> canonical_weight(SimpleType t, const Weight& w) {
  const SimpleType c = canonical_type(t);
  const Weight cw = convert_weight(t, c, w);
  Weight best;
  for (const auto& perm : diagram_automorphisms(c)) {
    Weight img = apply_permutation(perm, cw);
    if (best.empty() || img < best) best = std::move(img);
  }
  return {c, best};
}

inline Weight adjoint_weight(const RootDatum& rd) { return rd.root_to_labels(rd.highest_root_marks); }

inline Weight vector_weight(const GroupRef& g, const RootDatum& rd) {
  if (is_exceptional_series(g.series)) fail("no vector representation named for " + g.name());
  Weight w(rd.rank(), 0);
  w[0] = ((g.series == "SO" || g.series == "Spin") && g.n == 3) ? 2 : 1;
  return w;
}

/// Order of the kernel of the simply connected cover onto the listed group.
inline long covering_kernel_order(const GroupRef& g, const RootDatum& rd) {
  if (g.series != "SO") return 1;
  return central_kernel(rd, vector_weight(g, rd)).order;
}

/// All groups (up to n = 2*rank+2) whose simple type is locally isomorphic to t.
inline std::vector<GroupRef> groups_realizing(SimpleType t) {
  std::vector<GroupRef> out;
  if (t.family == Family::E || t.family == Family::F || t.family == Family::G) {
    out.push_back({t.name(), 0});
    return out;
  }
  for (const char* s : {"SU", "SO", "Spin", "Sp"})
    for (long n = 1; n <= 2L * t.rank + 2; ++n) {
      const GroupRef g{s, n};
      const auto r = realize(g);
      if (r && locally_isomorphic(*r, t)) out.push_back(g);
    }
  return out;
}

/// Parametric highest weight: "adjoint", "vector", a literal label array, or
/// {"nodes": [[node_expr, coeff], ...]} with 1-based node indices.
inline Weight eval_hw(const Json& desc, const GroupRef& g, const RootDatum& rd, const Bindings& vars) {
  Weight w;
  if (desc.is_string()) {
    const std::string s = desc.get<std::string>();
    if (s == "adjoint") w = adjoint_weight(rd);
    else if (s == "vector") w = vector_weight(g, rd);
    else fail("unknown highest-weight keyword '" + s + "'");
  } else if (desc.is_array()) {
    w = desc.get<Weight>();
  } else if (desc.is_object() && desc.contains("nodes")) {
    w.assign(rd.rank(), 0);
    for (const auto& term : desc.at("nodes")) {
      const long node = Formula(term.at(0).get<std::string>()).eval(vars);
      if (node < 1 || node > rd.rank()) fail("node " + std::to_string(node) + " out of range for " + g.name());
      w[node - 1] += term.at(1).get<long>();
    }
  } else {
    fail("malformed highest-weight specification " + desc.dump());
  }
  require_weight(rd, w);
  return w;
}

// ---------------------------------------------------------------------------
// Row scaffolding shared by the parametric tables

struct RowRange {
  std::string series;
  long n_min = 0;
  std::optional<long> n_max;
  std::optional<std::string> when;

  static RowRange parse(const Json& j) {
    RowRange r;
    r.series = j.at("group").get<std::string>();
    r.n_min = j.value("n_min", 0L);
    if (j.contains("n_max")) r.n_max = j.at("n_max").get<long>();
    if (j.contains("when")) r.when = j.at("when").get<std::string>();
    return r;
  }
  bool admits(const GroupRef& g) const {
    if (g.series != series) return false;
    if (!is_exceptional_series(series)) {
      if (g.n < n_min || (n_max && g.n > *n_max)) return false;
    }
    return !when || Formula(*when).holds(g.bindings());
  }
};

/// Parameter values n for which the series has rank at most max_rank.
inline std::vector<GroupRef> series_instances(const std::string& series, int max_rank) {
  std::vector<GroupRef> out;
  if (is_exceptional_series(series)) {
    if (parse_type(series).rank <= max_rank) out.push_back({series, 0});
    return out;
  }
  for (long n = 1; n <= 2L * max_rank + 2; ++n) {
    const GroupRef g{series, n};
    const auto t = realize(g);
    if (t && t->rank <= max_rank) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 1

struct AtlasIrrepRow {
  std::string id;
  RowRange range;
  Json hw;
  std::string notation;
  char field = 'R';
  std::string dim, kernel_order, pig, pig_dim;
  Json property;
  std::string note;
  std::optional<long> kernel_erratum;  // documented computed kernel order differing from the table
  std::string erratum_reason;
};

/// One row of the irreducible table instantiated at a specific group.
struct AtlasIrrep {
  std::string id;
  GroupRef group;
  SimpleType type;
  Weight hw;
  std::string notation;
  char field = 'R';
  long dim = 0;           // exponent k of R^k, C^k or H^k
  long kernel_order = 1;  // relative to the listed group
  std::string property;   // polar | toric | qtoric | none
  std::string pig;
  long pig_dim = 0;
  std::optional<long> kernel_erratum;
  std::string erratum_reason;

  std::string label() const { return group.name() + " " + notation; }
};

inline bool valid_property(const std::string& p) {
  return p == "polar" || p == "toric" || p == "qtoric" || p == "none";
}

inline AtlasIrrepRow parse_table1_row(const Json& j) {
  AtlasIrrepRow r;
  r.id = j.at("id").get<std::string>();
  r.range = RowRange::parse(j);
  r.hw = j.at("hw");
  r.notation = j.at("notation").get<std::string>();
  const std::string f = j.at("field").get<std::string>();
  if (f != "R" && f != "C" && f != "H") fail("row " + r.id + ": field must be R, C or H");
  r.field = f[0];
  r.dim = j.at("dim").get<std::string>();
  r.kernel_order = j.at("kernel_order").get<std::string>();
  r.property = j.at("property");
  r.pig = j.at("pig").get<std::string>();
  r.pig_dim = j.at("pig_dim").get<std::string>();
  r.note = j.value("note", "");
  if (j.contains("kernel_erratum")) {
    r.kernel_erratum = j.at("kernel_erratum").at("computed").get<long>();
    r.erratum_reason = j.at("kernel_erratum").value("reason", "");
  }
  return r;
}

inline AtlasIrrep instantiate(const AtlasIrrepRow& row, const GroupRef& g) {
  const auto t = realize(g);
  if (!t) fail("row " + row.id + " instantiated at non-simple group " + g.name());
  const RootDatum rd = build_root_datum(*t);
  const Bindings vars = g.bindings();
  AtlasIrrep e;
  e.id = row.id;
  e.group = g;
  e.type = *t;
  e.hw = eval_hw(row.hw, g, rd, vars);
  e.notation = row.notation;
  e.field = row.field;
  e.dim = Formula(row.dim).eval(vars);
  e.kernel_order = Formula(row.kernel_order).eval(vars);
  if (row.property.is_string()) {
    e.property = row.property.get<std::string>();
  } else {
    for (const auto& alt : row.property)
      if (Formula(alt.at("when").get<std::string>()).holds(vars)) {
        e.property = alt.at("value").get<std::string>();
        break;
      }
  }
  if (!valid_property(e.property)) fail("row " + row.id + ": no valid property tag at " + g.name());
  e.pig = row.pig;
  e.pig_dim = Formula(row.pig_dim).eval(vars);
  e.kernel_erratum = row.kernel_erratum;
  e.erratum_reason = row.erratum_reason;
  return e;
}

// ---------------------------------------------------------------------------
// Table 2

struct SummandSpec {
  std::optional<std::string> series;  // override, e.g. R^6 of SU(4) given as SO(6) vector
  std::optional<std::string> n;
  Json hw;
  std::string mult;
  std::string notation;
};

struct AtlasReducibleRow {
  std::string id;
  RowRange range;
  std::vector<std::array<std::string, 3>> params;  // name, low, high
  std::optional<std::string> when;
  std::string notation;
  std::vector<SummandSpec> summands;
};

struct Summand {
  GroupRef group;  // the group the weight is written for
  SimpleType type;
  Weight hw;
  long mult = 1;
  std::string notation;
  IrrepInfo info;
};

struct AtlasReducible {
  std::string id;
  GroupRef group;
  SimpleType type;
  Bindings params;
  std::string notation;
  std::vector<Summand> summands;  // zero multiplicities dropped
  BigInt total_dim_r = 0;

  std::string label() const {
    std::string s = group.name() + " " + notation;
    for (const auto& [k, v] : params)
      if (k != "n") s += " " + k + "=" + std::to_string(v);
    return s;
  }
};

inline AtlasReducibleRow parse_table2_row(const Json& j) {
  AtlasReducibleRow r;
  r.id = j.at("id").get<std::string>();
  r.range = RowRange::parse(j);
  r.range.when.reset();  // "when" constrains the parameters, not the group
  if (j.contains("when")) r.when = j.at("when").get<std::string>();
  for (const auto& p : j.value("params", Json::array()))
    r.params.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>(), p.at(2).get<std::string>()});
  r.notation = j.at("notation").get<std::string>();
  for (const auto& s : j.at("summands")) {
    SummandSpec sp;
    if (s.contains("group")) sp.series = s.at("group").get<std::string>();
    if (s.contains("n")) sp.n = s.at("n").get<std::string>();
    sp.hw = s.at("hw");
    sp.mult = s.value("mult", std::string("1"));
    sp.notation = s.value("notation", std::string());
    r.summands.push_back(std::move(sp));
  }
  return r;
}

inline std::vector<AtlasReducibleRow> parse_table2(const Json& doc) {
  std::vector<AtlasReducibleRow> rows;
  for (const auto& j : doc.at("rows")) rows.push_back(parse_table2_row(j));
  return rows;
}

inline std::vector<AtlasReducible> instantiate(const AtlasReducibleRow& row, const GroupRef& g) {
  std::vector<AtlasReducible> out;
  const auto t = realize(g);
  if (!t) return out;
  std::vector<Bindings> assignments;
  std::function<void(std::size_t, Bindings)> walk = [&](std::size_t i, Bindings b) {
    if (i == row.params.size()) {
      if (!row.when || Formula(*row.when).holds(b)) assignments.push_back(b);
      return;
    }
    const auto& [name, lo, hi] = row.params[i];
    const long a = Formula(lo).eval(b), z = Formula(hi).eval(b);
    for (long v = a; v <= z; ++v) {
      b[name] = v;
      walk(i + 1, b);
    }
  };
  walk(0, g.bindings());

  for (const Bindings& vars : assignments) {
    AtlasReducible inst;
    inst.id = row.id;
    inst.group = g;
    inst.type = *t;
    inst.params = vars;
    inst.notation = row.notation;
    for (const auto& sp : row.summands) {
      const long mult = Formula(sp.mult).eval(vars);
      if (mult < 0) fail("row " + row.id + ": negative multiplicity");
      if (mult == 0) continue;
      GroupRef sg = g;
      if (sp.series) sg.series = *sp.series;
      if (sp.n) sg.n = Formula(*sp.n).eval(vars);
      const auto st = realize(sg);
      if (!st) fail("row " + row.id + ": summand group " + sg.name() + " is not simple");
      const RootDatum rd = build_root_datum(*st);
      Summand s;
      s.group = sg;
      s.type = *st;
      s.hw = eval_hw(sp.hw, sg, rd, vars);
      s.mult = mult;
      s.notation = sp.notation;
      s.info = irrep_info(rd, s.hw);
      inst.total_dim_r += s.info.dim_r * mult;
      inst.summands.push_back(std::move(s));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables 3 and 4, notes

struct SpaceRow {
  std::string id;
  std::string kind;
  std::string name;  // exceptional spaces
  std::optional<std::string> when;
  std::string ell;
  std::string display;
};

inline std::string kind_name(SpaceTag::Kind k) {
  using K = SpaceTag::Kind;
  switch (k) {
    case K::RealGrassmannian: return "RealGrassmannian";
    case K::ComplexGrassmannian: return "ComplexGrassmannian";
    case K::QuatGrassmannian: return "QuatGrassmannian";
    case K::HermitianC: return "HermitianC";
    case K::HermitianD: return "HermitianD";
    case K::Sphere: return "Sphere";
    case K::Exceptional: return "Exceptional";
    case K::Product: return "Product";
  }
  return "?";
}

inline bool row_matches(const SpaceRow& row, const SpaceTag& tag) {
  if (row.kind != kind_name(tag.kind)) return false;
  if (tag.kind == SpaceTag::Kind::Exceptional) return row.name == tag.name;
  if (tag.kind == SpaceTag::Kind::Product) return false;
  return !row.when || Formula(*row.when).holds({{"n", tag.n}, {"p", tag.p}});
}

struct Table4Row {
  std::string id;
  RowRange range;
  std::string ell;
};

struct NoteEntry {
  SimpleType type;
  Weight hw;
  std::string reason;
};

struct GapFixture {
  GroupRef group;
  std::string row;
  std::optional<long> c_hat;
  std::string hat;
  std::optional<std::string> cross_type, cross_space;
  std::string source;
  std::optional<std::string> skip;
};

// ---------------------------------------------------------------------------
// Atlas

class Atlas {
public:
  std::vector<AtlasIrrepRow> table1;
  std::vector<AtlasReducibleRow> table2;
  std::vector<SpaceRow> table3;
  std::vector<Json> table3_expected;
  std::vector<Table4Row> table4;
  std::map<std::string, std::pair<long, long>> table4_check_ranges;
  std::vector<Json> table4_expected;
  std::vector<NoteEntry> circle_only_notes;
  std::vector<NoteEntry> manual_exclusions;
  std::vector<GapFixture> gap_fixtures;

  static Atlas load(const std::filesystem::path& dir = default_data_dir()) {
    Atlas a;
    const Json t1 = load_json(dir / "table1.json");
    for (const auto& j : t1.at("rows")) a.table1.push_back(parse_table1_row(j));
    a.table2 = parse_table2(load_json(dir / "table2.json"));

    const Json t3 = load_json(dir / "table3.json");
    for (const auto& j : t3.at("rows")) {
      SpaceRow r;
      r.id = j.at("id").get<std::string>();
      r.kind = j.at("kind").get<std::string>();
      r.name = j.value("name", "");
      if (j.contains("when")) r.when = j.at("when").get<std::string>();
      r.ell = j.at("ell").get<std::string>();
      r.display = j.value("display", r.id);
      a.table3.push_back(std::move(r));
    }
    for (const auto& j : t3.value("expected_discrepancies", Json::array())) a.table3_expected.push_back(j);

    const Json t4 = load_json(dir / "table4.json");
    for (const auto& j : t4.at("rows"))
      a.table4.push_back({j.at("id").get<std::string>(), RowRange::parse(j), j.at("ell").get<std::string>()});
    for (const auto& [k, v] : t4.at("check_ranges").items())
      a.table4_check_ranges[k] = {v.at(0).get<long>(), v.at(1).get<long>()};
    for (const auto& j : t4.value("expected_discrepancies", Json::array())) a.table4_expected.push_back(j);

    const Json notes = load_json(dir / "notes.json");
    auto parse_notes = [](const Json& arr) {
      std::vector<NoteEntry> out;
      for (const auto& j : arr)
        out.push_back({parse_type(j.at("type").get<std::string>()), j.at("hw").get<Weight>(),
                       j.at("reason").get<std::string>()});
      return out;
    };
    a.circle_only_notes = parse_notes(notes.value("circle_only", Json::array()));
    a.manual_exclusions = parse_notes(notes.value("manual_exclusions", Json::array()));
    for (const auto& j : notes.value("quaternionic_gap", Json::array())) {
      GapFixture f;
      f.group = {j.at("group").get<std::string>(), j.value("n", 0L)};
      f.row = j.at("row").get<std::string>();
      if (j.contains("c_hat")) f.c_hat = j.at("c_hat").get<long>();
      f.hat = j.value("hat", "");
      if (j.contains("crosscheck")) {
        f.cross_type = j.at("crosscheck").at("type").get<std::string>();
        f.cross_space = j.at("crosscheck").at("space").get<std::string>();
      }
      f.source = j.value("source", "");
      if (j.contains("skip")) f.skip = j.at("skip").get<std::string>();
      a.gap_fixtures.push_back(std::move(f));
    }
    return a;
  }

  /// Rows admitting exactly this group.
  std::vector<AtlasIrrep> table1_entries(const GroupRef& g) const {
    std::vector<AtlasIrrep> out;
    for (const auto& row : table1)
      if (row.range.admits(g)) out.push_back(instantiate(row, g));
    return out;
  }

  /// Rows of every group locally isomorphic to t, with labels transported to t.
  std::vector<AtlasIrrep> table1_entries(SimpleType t) const {
    std::vector<AtlasIrrep> out;
    for (const GroupRef& g : groups_realizing(t))
      for (AtlasIrrep e : table1_entries(g)) {
        e.hw = convert_weight(e.type, t, e.hw);
        e.type = t;
        out.push_back(std::move(e));
      }
    return out;
  }

  /// Table 1 membership up to local isomorphism and outer automorphism.
  std::optional<AtlasIrrep> find_table1(SimpleType t, const Weight& hw) const {
    const auto key = canonical_weight(t, hw);
    for (const auto& e : table1_entries(t))
      if (canonical_weight(e.type, e.hw) == key) return e;
    return std::nullopt;
  }

  std::vector<AtlasReducible> table2_entries(const GroupRef& g) const {
    std::vector<AtlasReducible> out;
    for (const auto& row : table2)
      if (row.range.admits(g))
        for (auto& inst : instantiate(row, g)) out.push_back(std::move(inst));
    return out;
  }

  std::vector<AtlasReducible> table2_entries(SimpleType t) const {
    std::vector<AtlasReducible> out;
    for (const GroupRef& g : groups_realizing(t))
      for (auto& inst : table2_entries(g)) out.push_back(std::move(inst));
    return out;
  }

  /// Tabulated ell_G of a listed group; Spin(n) reads the SO(n) row.
  std::optional<long> table4_value(const GroupRef& g) const {
    GroupRef q = g;
    if (q.series == "Spin") q.series = "SO";
    for (const auto& r : table4)
      if (r.range.admits(q)) return Formula(r.ell).eval(q.bindings());
    return std::nullopt;
  }

  /// Tabulated value for a simple type via its standard group; C2 falls back
  /// to SO(5) and D3 reads SO(6).
  std::optional<long> table4_value(SimpleType t) const {
    switch (t.family) {
      case Family::A: return table4_value(GroupRef{"SU", t.rank + 1L});
      case Family::B: return table4_value(GroupRef{"SO", 2L * t.rank + 1});
      case Family::C:
        if (t.rank == 2) return table4_value(GroupRef{"SO", 5});
        return table4_value(GroupRef{"Sp", static_cast<long>(t.rank)});
      case Family::D: return table4_value(GroupRef{"SO", 2L * t.rank});
      default: return table4_value(GroupRef{t.name(), 0});
    }
  }

  EllBounds ell_bounds(SimpleType t) const { return {t, ell_group(t).computed, table4_value(t)}; }

  EllBounds ell_bounds(const GroupRef& g) const {
    const auto t = realize(g);
    if (!t) fail(g.name() + " is not simple");
    auto v = table4_value(g);
    if (!v) v = table4_value(*t);
    return {*t, ell_group(*t).computed, v};
  }

  bool circle_only(SimpleType t, const Weight& hw) const { return find_note(circle_only_notes, t, hw).has_value(); }

  std::optional<std::string> manual_exclusion(SimpleType t, const Weight& hw) const {
    return find_note(manual_exclusions, t, hw);
  }

private:
  static std::optional<std::string> find_note(const std::vector<NoteEntry>& notes, SimpleType t, const Weight& hw) {
    const auto key = canonical_weight(t, hw);
    for (const auto& n : notes)
      if (locally_isomorphic(n.type, t) && canonical_weight(n.type, n.hw) == key) return n.reason;
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Cohomogeneity

/// dim V - dim G + dim of the principal isotropy group.
inline long cohomogeneity(const AtlasIrrep& e) {
  const RootDatum rd = build_root_datum(e.type);
  const IrrepInfo info = irrep_info(rd, e.hw);
  return static_cast<long>(info.dim_r) - group_dimension(rd) + e.pig_dim;
}

inline long cohom_lower_bound(long dim_v, long dim_g) { return dim_v - dim_g; }

// ---------------------------------------------------------------------------
// Verification reports

enum class Status { confirmed, expected, violation };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::expected: return "expected-discrepancy";
    case Status::violation: return "violation";
  }
  return "?";
}

struct Finding {
  std::string table;
  std::string subject;
  Status status = Status::confirmed;
  std::string detail;
};

struct VerifyReport {
  std::vector<Finding> findings;
  std::vector<std::string> skipped;

  void add(std::string table, std::string subject, Status s, std::string detail) {
    findings.push_back({std::move(table), std::move(subject), s, std::move(detail)});
  }
  void merge(const VerifyReport& o) {
    findings.insert(findings.end(), o.findings.begin(), o.findings.end());
    skipped.insert(skipped.end(), o.skipped.begin(), o.skipped.end());
  }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [s](const Finding& f) { return f.status == s; }));
  }
  std::vector<Finding> with(Status s) const {
    std::vector<Finding> out;
    for (const auto& f : findings)
      if (f.status == s) out.push_back(f);
    return out;
  }
  bool ok() const { return count(Status::violation) == 0; }
};

inline std::string str(const BigInt& b) { return b.str(); }

struct Table1Audit {
  AtlasIrrep entry;
  IrrepInfo info;
  long kernel_order = 1;  // computed, relative to the listed group
  std::string kernel;     // descriptor in the simply connected group
  NiceResult nice;
  EllBounds bounds;
  bool dim_pass = false;
  long cohom = 0;
  long cohom_bound = 0;
  std::vector<std::string> problems;
  std::vector<std::string> expected;  // documented table errata
};

inline Table1Audit audit_table1_entry(const Atlas& atlas, const AtlasIrrep& e) {
  Table1Audit a;
  a.entry = e;
  const RootDatum rd = build_root_datum(e.type);
  a.info = irrep_info(rd, e.hw);
  const KernelDescriptor ker = central_kernel(rd, e.hw);
  a.kernel = to_string(ker);
  const long cover = covering_kernel_order(e.group, rd);
  if (ker.order % cover != 0) a.problems.push_back("module does not factor through " + e.group.name());
  a.kernel_order = ker.order / cover;

  const BigInt expect_c = e.field == 'H' ? BigInt(2 * e.dim) : BigInt(e.dim);
  const FsType expect_fs =
      e.field == 'R' ? FsType::real : e.field == 'C' ? FsType::complex : FsType::quaternionic;
  if (a.info.dim_c != expect_c)
    a.problems.push_back("dim_c " + str(a.info.dim_c) + " != " + str(expect_c));
  if (a.info.fs_type != expect_fs)
    a.problems.push_back("type " + to_string(a.info.fs_type) + " != " + to_string(expect_fs));
  if (a.kernel_order != e.kernel_order) {
    const std::string msg = "kernel order " + std::to_string(a.kernel_order) + " != " + std::to_string(e.kernel_order);
    if (e.kernel_erratum && *e.kernel_erratum == a.kernel_order)
      a.expected.push_back(msg + " (" + e.erratum_reason + ")");
    else
      a.problems.push_back(msg);
  }

  a.bounds = atlas.ell_bounds(e.group);
  a.dim_pass = dimension_screen(a.info, a.bounds, BoundChoice::max);
  if (!a.dim_pass)
    a.problems.push_back("dim_r " + str(a.info.dim_r) + " exceeds ell bound " +
                         std::to_string(a.bounds.select(BoundChoice::max)));
  a.nice = nice_involution_screen(rd, a.info);
  if (!a.nice.pass) a.problems.push_back("no nice involution");

  a.cohom = cohomogeneity(e);
  a.cohom_bound = cohom_lower_bound(static_cast<long>(a.info.dim_r), group_dimension(rd));
  if (a.cohom < a.cohom_bound) a.problems.push_back("cohomogeneity below lower bound");
  if (a.cohom < 1) a.problems.push_back("cohomogeneity " + std::to_string(a.cohom) + " < 1");
  return a;
}

inline VerifyReport verify_table1(const Atlas& atlas, int max_rank = 8) {
  VerifyReport rep;
  for (const auto& row : atlas.table1)
    for (const GroupRef& g : series_instances(row.range.series, max_rank)) {
      if (!row.range.admits(g)) continue;
      const AtlasIrrep e = instantiate(row, g);
      const Table1Audit a = audit_table1_entry(atlas, e);
      std::string detail = "dim_c=" + str(a.info.dim_c) + " type=" + to_string(a.info.fs_type) +
                           " dim_r=" + str(a.info.dim_r) + " kernel_order=" + std::to_string(a.kernel_order) +
                           " ell_bound=" + std::to_string(a.bounds.select(BoundChoice::max)) +
                           " nice_codim=" + std::to_string(a.nice.codim_r) + "/" + std::to_string(a.nice.allowed) +
                           " cohomogeneity=" + std::to_string(a.cohom);
      for (const auto& p : a.problems) detail += "; " + p;
      for (const auto& p : a.expected) detail += "; " + p;
      const Status s = !a.problems.empty() ? Status::violation : !a.expected.empty() ? Status::expected : Status::confirmed;
      rep.add("table1", e.id + " " + e.label(), s, detail);
    }
  return rep;
}

/// Every summand of every instance is a Table 1 module of the same group and
/// the total real dimension is within max(ell computed, table value).
inline VerifyReport verify_summand_closure(const Atlas& atlas, const std::vector<AtlasReducibleRow>& rows,
                                           int max_rank = 8) {
  VerifyReport rep;
  for (const auto& row : rows)
    for (const GroupRef& g : series_instances(row.range.series, max_rank)) {
      if (!row.range.admits(g)) continue;
      for (const auto& inst : instantiate(row, g)) {
        std::vector<std::string> problems;
        for (const auto& s : inst.summands) {
          if (!locally_isomorphic(s.type, inst.type)) {
            problems.push_back("summand " + s.notation + " lives on " + s.type.name());
            continue;
          }
          const Weight w = convert_weight(s.type, inst.type, s.hw);
          if (!atlas.find_table1(inst.type, w)) problems.push_back("summand " + s.notation + " not in table 1");
        }
        const long bound = atlas.ell_bounds(g).select(BoundChoice::max);
        if (inst.total_dim_r > bound)
          problems.push_back("total " + str(inst.total_dim_r) + " exceeds " + std::to_string(bound));
        std::string detail = "total_dim_r=" + str(inst.total_dim_r) + " bound=" + std::to_string(bound);
        for (const auto& p : problems) detail += "; " + p;
        rep.add("table2", inst.id + " " + inst.label(), problems.empty() ? Status::confirmed : Status::violation,
                detail);
      }
    }
  return rep;
}

inline VerifyReport verify_summand_closure(const Atlas& atlas, int max_rank = 8) {
  return verify_summand_closure(atlas, atlas.table2, max_rank);
}

inline std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_rank(f, r)) out.push_back({f, r});
  return out;
}

/// Each enumerated pair's space is matched against the rows, raw tag first,
/// then its canonical form.
inline VerifyReport verify_table3(const Atlas& atlas, int max_rank = 8) {
  VerifyReport rep;
  auto is_expected = [&](const SpaceTag& tag) {
    for (const auto& j : atlas.table3_expected)
      if (j.at("kind").get<std::string>() == kind_name(tag.kind) && j.value("n", -1L) == tag.n &&
          j.value("p", -1L) == tag.p)
        return std::optional<std::string>(j.value("reason", ""));
    return std::optional<std::string>();
  };
  auto lookup = [&](const SpaceTag& tag) -> const SpaceRow* {
    for (const auto& r : atlas.table3)
      if (row_matches(r, tag)) return &r;
    return nullptr;
  };
  for (SimpleType t : all_types(max_rank))
    for (const auto& p : enumerate_inner_symmetric_pairs(t)) {
      const std::string subject = t.name() + " node " + std::to_string(p.node) + " " + to_string(p.space_tag);
      const SpaceRow* row = lookup(p.space_tag);
      std::string via = "raw";
      if (!row) {
        row = lookup(canonicalize(p.space_tag));
        via = "canonical " + to_string(canonicalize(p.space_tag));
      }
      if (!row) {
        rep.add("table3", subject, Status::violation, "no row matches");
        continue;
      }
      const SpaceTag& matched = via == "raw" ? p.space_tag : canonicalize(p.space_tag);
      const long tab = Formula(row->ell).eval({{"n", matched.n}, {"p", matched.p}});
      const std::string detail =
          "row " + row->id + " (" + via + ") ell=" + std::to_string(tab) + " pair ell=" + std::to_string(p.ell);
      if (tab == p.ell) rep.add("table3", subject, Status::confirmed, detail);
      else if (auto why = is_expected(p.space_tag)) rep.add("table3", subject, Status::expected, detail + "; " + *why);
      else rep.add("table3", subject, Status::violation, detail);
    }
  return rep;
}

inline VerifyReport verify_table4(const Atlas& atlas) {
  VerifyReport rep;
  auto expected_reason = [&](const GroupRef& g) -> std::optional<std::string> {
    for (const auto& j : atlas.table4_expected)
      if (j.at("group").get<std::string>() == g.series && (!j.contains("n") || j.at("n").get<long>() == g.n))
        return j.value("reason", "");
    return std::nullopt;
  };
  for (const auto& row : atlas.table4) {
    std::vector<GroupRef> groups;
    if (is_exceptional_series(row.range.series)) {
      groups.push_back({row.range.series, 0});
    } else {
      auto it = atlas.table4_check_ranges.find(row.range.series);
      if (it == atlas.table4_check_ranges.end()) continue;
      for (long n = it->second.first; n <= it->second.second; ++n) groups.push_back({row.range.series, n});
    }
    for (const GroupRef& g : groups) {
      if (!row.range.admits(g) || !realize(g)) continue;
      const long tab = Formula(row.ell).eval(g.bindings());
      const EllGroupReport r = ell_group(*realize(g), tab);
      const std::string detail = "type=" + r.ambient.name() + " computed=" + std::to_string(r.computed) +
                                 " table=" + std::to_string(tab) + " witness=" + to_string(r.argmax_pair.space_tag);
      if (r.agrees) rep.add("table4", g.name(), Status::confirmed, detail);
      else if (auto why = expected_reason(g)) rep.add("table4", g.name(), Status::expected, detail + "; " + *why);
      else rep.add("table4", g.name(), Status::violation, detail);
    }
  }
  return rep;
}

/// c(rho) from table data minus the fixture c(rho-hat) must be 3; the fixture's
/// symmetric space must have isotropy module of the same real dimension.
inline VerifyReport verify_quaternionic_gap(const Atlas& atlas) {
  VerifyReport rep;
  for (const auto& f : atlas.gap_fixtures) {
    const std::string subject = f.group.name() + " " + f.row;
    if (f.skip) {
      rep.skipped.push_back(subject + ": " + *f.skip);
      continue;
    }
    if (!f.c_hat) {
      rep.skipped.push_back(subject + ": unverifiable, no reference value for c(rho-hat)");
      continue;
    }
    std::optional<AtlasIrrep> e;
    for (const auto& cand : atlas.table1_entries(f.group))
      if (cand.id == f.row) e = cand;
    if (!e) {
      rep.add("quaternionic_gap", subject, Status::violation, "row not found in table 1");
      continue;
    }
    const long c = cohomogeneity(*e);
    std::vector<std::string> problems;
    if (c - *f.c_hat != 3) problems.push_back("c(rho) - c(rho-hat) = " + std::to_string(c - *f.c_hat));
    const IrrepInfo info = irrep_info(build_root_datum(e->type), e->hw);
    if (f.cross_type) {
      bool found = false;
      for (const auto& p : enumerate_inner_symmetric_pairs(parse_type(*f.cross_type)))
        if (to_string(p.space_tag) == *f.cross_space) {
          found = true;
          if (BigInt(p.dim_gk) != info.dim_r)
            problems.push_back("dim " + *f.cross_space + " = " + std::to_string(p.dim_gk) + " != dim_r " +
                               str(info.dim_r));
        }
      if (!found) problems.push_back("space " + *f.cross_space + " not enumerated");
    }
    std::string detail = "c(rho)=" + std::to_string(c) + " c(rho-hat)=" + std::to_string(*f.c_hat) +
                         " [fixture: " + f.source + "]";
    for (const auto& p : problems) detail += "; " + p;
    rep.add("quaternionic_gap", subject, problems.empty() ? Status::confirmed : Status::violation, detail);
  }
  return rep;
}

inline VerifyReport verify_all(const Atlas& atlas, int max_rank = 8) {
  VerifyReport rep = verify_table1(atlas, max_rank);
  rep.merge(verify_summand_closure(atlas, max_rank));
  rep.merge(verify_table3(atlas, max_rank));
  rep.merge(verify_table4(atlas));
  rep.merge(verify_quaternionic_gap(atlas));
  return rep;
}

}  // namespace liebound
