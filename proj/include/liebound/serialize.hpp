// JSON and TSV renderings of the library's records.  Field names are part of
// the documented output schema (docs/schema.md); bump kSchemaVersion on any
// incompatible change.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "liebound/atlas.hpp"
#include "liebound/screen_pipeline.hpp"

namespace liebound {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

/// Big integers go out as JSON numbers when they fit in 64 bits, else as strings.
inline Json big_to_json(const BigInt& b) {
  if (b >= std::numeric_limits<long long>::min() && b <= std::numeric_limits<long long>::max())
    return static_cast<long long>(b);
  return b.str();
}

inline std::string labels_to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

/// "1,0,2" -> {1,0,2}; length must equal rank.
inline Weight parse_labels(const std::string& text, int rank) {
  Weight w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      fail("cannot parse label '" + tok + "'");
    }
    if (used != tok.size()) fail("cannot parse label '" + tok + "'");
    w.push_back(v);
  }
  if (static_cast<int>(w.size()) != rank)
    fail("expected " + std::to_string(rank) + " comma-separated labels, got '" + text + "'");
  return w;
}

inline Json to_json(const SimpleType& t) { return t.name(); }

inline Json to_json(const RootDatum& rd) {
  return {{"simple_type", rd.type.name()},
          {"rank", rd.rank()},
          {"cartan", rd.cartan},
          {"symmetrizers", rd.symmetrizers},
          {"positive_roots", rd.positive_roots},
          {"highest_root_marks", rd.highest_root_marks},
          {"weyl_vector_labels", rd.weyl_vector_labels},
          {"dimension", group_dimension(rd)}};
}

inline Json to_json(const IrrepInfo& r) {
  return {{"highest", r.highest},
          {"dim_c", big_to_json(r.dim_c)},
          {"fs_type", to_string(r.fs_type)},
          {"dim_r", big_to_json(r.dim_r)}};
}

inline Json to_json(const KernelDescriptor& k) {
  return {{"order", k.order}, {"cyclic", k.cyclic}, {"generators", k.generators},
          {"invariant_factors", k.invariant_factors}, {"name", to_string(k)}};
}

inline Json to_json(const WeightSystem& ws) {
  Json entries = Json::array();
  for (const auto& [mu, m] : ws.entries) entries.push_back({{"weight", mu}, {"multiplicity", m}});
  return {{"highest", ws.highest}, {"total", ws.total()}, {"entries", entries}};
}

inline Json to_json(const SpaceTag& t) { return to_string(t); }

inline Json to_json(const SymmetricPair& p) {
  Json ks = Json::array();
  for (const auto& k : p.k_semisimple) ks.push_back(k.name());
  return {{"ambient", p.ambient.name()},   {"node", p.node},
          {"mark", p.mark},                {"k_semisimple", ks},
          {"k_torus_dim", p.k_torus_dim},  {"dim_k", p.dim_k},
          {"dim_gk", p.dim_gk},            {"space_tag", to_string(p.space_tag)},
          {"canonical_tag", to_string(canonicalize(p.space_tag))},
          {"ell", p.ell}};
}

inline Json to_json(const EllGroupReport& r) {
  return {{"ambient", r.ambient.name()},
          {"computed", r.computed},
          {"table4", r.table4 ? Json(*r.table4) : Json(nullptr)},
          {"agrees", r.agrees},
          {"argmax_pair", to_json(r.argmax_pair)}};
}

inline Json to_json(const NiceResult& n) {
  return {{"pass", n.pass},
          {"witness", n.witness ? to_json(*n.witness) : Json(nullptr)},
          {"twist", n.twist},
          {"fixed_r", n.fixed_r},
          {"codim_r", n.codim_r},
          {"allowed", n.allowed}};
}

inline Json to_json(const CircleResult& c) {
  return {{"pass", c.pass}, {"f_max", c.f_max}, {"f_max_exact", c.f_max_exact},
          {"f_required", c.f_required}, {"circle_only", c.circle_only}};
}

inline Json to_json(const ScreenVerdict& v) {
  return {{"rep", to_json(v.rep)},
          {"bound", v.bound},
          {"dim_pass", v.dim_pass},
          {"involution_pass", v.nice.pass},
          {"involution", to_json(v.nice)},
          {"circle_pass", v.circle.pass},
          {"circle", to_json(v.circle)},
          {"overall", v.overall},
          {"in_table1", v.in_table1()},
          {"table1_row", v.table1_id ? Json(*v.table1_id) : Json(nullptr)},
          {"manual_exclusion", v.manual_exclusion ? Json(*v.manual_exclusion) : Json(nullptr)},
          {"notes", v.notes}};
}

inline Json to_json(const AtlasIrrep& e) {
  return {{"row", e.id},          {"group", e.group.name()}, {"type", e.type.name()},
          {"hw", e.hw},           {"notation", e.notation},  {"field", std::string(1, e.field)},
          {"dim", e.dim},         {"kernel_order", e.kernel_order},
          {"property", e.property}, {"pig", e.pig},          {"pig_dim", e.pig_dim}};
}

inline Json to_json(const Finding& f) {
  return {{"table", f.table}, {"subject", f.subject}, {"status", to_string(f.status)}, {"detail", f.detail}};
}

inline Json to_json(const VerifyReport& r) {
  Json out = {{"counts",
               {{"confirmed", r.count(Status::confirmed)},
                {"expected-discrepancy", r.count(Status::expected)},
                {"violation", r.count(Status::violation)}}},
              {"skipped", r.skipped}};
  for (Status s : {Status::confirmed, Status::expected, Status::violation}) {
    Json arr = Json::array();
    for (const auto& f : r.with(s)) arr.push_back(to_json(f));
    out[to_string(s)] = arr;
  }
  return out;
}

/// Envelope carried by every JSON document the CLI emits.
inline Json envelope(const std::string& command, Json result) {
  return {{"schema_version", kSchemaVersion}, {"tool", "liebound"}, {"version", kVersion},
          {"command", command}, {"result", std::move(result)}};
}

/// Tab-separated rows, cells padded to column width so the columns line up.
class Table {
public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    std::string out;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i];
        if (i + 1 < r.size()) out += std::string(width[i] - r[i].size(), ' ') + '\t';
      }
      out += '\n';
    }
    return out;
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace liebound
