// liebound: command-line access to root data, representations, symmetric
// pairs, the boundary screens and the table verification harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "liebound/atlas.hpp"
#include "liebound/screen_pipeline.hpp"
#include "liebound/serialize.hpp"

using namespace liebound;

namespace {

constexpr const char* kNodeHelp = R"(Weights are comma-separated Dynkin labels in Bourbaki order:
  A_n  1 - 2 - ... - n
  B_n  1 - 2 - ... - (n-1) => n        (n short)
  C_n  1 - 2 - ... - (n-1) <= n        (n long)
  D_n  1 - 2 - ... - (n-2) < n-1, n    (fork at n-2)
  E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
  F4   1 - 2 => 3 - 4                  (3, 4 short)
  G2   1 <= 2                          (1 short)
Example: liebound rep B4 0,0,0,1
)";

struct Options {
  std::string format = "json";
  std::string data_dir = default_data_dir();
};

int emit(const Options& opt, const std::string& command, const Json& result, const std::string& tsv) {
  if (opt.format == "json") std::cout << envelope(command, result).dump(2) << "\n";
  else std::cout << tsv;
  return 0;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_roots(const Options& opt, const std::string& type) {
  const RootDatum rd = build_root_datum(parse_type(type));
  Table t({"index", "root", "height", "labels"});
  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k)
    t.add({std::to_string(k), labels_to_string(rd.positive_roots[k]), std::to_string(height(rd.positive_roots[k])),
           labels_to_string(rd.root_to_labels(rd.positive_roots[k]))});
  return emit(opt, "roots", to_json(rd), t.render());
}

int cmd_rep(const Options& opt, const std::string& type, const std::string& labels, bool weights) {
  const RootDatum rd = build_root_datum(parse_type(type));
  const Weight hw = parse_labels(labels, rd.rank());
  const IrrepInfo info = irrep_info(rd, hw);
  const KernelDescriptor ker = central_kernel(rd, hw);
  Json j = to_json(info);
  j["type"] = rd.type.name();
  j["kernel"] = to_json(ker);
  Table t({"type", "highest", "dim_c", "fs_type", "dim_r", "kernel"});
  t.add({rd.type.name(), labels_to_string(hw), info.dim_c.str(), to_string(info.fs_type), info.dim_r.str(),
         to_string(ker)});
  std::string tsv = t.render();
  if (weights) {
    const WeightSystem ws = weight_system(rd, hw);
    j["weight_system"] = to_json(ws);
    Table w({"weight", "multiplicity"});
    for (const auto& [mu, m] : ws.entries) w.add({labels_to_string(mu), std::to_string(m)});
    tsv += "\n" + w.render();
  }
  return emit(opt, "rep", j, tsv);
}

int cmd_enumerate(const Options& opt, const std::string& type, long bound) {
  if (bound < 0) fail("bound must be non-negative");
  const RootDatum rd = build_root_datum(parse_type(type));
  Json arr = Json::array();
  Table t({"highest", "dim_c", "fs_type", "dim_r"});
  for (const auto& r : enumerate_irreps_below(rd, bound)) {
    arr.push_back(to_json(r));
    t.add({labels_to_string(r.highest), r.dim_c.str(), to_string(r.fs_type), r.dim_r.str()});
  }
  return emit(opt, "enumerate", {{"type", rd.type.name()}, {"bound", bound}, {"irreps", arr}}, t.render());
}

int cmd_pairs(const Options& opt, const std::string& type) {
  const SimpleType st = parse_type(type);
  Json arr = Json::array();
  Table t({"node", "mark", "K", "dim_k", "dim_gk", "space", "ell", "ell*(4+dim)"});
  for (const auto& p : enumerate_inner_symmetric_pairs(st)) {
    arr.push_back(to_json(p));
    std::string k;
    for (const auto& c : p.k_semisimple) k += (k.empty() ? "" : "x") + c.name();
    if (p.k_torus_dim) k += k.empty() ? "T1" : "xT1";
    t.add({std::to_string(p.node), std::to_string(p.mark), k, std::to_string(p.dim_k), std::to_string(p.dim_gk),
           to_string(p.space_tag), std::to_string(p.ell), std::to_string(p.ell * (4 + p.dim_gk))});
  }
  return emit(opt, "pairs", {{"type", st.name()}, {"pairs", arr}}, t.render());
}

int cmd_ell(const Options& opt, const Atlas& atlas, const std::optional<std::string>& type, bool all, int max_rank) {
  std::vector<SimpleType> types;
  if (all) types = all_types(max_rank);
  else if (type) types.push_back(parse_type(*type));
  else fail("ell needs a type or --all");
  Json arr = Json::array();
  Table t({"type", "computed", "table4", "agrees", "witness"});
  for (SimpleType st : types) {
    const EllGroupReport r = ell_group(st, atlas.table4_value(st));
    arr.push_back(to_json(r));
    t.add({st.name(), std::to_string(r.computed), r.table4 ? std::to_string(*r.table4) : "-", yn(r.agrees),
           to_string(r.argmax_pair.space_tag)});
  }
  const Json result = all ? Json{{"max_rank", max_rank}, {"reports", arr}} : arr.at(0);
  return emit(opt, "ell", result, t.render());
}

int cmd_screen(const Options& opt, const Atlas& atlas, const std::string& type, const std::string& bound) {
  const SimpleType st = parse_type(type);
  const auto verdicts = screen_pipeline(atlas, st, parse_bound_choice(bound));
  const bool consistent = pipeline_consistent(verdicts);
  Json arr = Json::array();
  Json survivors = Json::array();
  Table t({"highest", "dim_r", "type", "dim", "involution", "circle", "overall", "table1", "note"});
  for (const auto& v : verdicts) {
    arr.push_back(to_json(v));
    if (v.overall) survivors.push_back(v.rep.highest);
    t.add({labels_to_string(v.rep.highest), v.rep.dim_r.str(), to_string(v.rep.fs_type), yn(v.dim_pass),
           yn(v.nice.pass) + " " + std::to_string(v.nice.codim_r) + "/" + std::to_string(v.nice.allowed),
           yn(v.circle.pass) + " " + std::to_string(v.circle.f_required) + "/" + std::to_string(v.circle.f_max),
           yn(v.overall), v.table1_id.value_or("-"), v.notes.empty() ? "" : v.notes.front()});
  }
  if (opt.format == "jsonl") {
    std::cout << Json{{"schema_version", kSchemaVersion}, {"tool", "liebound"}, {"version", kVersion},
                      {"command", "screen"}, {"type", st.name()}, {"bound_choice", bound}}
                     .dump()
              << "\n";
    for (const auto& v : arr) std::cout << v.dump() << "\n";
  } else {
    emit(opt, "screen",
         {{"type", st.name()}, {"bound_choice", bound}, {"verdicts", arr}, {"survivors", survivors},
          {"consistent", consistent}},
         t.render());
  }
  return consistent ? 0 : 1;
}

VerifyReport run_verify(const Atlas& atlas, const std::string& table, int max_rank) {
  if (table == "1") return verify_table1(atlas, max_rank);
  if (table == "2") return verify_summand_closure(atlas, max_rank);
  if (table == "3") return verify_table3(atlas, max_rank);
  if (table == "4") return verify_table4(atlas);
  if (table == "gap") return verify_quaternionic_gap(atlas);
  if (table == "all") return verify_all(atlas, max_rank);
  fail("unknown table '" + table + "' (expected 1, 2, 3, 4, gap or all)");
}

std::string report_tsv(const VerifyReport& r) {
  Table t({"table", "status", "subject", "detail"});
  for (const auto& f : r.findings) t.add({f.table, to_string(f.status), f.subject, f.detail});
  std::string s = t.render();
  for (const auto& k : r.skipped) s += "skipped\t" + k + "\n";
  return s;
}

int cmd_verify(const Options& opt, const Atlas& atlas, const std::string& table, int max_rank) {
  const VerifyReport r = run_verify(atlas, table, max_rank);
  Json j = to_json(r);
  j["table"] = table;
  j["max_rank"] = max_rank;
  emit(opt, "verify", j, report_tsv(r));
  return r.ok() ? 0 : 1;
}

int cmd_report(const Options& opt, const Atlas& atlas, int max_rank) {
  const VerifyReport r = verify_all(atlas, max_rank);
  Json screens = Json::array();
  Table t({"type", "ell_computed", "table4", "candidates", "survivors", "in_table1", "consistent"});
  bool all_consistent = true;
  for (SimpleType st : all_types(max_rank)) {
    const EllBounds b = atlas.ell_bounds(st);
    const auto vs = screen_pipeline(atlas, st, BoundChoice::max);
    long surv = 0, members = 0;
    Json survivors = Json::array();
    for (const auto& v : vs) {
      if (v.overall) {
        ++surv;
        survivors.push_back(v.rep.highest);
      }
      if (v.in_table1()) ++members;
    }
    const bool ok = pipeline_consistent(vs);
    all_consistent = all_consistent && ok;
    screens.push_back({{"type", st.name()}, {"ell_computed", b.computed},
                       {"table4", b.table4 ? Json(*b.table4) : Json(nullptr)}, {"candidates", vs.size()},
                       {"survivors", survivors}, {"table1_members", members}, {"consistent", ok}});
    t.add({st.name(), std::to_string(b.computed), b.table4 ? std::to_string(*b.table4) : "-",
           std::to_string(vs.size()), std::to_string(surv), std::to_string(members), yn(ok)});
  }
  Json j = to_json(r);
  j["max_rank"] = max_rank;
  j["screens"] = screens;
  std::string tsv = t.render() + "\n";
  tsv += "confirmed\t" + std::to_string(r.count(Status::confirmed)) + "\n";
  tsv += "expected-discrepancy\t" + std::to_string(r.count(Status::expected)) + "\n";
  tsv += "violation\t" + std::to_string(r.count(Status::violation)) + "\n";
  for (const auto& f : r.with(Status::expected)) tsv += "expected\t" + f.table + "\t" + f.subject + "\n";
  for (const auto& f : r.with(Status::violation)) tsv += "violation\t" + f.table + "\t" + f.subject + "\n";
  emit(opt, "report", j, tsv);
  return r.ok() && all_consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-theoretic invariants and boundary screens for representations of compact simple groups",
               "liebound"};
  app.footer(kNodeHelp);
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "tsv", "jsonl"}));
  app.add_option("--data", opt.data_dir, "Directory holding the table data files");

  std::string type, labels, bound_choice = "max", table = "all";
  std::optional<std::string> ell_type;
  long bound = 0;
  bool weights = false, all = false;
  int max_rank = 8;

  auto* roots = app.add_subcommand("roots", "Root datum of a simple type");
  roots->add_option("type", type, "Simple type, e.g. G2")->required();

  auto* rep = app.add_subcommand("rep", "Dimension, Frobenius-Schur type and kernel of an irreducible module");
  rep->add_option("type", type)->required();
  rep->add_option("labels", labels, "Comma-separated Dynkin labels")->required();
  rep->add_flag("--weights", weights, "Include the full weight system");

  auto* en = app.add_subcommand("enumerate", "Irreducible modules of real dimension at most a bound");
  en->add_option("type", type)->required();
  en->add_option("--bound", bound, "Real dimension bound")->required()->check(CLI::NonNegativeNumber);

  auto* pairs = app.add_subcommand("pairs", "Inner symmetric pairs of maximal rank");
  pairs->add_option("type", type)->required();

  auto* ell = app.add_subcommand("ell", "The invariant ell_G");
  ell->add_option("type", ell_type);
  ell->add_flag("--all", all, "All types up to --max-rank");
  ell->add_option("--max-rank", max_rank)->check(CLI::Range(1, 12));

  auto* screen = app.add_subcommand("screen", "Run the boundary screens on all candidates of a type");
  screen->add_option("type", type)->required();
  screen->add_option("--bound", bound_choice, "Which ell_G bound to use")
      ->check(CLI::IsMember({"computed", "table4", "max"}));

  auto* verify = app.add_subcommand("verify", "Cross-check the reference tables");
  verify->add_option("--table", table, "1, 2, 3, 4, gap or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "gap", "all"}));
  verify->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));

  auto* report = app.add_subcommand("report", "Verification summary with screens over all types");
  report->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(opt, type);
    if (*rep) return cmd_rep(opt, type, labels, weights);
    if (*en) return cmd_enumerate(opt, type, bound);
    if (*pairs) return cmd_pairs(opt, type);
    const Atlas atlas = Atlas::load(opt.data_dir);
    if (*ell) return cmd_ell(opt, atlas, ell_type, all, max_rank);
    if (*screen) return cmd_screen(opt, atlas, type, bound_choice);
    if (*verify) return cmd_verify(opt, atlas, table, max_rank);
    if (*report) return cmd_report(opt, atlas, max_rank);
  } catch (const std::invalid_argument& e) {
    std::cerr << "liebound: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "liebound: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
