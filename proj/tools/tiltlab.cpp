// tiltlab: exact tilting-poset engine for representation-finite quivers.
//
// Subcommands:
//   enumerate   print indecomposables and tilting modules of a quiver
//   hasse       emit the tilting poset Hasse diagram as DOT
//   verify      run the flip-flop verification for one (quiver, source)
//   example-a4  replay the A4 reference example against embedded data
//   sweep       verify every (orientation, source) pair of a Dynkin diagram
//
// Exit codes: 0 success, 1 mismatch or input parse error, 2 precondition
// failure (not representation-finite, not a source, guard exceeded).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tiltlab/a4.hpp"
#include "tiltlab/dot.hpp"
#include "tiltlab/json_io.hpp"
#include "tiltlab/tilting.hpp"
#include "tiltlab/verify.hpp"

namespace {

using namespace tiltlab;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitPrecondition = 2;

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return quiver_from_json(j);
}

std::string summand_labels(const IndecTable& table, const TiltingModule& t) {
  std::vector<std::string> labels;
  for (int id : t.ids) labels.push_back(table.entry(id).label);
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

std::string dims_string(const Quiver& q, const DimVector& d) {
  std::string out = "(";
  for (int vi = 0; vi < q.num_vertices(); ++vi) {
    if (vi) out += ",";
    out += std::to_string(d[vi]);
  }
  return out + ")";
}

int cmd_enumerate(const std::string& path, bool as_json) {
  const Quiver q = load_quiver(path);
  if (!is_rep_finite(q)) {
    std::cerr << "error: quiver is not representation-finite\n";
    return kExitPrecondition;
  }
  const IndecTable table = IndecTable::build(q);
  const auto tilting = enumerate_tilting(table);

  if (as_json) {
    json out = table_to_json(table);
    json mods = json::array();
    for (const auto& t : tilting) {
      mods.push_back({{"ids", t.ids}, {"summands", summand_labels(table, t)}});
    }
    out["tilting"] = mods;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "quiver: " << quiver_to_json(q).dump() << "\n";
  std::cout << "indecomposables (" << table.size() << "):\n";
  for (int id = 0; id < table.size(); ++id) {
    std::cout << "  [" << table.entry(id).label << "] dims "
              << dims_string(q, table.entry(id).dims) << "\n";
  }
  std::cout << "tilting modules (" << tilting.size() << "):\n";
  for (const auto& t : tilting) {
    std::cout << "  {" << summand_labels(table, t) << "}\n";
  }
  return 0;
}

int cmd_hasse(const std::string& path, const std::string& dot_path, int mark_simple) {
  const Quiver q = load_quiver(path);
  if (!is_rep_finite(q)) {
    std::cerr << "error: quiver is not representation-finite\n";
    return kExitPrecondition;
  }
  const IndecTable table = IndecTable::build(q);
  const TiltingPoset poset = build_poset(table);

  std::vector<bool> bold(poset.elements.size(), false);
  if (mark_simple != 0) {
    if (!q.has_vertex(mark_simple)) {
      std::cerr << "error: --mark-simple " << mark_simple << " is not a vertex\n";
      return kExitPrecondition;
    }
    for (int i : with_summand(poset, table.simple_id(mark_simple))) bold[i] = true;
  }
  std::vector<DotNode> nodes;
  for (size_t i = 0; i < poset.elements.size(); ++i) {
    nodes.push_back({summand_labels(table, poset.elements[i]), bold[i]});
  }
  const std::string dot =
      hasse_dot(nodes, poset.hasse_edges, "quiver: " + quiver_to_json(q).dump());
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write " + dot_path);
    out << dot;
  }
  return 0;
}

int cmd_verify(const std::string& path, int source) {
  const Quiver q = load_quiver(path);
  FlipFlopReport report;
  try {
    report = verify_flipflop(q, source);
  } catch (const NotSource& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotRepFinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  std::cout << report_to_json(report).dump(2) << "\n";
  return report.all_pass() ? 0 : kExitMismatch;
}

int cmd_example_a4() {
  const A4Fixture fixture = parse_a4_fixture(json::parse(embedded_a4_fixture_json()));
  const auto problems = run_a4_check(fixture);
  if (problems.empty()) {
    std::cout << "A4 example reproduced exactly: both posets (14 nodes, 21 edges, "
                 "5 marked), both restriction maps, and the indecomposable "
                 "correspondence match the reference data.\n";
    return 0;
  }
  std::cout << "A4 example mismatch (" << problems.size() << " differences):\n";
  for (const auto& p : problems) std::cout << "  " << p << "\n";
  return kExitMismatch;
}

int cmd_sweep(const std::string& family, int rank) {
  DynkinType type;
  if (family == "A") {
    type.family = DynkinType::Family::A;
  } else if (family == "D") {
    type.family = DynkinType::Family::D;
  } else {
    type.family = DynkinType::Family::E;
  }
  type.rank = rank;

  std::vector<FlipFlopReport> reports;
  try {
    reports = sweep(type);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  bool all = true;
  for (const auto& r : reports) {
    std::cout << report_to_json(r).dump() << "\n";
    all = all && r.all_pass();
  }
  std::cerr << reports.size() << " instances, " << (all ? "all passed" : "FAILURES present")
            << "\n";
  return all ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tilting-poset engine for representation-finite quivers"};
  app.require_subcommand(1);

  std::string quiver_path, dot_path;
  bool as_json = false;
  int mark_simple = 0, source = 0, rank = 0;
  std::string family;

  auto* enumerate =
      app.add_subcommand("enumerate", "list indecomposables and tilting modules");
  enumerate->add_option("quiver", quiver_path, "quiver JSON file")->required();
  enumerate->add_flag("--json", as_json, "machine-readable output");

  auto* hasse = app.add_subcommand("hasse", "emit the tilting poset as DOT");
  hasse->add_option("quiver", quiver_path, "quiver JSON file")->required();
  hasse->add_option("--dot", dot_path, "output file (stdout when omitted)");
  hasse->add_option("--mark-simple", mark_simple,
                    "render tilting modules containing this simple in bold");

  auto* verify = app.add_subcommand("verify", "flip-flop verification for one source");
  verify->add_option("quiver", quiver_path, "quiver JSON file")->required();
  verify->add_option("--source", source, "source vertex to reflect at")->required();

  app.add_subcommand("example-a4", "replay the A4 example against embedded data");

  auto* sweep_cmd = app.add_subcommand("sweep", "verify all orientations of a diagram");
  sweep_cmd->add_option("--type", family, "diagram family: A or D")
      ->required()
      ->check(CLI::IsMember({"A", "D"}));
  sweep_cmd->add_option("--rank", rank, "diagram rank")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("enumerate")) return cmd_enumerate(quiver_path, as_json);
    if (app.got_subcommand("hasse")) return cmd_hasse(quiver_path, dot_path, mark_simple);
    if (app.got_subcommand("verify")) return cmd_verify(quiver_path, source);
    if (app.got_subcommand("example-a4")) return cmd_example_a4();
    if (app.got_subcommand("sweep")) return cmd_sweep(family, rank);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}
