#include "tiltlab/a4.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tiltlab/bgp.hpp"
#include "tiltlab/json_io.hpp"
#include "tiltlab/tilting.hpp"

namespace tiltlab {

namespace {

using LabelSet = std::set<std::string>;

std::string join(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

LabelSet label_set(const IndecTable& table, const TiltingModule& t) {
  LabelSet out;
  for (int id : t.ids) out.insert(table.entry(id).label);
  return out;
}

using Edge = std::pair<LabelSet, LabelSet>;

Edge undirected(LabelSet a, LabelSet b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

A4Fixture parse_a4_fixture(const nlohmann::json& j) {
  A4Fixture f;
  f.quiver = quiver_from_json(j.at("quiver"));
  f.reflected = quiver_from_json(j.at("reflected"));
  f.source = j.at("source").get<int>();
  for (const auto& pair : j.at("indec_reflection")) {
    f.indec_reflection.push_back({pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
  }
  f.rejected_at_source = j.at("rejected_at_source").get<std::string>();
  for (const char* key : {"top", "bottom"}) {
    A4Fixture::Diagram& d = (std::string(key) == "top") ? f.top : f.bottom;
    for (const auto& n : j.at(key).at("nodes")) {
      A4Fixture::Node node;
      node.at = n.at("at").get<std::string>();
      node.summands = n.at("summands").get<std::vector<std::string>>();
      node.bold = n.at("bold").get<bool>();
      node.pi = n.at("pi").get<std::vector<std::string>>();
      d.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at(key).at("edges")) {
      d.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    }
  }
  return f;
}

std::vector<std::string> check_a4_poset(const A4Fixture& fixture, bool reflected_side) {
  const A4Fixture::Diagram& diagram = reflected_side ? fixture.bottom : fixture.top;
  const Quiver& q = reflected_side ? fixture.reflected : fixture.quiver;
  const char* side = reflected_side ? "reflected" : "source";
  std::vector<std::string> problems;

  const IndecTable table = IndecTable::build(q);
  const TiltingPoset poset = build_poset(table);

  std::set<LabelSet> computed_nodes, computed_bold;
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i) {
    computed_nodes.insert(label_set(table, poset.elements[i]));
  }
  for (int i : with_summand(poset, table.simple_id(fixture.source))) {
    computed_bold.insert(label_set(table, poset.elements[i]));
  }

  std::set<LabelSet> expected_nodes, expected_bold;
  std::map<std::string, LabelSet> by_position;
  for (const auto& node : diagram.nodes) {
    LabelSet s(node.summands.begin(), node.summands.end());
    expected_nodes.insert(s);
    if (node.bold) expected_bold.insert(s);
    by_position[node.at] = std::move(s);
  }

  for (const auto& n : expected_nodes) {
    if (!computed_nodes.count(n)) {
      problems.push_back(std::string(side) + " poset: expected node {" + join(n) + "} not computed");
    }
  }
  for (const auto& n : computed_nodes) {
    if (!expected_nodes.count(n)) {
      problems.push_back(std::string(side) + " poset: extra computed node {" + join(n) + "}");
    }
  }
  if (computed_bold != expected_bold) {
    problems.push_back(std::string(side) + " poset: marked-node sets differ");
  }

  std::set<Edge> computed_edges, expected_edges;
  for (const auto& [a, b] : poset.hasse_edges) {
    computed_edges.insert(undirected(label_set(table, poset.elements[a]),
                                     label_set(table, poset.elements[b])));
  }
  for (const auto& [a, b] : diagram.edges) {
    if (!by_position.count(a) || !by_position.count(b)) {
      problems.push_back(std::string(side) + " poset: edge references unknown position " + a +
                         " or " + b);
      continue;
    }
    expected_edges.insert(undirected(by_position[a], by_position[b]));
  }
  for (const auto& e : expected_edges) {
    if (!computed_edges.count(e)) {
      problems.push_back(std::string(side) + " poset: expected edge {" + join(e.first) + "} - {" +
                         join(e.second) + "} not computed");
    }
  }
  for (const auto& e : computed_edges) {
    if (!expected_edges.count(e)) {
      problems.push_back(std::string(side) + " poset: extra computed edge {" + join(e.first) +
                         "} - {" + join(e.second) + "}");
    }
  }
  return problems;
}

std::vector<std::string> check_a4_pi_maps(const A4Fixture& fixture, bool reflected_side) {
  const A4Fixture::Diagram& diagram = reflected_side ? fixture.bottom : fixture.top;
  const Quiver& q = reflected_side ? fixture.reflected : fixture.quiver;
  const char* side = reflected_side ? "reflected" : "source";
  std::vector<std::string> problems;

  const IndecTable table = IndecTable::build(q);
  const IndecTable table_sub = IndecTable::build(delete_vertex(q, fixture.source));

  for (const auto& node : diagram.nodes) {
    std::vector<int> ids;
    bool found = true;
    for (const auto& label : node.summands) {
      const auto id = table.find_by_label(label);
      if (!id) {
        problems.push_back(std::string(side) + " pi: unknown summand label " + label);
        found = false;
        break;
      }
      ids.push_back(*id);
    }
    if (!found) continue;
    std::sort(ids.begin(), ids.end());
    const TiltingModule t{ids};
    const TiltingModule image = reflected_side
                                    ? pi_sink(table, t, fixture.source, table_sub)
                                    : pi_source(table, t, fixture.source, table_sub);
    const LabelSet computed = label_set(table_sub, image);
    const LabelSet expected(node.pi.begin(), node.pi.end());
    if (computed != expected) {
      problems.push_back(std::string(side) + " pi at " + node.at + ": computed {" +
                         join(computed) + "}, expected {" + join(expected) + "}");
    }
  }
  return problems;
}

std::vector<std::string> check_a4_indec_reflection(const A4Fixture& fixture) {
  std::vector<std::string> problems;
  const IndecTable table_q = IndecTable::build(fixture.quiver);
  const IndecTable table_qp = IndecTable::build(fixture.reflected);

  // Each fixture pair a <-> b is an involution on labels: a representation
  // labeled a on the source side maps to the one labeled b on the reflected
  // side and vice versa.
  std::map<std::string, std::string> expected;
  for (const auto& [a, b] : fixture.indec_reflection) {
    expected[a] = b;
    expected[b] = a;
  }

  for (int id = 0; id < table_q.size(); ++id) {
    const std::string& label = table_q.entry(id).label;
    if (label == fixture.rejected_at_source) {
      try {
        reflect_source(table_q.entry(id).rep, fixture.source);
        problems.push_back("reflection: " + label + " should be rejected, was not");
      } catch (const HasSimpleSummandAtX&) {
      }
      continue;
    }
    std::string computed;
    try {
      const Representation image = reflect_source(table_q.entry(id).rep, fixture.source);
      const auto target = table_qp.find_by_dims(image.dims());
      computed = target ? table_qp.entry(*target).label : "<missing>";
    } catch (const HasSimpleSummandAtX&) {
      computed = "<rejected>";
    }
    const auto it = expected.find(label);
    if (it == expected.end()) {
      problems.push_back("reflection: no expected image for " + label);
    } else if (it->second != computed) {
      problems.push_back("reflection: " + label + " -> " + computed + ", expected " + it->second);
    }
  }

  // And back through the sink reflection on the other side.
  for (int id = 0; id < table_qp.size(); ++id) {
    const std::string& label = table_qp.entry(id).label;
    if (label == fixture.rejected_at_source) {
      try {
        reflect_sink(table_qp.entry(id).rep, fixture.source);
        problems.push_back("reflection back: " + label + " should be rejected, was not");
      } catch (const HasSimpleSummandAtX&) {
      }
      continue;
    }
    const Representation back = reflect_sink(table_qp.entry(id).rep, fixture.source);
    const auto target = table_q.find_by_dims(back.dims());
    const std::string computed = target ? table_q.entry(*target).label : "<missing>";
    const auto it = expected.find(label);
    if (it == expected.end()) {
      problems.push_back("reflection back: no expected image for " + label);
    } else if (it->second != computed) {
      problems.push_back("reflection back: " + label + " -> " + computed + ", expected " +
                         it->second);
    }
  }
  return problems;
}

std::vector<std::string> run_a4_check(const A4Fixture& fixture) {
  std::vector<std::string> problems;
  for (bool side : {false, true}) {
    auto p = check_a4_poset(fixture, side);
    problems.insert(problems.end(), p.begin(), p.end());
    p = check_a4_pi_maps(fixture, side);
    problems.insert(problems.end(), p.begin(), p.end());
  }
  const auto p = check_a4_indec_reflection(fixture);
  problems.insert(problems.end(), p.begin(), p.end());
  return problems;
}

}  // namespace tiltlab
