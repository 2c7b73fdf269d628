#include "tiltlab/dot.hpp"

#include <sstream>

#include "tiltlab/errors.hpp"

namespace tiltlab {

std::string hasse_dot(const std::vector<DotNode>& nodes,
                      const std::vector<std::pair<int, int>>& edges,
                      const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "// " << comment << "\n";
  out << "digraph tilting {\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    out << "  t" << i << " [label=\"" << nodes[i].label << "\"";
    if (nodes[i].bold) out << ", style=bold";
    out << "];\n";
  }
  for (const auto& [a, b] : edges) {
    out << "  t" << a << " -> t" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

DotGraph parse_hasse_dot(const std::string& text) {
  DotGraph graph;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.rfind("t", 0) != 0) continue;

    const size_t arrow = line.find(" -> ");
    if (arrow != std::string::npos) {
      const int a = std::stoi(line.substr(1, arrow - 1));
      const size_t to = line.find('t', arrow);
      const int b = std::stoi(line.substr(to + 1, line.find(';') - to - 1));
      graph.edges.push_back({a, b});
      continue;
    }

    const size_t open = line.find("[label=\"");
    if (open == std::string::npos) throw Error("parse_hasse_dot: malformed node line");
    const size_t id = static_cast<size_t>(std::stoi(line.substr(1, open - 1)));
    const size_t begin = open + 8;
    const size_t end = line.find('"', begin);
    if (graph.nodes.size() <= id) graph.nodes.resize(id + 1);
    graph.nodes[id].label = line.substr(begin, end - begin);
    graph.nodes[id].bold = line.find("style=bold", end) != std::string::npos;
  }
  return graph;
}

}  // namespace tiltlab
