#include "tiltlab/json_io.hpp"

#include <string>

namespace tiltlab {

using nlohmann::json;

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.from, a.to});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  std::vector<Arrow> arrows;
  for (const auto& pair : j.at("arrows")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw BadArrow("arrow entries must be [source, target] pairs");
    }
    arrows.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return Quiver::validate(std::move(vertices), std::move(arrows));
}

json rep_to_json(const Representation& r) {
  const Quiver& q = r.quiver();
  json dims = json::object();
  for (int vi = 0; vi < q.num_vertices(); ++vi) {
    dims[std::to_string(q.vertices()[vi])] = r.dims()[vi];
  }
  json maps = json::array();
  for (const RatMatrix& m : r.maps()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
      rows.push_back(row);
    }
    maps.push_back(rows);
  }
  return {{"quiver", quiver_to_json(q)}, {"dims", dims}, {"maps", maps}};
}

Representation rep_from_json(const json& j) {
  const Quiver q = quiver_from_json(j.at("quiver"));
  DimVector dims(q.num_vertices(), 0);
  for (const auto& [key, value] : j.at("dims").items()) {
    dims[q.vertex_index(std::stoi(key))] = value.get<int>();
  }
  std::vector<RatMatrix> maps;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const int rows = dims[q.vertex_index(a.to)], cols = dims[q.vertex_index(a.from)];
    RatMatrix m = RatMatrix::Zero(rows, cols);
    const auto& rows_json = j.at("maps").at(ai);
    for (int i = 0; i < rows; ++i) {
      for (int c = 0; c < cols; ++c) {
        m(i, c) = rat_from_string(rows_json.at(i).at(c).get<std::string>());
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

json table_to_json(const IndecTable& table) {
  const Quiver& q = table.quiver();
  json indecs = json::array();
  for (int id = 0; id < table.size(); ++id) {
    const IndecEntry& e = table.entry(id);
    json dims = json::object();
    for (int vi = 0; vi < q.num_vertices(); ++vi) {
      dims[std::to_string(q.vertices()[vi])] = e.dims[vi];
    }
    indecs.push_back({{"id", id}, {"dims", dims}, {"label", e.label}});
  }
  return {{"quiver", quiver_to_json(q)}, {"indecomposables", indecs}};
}

json report_to_json(const FlipFlopReport& r) {
  return {
      {"quiver", quiver_to_json(r.quiver)},
      {"reflected", quiver_to_json(r.reflected)},
      {"source", r.source},
      {"sizes",
       {{"tq", r.size_tq},
        {"tq_prime", r.size_tq_prime},
        {"y", r.size_y},
        {"y_prime", r.size_y_prime},
        {"sub", r.size_sub}}},
      {"checks",
       {{"ffsource", r.ffsource},
        {"ffsink", r.ffsink},
        {"rho_iso", r.rho_iso},
        {"iota_iso", r.iota_iso},
        {"commute", r.commute},
        {"theorem", r.theorem}}},
      {"witnesses",
       {{"ffsource", r.witness_ffsource},
        {"ffsink", r.witness_ffsink},
        {"rho", r.witness_rho},
        {"theorem_plus", r.witness_theorem_plus},
        {"theorem_minus", r.witness_theorem_minus},
        {"posets", r.witness_posets}}},
      {"posets_isomorphic", r.posets_isomorphic},
      {"all_pass", r.all_pass()},
      {"failure", r.failure},
      {"elapsed_ms", r.elapsed_ms},
  };
}

}  // namespace tiltlab
