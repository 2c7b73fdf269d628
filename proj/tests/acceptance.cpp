// Acceptance suite: every release criterion, one pass/fail line each.
// All expectations are exact (integer / set equality); no tolerances apply
// anywhere because the engine is exact by construction.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tiltlab/a4.hpp"
#include "tiltlab/bgp.hpp"
#include "tiltlab/json_io.hpp"
#include "tiltlab/tilting.hpp"
#include "tiltlab/verify.hpp"

using namespace tiltlab;
using nlohmann::json;

namespace {

Quiver a4_q() { return Quiver::validate({1, 2, 3, 4}, {{1, 2}, {2, 3}, {4, 3}}); }

Quiver linear_a(int n) {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  for (int v = 1; v <= n; ++v) vertices.push_back(v);
  for (int v = 1; v < n; ++v) arrows.push_back({v, v + 1});
  return Quiver::validate(std::move(vertices), std::move(arrows));
}

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

A4Fixture fixture() {
  return parse_a4_fixture(json::parse(embedded_a4_fixture_json()));
}

// 1. Both tilting posets reproduce the reference diagrams exactly:
//    node sets, marked subsets, and Hasse edges as undirected graphs.
void criterion_reference_posets() {
  const A4Fixture f = fixture();
  for (bool side : {false, true}) {
    const auto problems = check_a4_poset(f, side);
    std::string all;
    for (const auto& p : problems) all += "\n    " + p;
    require(problems.empty(), "poset mismatches:" + all);
  }
  // Redundant hard counts, independent of the fixture file's content.
  const IndecTable table_q = IndecTable::build(f.quiver);
  const IndecTable table_qp = IndecTable::build(f.reflected);
  const TiltingPoset pq = build_poset(table_q);
  const TiltingPoset pqp = build_poset(table_qp);
  require(pq.elements.size() == 14 && pqp.elements.size() == 14, "expected 14 tilting modules");
  require(with_summand(pq, table_q.simple_id(4)).size() == 5, "expected 5 marked nodes");
  require(with_summand(pqp, table_qp.simple_id(4)).size() == 5, "expected 5 marked nodes");
  require(pqp.hasse_edges.size() == 21, "expected 21 Hasse edges on the reflected side");
}

// 2. The restriction maps match the reference values node for node.
void criterion_reference_pi_maps() {
  const A4Fixture f = fixture();
  for (bool side : {false, true}) {
    const auto problems = check_a4_pi_maps(f, side);
    std::string all;
    for (const auto& p : problems) all += "\n    " + p;
    require(problems.empty(), "pi-map mismatches:" + all);
  }
}

// 3. Reflection at 4 maps indecomposables by 11<->11, 12<->12, 13<->14,
//    22<->22, 23<->24, 33<->34 and rejects 44.
void criterion_indec_correspondence() {
  const auto problems = check_a4_indec_reflection(fixture());
  std::string all;
  for (const auto& p : problems) all += "\n    " + p;
  require(problems.empty(), "correspondence mismatches:" + all);

  const IndecTable table = IndecTable::build(a4_q());
  bool rejected = false;
  try {
    reflect_source(table.entry(*table.find_by_label("44")).rep, 4);
  } catch (const HasSimpleSummandAtX&) {
    rejected = true;
  }
  require(rejected, "44 must be rejected with HasSimpleSummandAtX");
}

// 4. The flip-flop verification passes all six checks on the running
//    instance, with the deleted-vertex poset being linear A_3.
void criterion_flipflop_a4_instance() {
  const FlipFlopReport r = verify_flipflop(a4_q(), 4);
  require(r.ffsource, "ffsource failed");
  require(r.ffsink, "ffsink failed");
  require(r.rho_iso, "rho_iso failed");
  require(r.iota_iso, "iota_iso failed");
  require(r.commute, "commute failed");
  require(r.theorem, "theorem failed");
  require(r.size_tq == 14 && r.size_tq_prime == 14, "|T_Q| sizes wrong");
  require(r.size_y == 5 && r.size_y_prime == 5 && r.size_sub == 5, "bold sizes wrong");
  require(delete_vertex(a4_q(), 4) == linear_a(3), "deleted quiver is not linear A_3");
}

// 5. Every (orientation, source) pair over A_2, A_3, A_4, D_4 verifies.
void criterion_flipflop_sweep() {
  int instances = 0;
  bool saw_running_instance = false;
  for (const DynkinType type : {DynkinType{DynkinType::Family::A, 2},
                                DynkinType{DynkinType::Family::A, 3},
                                DynkinType{DynkinType::Family::A, 4},
                                DynkinType{DynkinType::Family::D, 4}}) {
    for (const FlipFlopReport& r : sweep(type)) {
      ++instances;
      require(r.all_pass(), type.name() + " instance failed: " + r.failure);
      require(r.size_tq == r.size_tq_prime, "flip-flop must preserve cardinality");
      require(r.size_y == r.size_sub && r.size_y_prime == r.size_sub,
              "bold parts must match the deleted-vertex poset");
      if (r.quiver == a4_q() && r.source == 4) saw_running_instance = true;
    }
  }
  // Sources per orientation: A_2 gives 2 instances, A_3 gives 5, A_4 gives
  // 12, D_4 gives 13.
  require(instances == 2 + 5 + 12 + 13, "unexpected instance count");
  require(saw_running_instance, "A_4 sweep must contain the running (Q, 4) instance");
}

// 6. Functor lemma suite over the full corpus: adjunctions, full
//    faithfulness, perpendicular vanishing, open/closed subsets, retraction.
void criterion_lemma_suite() {
  const Quiver q = a4_q();
  const Quiver qp = reflect(q, 4);
  const Quiver sub = delete_vertex(q, 4);
  const IndecTable table_q = IndecTable::build(q);
  const IndecTable table_qp = IndecTable::build(qp);
  const IndecTable table_sub = IndecTable::build(sub);

  for (int mi = 0; mi < table_q.size(); ++mi) {
    const Representation& m = table_q.entry(mi).rep;
    for (int ni = 0; ni < table_sub.size(); ++ni) {
      const Representation& n = table_sub.entry(ni).rep;
      require(hom_dim(restrict(m, 4), n) == hom_dim(m, extend_source(n, q, 4)),
              "source adjunction failed at (" + table_q.entry(mi).label + "," +
                  table_sub.entry(ni).label + ")");
    }
  }
  for (int mi = 0; mi < table_qp.size(); ++mi) {
    const Representation& m = table_qp.entry(mi).rep;
    for (int ni = 0; ni < table_sub.size(); ++ni) {
      const Representation& n = table_sub.entry(ni).rep;
      require(hom_dim(n, restrict(m, 4)) == hom_dim(extend_sink(n, qp, 4), m),
              "sink adjunction failed at (" + table_qp.entry(mi).label + "," +
                  table_sub.entry(ni).label + ")");
    }
  }

  const Representation s4 = simple(q, 4);
  for (int ni = 0; ni < table_sub.size(); ++ni) {
    const Representation& n = table_sub.entry(ni).rep;
    const Representation jn = extend_source(n, q, 4);
    require(hom_dim(s4, jn) == 0 && ext_dim(s4, jn) == 0,
            "perpendicular vanishing failed at " + table_sub.entry(ni).label);
    for (int ni2 = 0; ni2 < table_sub.size(); ++ni2) {
      const Representation& n2 = table_sub.entry(ni2).rep;
      require(hom_dim(jn, extend_source(n2, q, 4)) == hom_dim(n, n2),
              "full faithfulness failed");
    }
    // The extension of an indecomposable stays indecomposable (a brick).
    require(hom_dim(jn, jn) == 1, "extension broke indecomposability");
  }

  const TiltingPoset pq = build_poset(table_q);
  const TiltingPoset pqp = build_poset(table_qp);
  const auto bold_q = with_summand(pq, table_q.simple_id(4));
  const auto bold_qp = with_summand(pqp, table_qp.simple_id(4));
  require(is_up_closed(pq.order, bold_q), "open-subset lemma failed");
  require(is_down_closed(pqp.order, bold_qp), "closed-subset lemma failed");

  for (int i = 0; i < static_cast<int>(pq.elements.size()); ++i) {
    const TiltingModule& t = pq.elements[i];
    const TiltingModule retract =
        iota_source(table_sub, pi_source(table_q, t, 4, table_sub), 4, table_q);
    require(leq(table_q, t, retract), "retraction inequality failed");
    const bool bold = std::find(bold_q.begin(), bold_q.end(), i) != bold_q.end();
    require((retract == t) == bold, "retraction equality must single out the marked subset");
  }
  for (int i = 0; i < static_cast<int>(pqp.elements.size()); ++i) {
    const TiltingModule& t = pqp.elements[i];
    const TiltingModule retract =
        iota_sink(table_sub, pi_sink(table_qp, t, 4, table_sub), 4, table_qp);
    require(leq(table_qp, retract, t), "dual retraction inequality failed");
    const bool bold = std::find(bold_qp.begin(), bold_qp.end(), i) != bold_qp.end();
    require((retract == t) == bold, "dual retraction equality must single out the marked subset");
  }
}

// 7. Engine cross-checks: the two Ext routes, the Euler identity, the
//    Krull-Schmidt round trip, and the two tilting enumerations.
void criterion_engine_cross_checks() {
  const Quiver q = a4_q();
  const IndecTable table = IndecTable::build(q);
  require(table.size() == 10, "A_4 table must have 10 entries");
  for (int i = 0; i < table.size(); ++i) {
    for (int j = 0; j < table.size(); ++j) {
      const Representation& m = table.entry(i).rep;
      const Representation& n = table.entry(j).rep;
      const int shortcut = ext_dim(m, n);
      require(shortcut == ext_dim_resolution(m, n),
              "Ext routes disagree at (" + table.entry(i).label + "," + table.entry(j).label + ")");
      require(hom_dim(m, n) - shortcut == euler_form(q, m.dims(), n.dims()),
              "Euler identity failed");
    }
  }

  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 5);
    std::vector<int> ids;
    std::vector<Representation> parts;
    for (int k = 0; k < size; ++k) {
      const int id = static_cast<int>(rng() % table.size());
      ids.push_back(id);
      parts.push_back(table.entry(id).rep);
    }
    std::sort(ids.begin(), ids.end());
    require(decompose(direct_sum(q, parts), table) == ids,
            "decompose(direct_sum) is not the identity");
  }

  int orientations_checked = 0;
  for (int n : {3, 4}) {
    for (const Quiver& orient : testing::orientations(
             [n] {
               std::vector<int> v;
               for (int i = 1; i <= n; ++i) v.push_back(i);
               return v;
             }(),
             testing::path_edges(n))) {
      const IndecTable t = IndecTable::build(orient);
      auto fast = enumerate_tilting(t);
      auto slow = testing::brute_force_tilting(t);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      require(fast == slow, "clique search disagrees with brute force");
      ++orientations_checked;
    }
  }
  require(orientations_checked == 4 + 8, "expected 12 orientations");
}

// 8. Cardinality laws: Catalan counts for linear A_n, triangular numbers of
//    indecomposables, 12 for D_4.
void criterion_cardinalities() {
  const int catalan[] = {0, 1, 2, 5, 14};
  for (int n = 2; n <= 4; ++n) {
    const auto tilting = enumerate_tilting(IndecTable::build(linear_a(n)));
    require(static_cast<int>(tilting.size()) == catalan[n],
            "linear A_" + std::to_string(n) + " must have " + std::to_string(catalan[n]) +
                " tilting modules");
  }
  for (int n = 1; n <= 5; ++n) {
    require(static_cast<int>(positive_roots(linear_a(n)).size()) == n * (n + 1) / 2,
            "A_" + std::to_string(n) + " root count");
  }
  const Quiver d4 = Quiver::validate({1, 2, 3, 4}, {{2, 1}, {2, 3}, {2, 4}});
  require(positive_roots(d4).size() == 12, "D_4 root count");
}

// 9. The exact checker's verdict on T_Q vs T_Q' is recorded; the expected
//    outcome is that no isomorphism exists, and a found one is flagged loudly.
void criterion_non_isomorphism() {
  const IndecTable table_q = IndecTable::build(a4_q());
  const IndecTable table_qp = IndecTable::build(reflect(a4_q(), 4));
  const TiltingPoset pq = build_poset(table_q);
  const TiltingPoset pqp = build_poset(table_qp);
  const auto witness = is_isomorphic(pq.order, pqp.order);
  if (witness) {
    std::cout << "  !!! UNEXPECTED: the two tilting posets came out isomorphic; witness = [";
    for (size_t i = 0; i < witness->size(); ++i) {
      std::cout << (i ? "," : "") << (*witness)[i];
    }
    std::cout << "]\n";
    // The claim under test is the recorded verdict itself; an isomorphism
    // here would contradict the reflected poset being a lattice while the
    // source one is not, so treat it as a failure worth investigating.
    require(false, "exhaustive search unexpectedly found an isomorphism");
  }
  std::cout << "  recorded verdict: T_Q and T_Q' are NOT isomorphic as posets "
               "(exhaustive search)\n";
  require(verify_flipflop(a4_q(), 4).posets_isomorphic == false,
          "report must record the non-isomorphism verdict");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"A4 tilting posets match the reference diagrams exactly", criterion_reference_posets},
      {"restriction maps match the reference values node for node", criterion_reference_pi_maps},
      {"indecomposable correspondence under reflection at 4", criterion_indec_correspondence},
      {"flip-flop verification passes on the running A4 instance", criterion_flipflop_a4_instance},
      {"flip-flop verification passes on every A_2..A_4, D_4 instance", criterion_flipflop_sweep},
      {"functor lemma suite holds on the full A4 corpus", criterion_lemma_suite},
      {"independent engine cross-checks agree", criterion_engine_cross_checks},
      {"cardinality laws (Catalan, root counts)", criterion_cardinalities},
      {"non-isomorphism verdict for the A4 pair", criterion_non_isomorphism},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      detail = f.detail;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::ostringstream line;
    line << (detail.empty() ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
         << criteria[i].first << " (" << static_cast<int>(ms) << " ms)";
    if (!detail.empty()) {
      line << "\n  " << detail;
      ++failures;
    }
    std::cout << line.str() << "\n";
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
