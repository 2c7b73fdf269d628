#include "tiltlab/bgp.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "tiltlab/tilting.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

TEST_CASE("reflect_source on the running example") {
  const Quiver q = a4_q();

  const Representation m13 = interval(q, 1, 3);
  const Representation f13 = reflect_source(m13, 4);
  CHECK(f13.quiver() == a4_q_reflected());
  CHECK(f13.dims() == DimVector{1, 1, 1, 1});  // 13 -> 14

  const Representation f33 = reflect_source(interval(q, 3, 3), 4);
  CHECK(f33.dims() == DimVector{0, 0, 1, 1});  // 33 -> 34

  const Representation f14 = reflect_source(interval(q, 1, 4), 4);
  CHECK(f14.dims() == DimVector{1, 1, 1, 0});  // 14 -> 13

  CHECK_THROWS_AS(reflect_source(simple(q, 4), 4), HasSimpleSummandAtX);
  CHECK_THROWS_AS(reflect_source(m13, 3), NotSource);  // 3 is the sink
}

TEST_CASE("reflect_sink on the reflected quiver") {
  const Quiver qp = a4_q_reflected();
  const Representation f14 = reflect_sink(interval(qp, 1, 4), 4);
  CHECK(f14.quiver() == a4_q());
  CHECK(f14.dims() == DimVector{1, 1, 1, 0});  // 14 -> 13

  CHECK_THROWS_AS(reflect_sink(simple(qp, 4), 4), HasSimpleSummandAtX);
  CHECK_THROWS_AS(reflect_sink(interval(qp, 1, 2), 1), NotSink);
}

TEST_CASE("sink reflection inverts source reflection") {
  const Quiver q = a4_q();
  const IndecTable table = IndecTable::build(q);
  const int s4 = table.simple_id(4);
  for (int id = 0; id < table.size(); ++id) {
    if (id == s4) continue;
    const Representation& m = table.entry(id).rep;
    const Representation round = reflect_sink(reflect_source(m, 4), 4);
    CHECK(round.dims() == m.dims());
    CHECK(hom_dim(round, m) == 1);
    CHECK(hom_dim(m, round) == 1);
  }
}

TEST_CASE("reflection is a bijection preserving Hom and Ext away from S_x") {
  const Quiver q = a4_q();
  const IndecTable table_q = IndecTable::build(q);
  const IndecTable table_qp = IndecTable::build(a4_q_reflected());
  const int s4 = table_q.simple_id(4);
  const int s4p = table_qp.simple_id(4);

  std::map<int, int> image;  // table_q id -> table_qp id
  for (int id = 0; id < table_q.size(); ++id) {
    if (id == s4) continue;
    const Representation f = reflect_source(table_q.entry(id).rep, 4);
    const auto target = table_qp.find_by_dims(f.dims());
    REQUIRE(target.has_value());
    CHECK(*target != s4p);
    image[id] = *target;
  }
  // Bijective onto the complement of S'_x.
  std::vector<int> hit;
  for (const auto& [from, to] : image) hit.push_back(to);
  std::sort(hit.begin(), hit.end());
  CHECK(hit.size() == 9);
  CHECK(std::unique(hit.begin(), hit.end()) == hit.end());

  for (const auto& [a, fa] : image) {
    for (const auto& [b, fb] : image) {
      CHECK(table_q.hom(a, b) == table_qp.hom(fa, fb));
      CHECK(table_q.ext(a, b) == table_qp.ext(fa, fb));
    }
  }
}

TEST_CASE("restriction commutes with reflection") {
  const Quiver q = a4_q();
  const IndecTable table = IndecTable::build(q);
  const int s4 = table.simple_id(4);
  for (int id = 0; id < table.size(); ++id) {
    if (id == s4) continue;
    const Representation& m = table.entry(id).rep;
    const Representation left = restrict(m, 4);
    const Representation right = restrict(reflect_source(m, 4), 4);
    CHECK(left.dims() == right.dims());
    if (!left.is_zero()) {
      CHECK(hom_dim(left, right) == 1);
      CHECK(hom_dim(right, left) == 1);
    }
  }
}

TEST_CASE("rho on tilting modules") {
  const IndecTable table_q = IndecTable::build(a4_q());
  const IndecTable table_qp = IndecTable::build(a4_q_reflected());

  auto by_labels = [](const IndecTable& t, std::initializer_list<const char*> names) {
    std::vector<int> ids;
    for (const char* n : names) ids.push_back(*t.find_by_label(n));
    std::sort(ids.begin(), ids.end());
    return TiltingModule{ids};
  };
  auto labels_of = [](const IndecTable& t, const TiltingModule& tm) {
    std::vector<std::string> out;
    for (int id : tm.ids) out.push_back(t.entry(id).label);
    std::sort(out.begin(), out.end());
    return out;
  };

  // The projective tilting module of Q maps to {14,24,33,34}.
  const auto image = rho(by_labels(table_q, {"13", "23", "33", "34"}), 4, table_q, table_qp);
  CHECK(labels_of(table_qp, image) == std::vector<std::string>{"14", "24", "33", "34"});

  // {11,12,13,14} is fixed as a set: 13 and 14 swap, 11 and 12 stay.
  const auto fixed = rho(by_labels(table_q, {"11", "12", "13", "14"}), 4, table_q, table_qp);
  CHECK(labels_of(table_qp, fixed) == std::vector<std::string>{"11", "12", "13", "14"});

  CHECK_THROWS_AS(rho(by_labels(table_q, {"14", "24", "34", "44"}), 4, table_q, table_qp),
                  ContainsSimpleAtX);
}
