#include "helpers.hpp"

#include "bochert/catalog.hpp"
#include "bochert/min_degree.hpp"

#include <doctest.h>

using namespace bochert;

TEST_CASE("small groups") {
  CHECK(min_degree(load_builtin("A6")).m == 3);
  CHECK(min_degree(load_builtin("S5")).m == 2);
  CHECK(min_degree(load_builtin("C6")).m == 6);
  CHECK(min_degree(load_builtin("D4")).m == 2);
  CHECK(min_degree(load_builtin("PGL2_7")).m == 6);
  CHECK(min_degree(load_builtin("PSL2_7")).m == 6);
}

TEST_CASE("Mathieu groups M11 and M12") {
  for (const char *label : {"M11", "M12"}) {
    const Group g = load_builtin(label);
    const auto ex = minimal_degree_exhaustive(g);
    const auto bt = minimal_degree_backtrack(g);
    CHECK(ex.m == 8);
    CHECK(bt.m == 8);
    CHECK(ex.witness == bt.witness);
    CHECK(g.contains(ex.witness));
    CHECK(ex.witness.support_size() == 8);
    CHECK(ex.elements_visited == g.order());
  }
}

TEST_CASE("result does not depend on the job count") {
  const Group g = load_builtin("M12");
  const auto one = minimal_degree_backtrack(g, 1);
  const auto four = minimal_degree_backtrack(g, 4);
  CHECK(one.m == four.m);
  CHECK(one.witness == four.witness);
  const auto ex1 = minimal_degree_exhaustive(g, default_exhaustive_cap, 1);
  const auto ex3 = minimal_degree_exhaustive(g, default_exhaustive_cap, 3);
  CHECK(ex1.witness == ex3.witness);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(minimal_degree_exhaustive(load_builtin("M12"), 1000), CapExceeded);
  CHECK_THROWS_AS(minimal_degree_exhaustive(make_group(4, {})), PreconditionError);
  CHECK_THROWS_AS(minimal_degree_backtrack(make_group(4, {})), PreconditionError);
  CHECK(parse_min_deg_method("backtrack") == MinDegMethod::backtrack);
  CHECK(parse_min_deg_method("auto") == MinDegMethod::automatic);
  CHECK_THROWS(parse_min_deg_method("guess"));
}

TEST_CASE("automatic method picks by order and caches") {
  const Group g = load_builtin("PGL2_7");
  CHECK_FALSE(g.cached_min_degree());
  const auto r = min_degree(g);
  CHECK(r.method == MinDegMethod::exhaustive);
  REQUIRE(g.cached_min_degree());
  CHECK(g.cached_min_degree()->m == r.m);
  const auto bt = min_degree(load_builtin("M11"), MinDegMethod::automatic, 100);
  CHECK(bt.method == MinDegMethod::backtrack);
  CHECK(bt.m == 8);
}

TEST_CASE("backtrack agrees with exhaustive on every catalog group of order <= 1e5") {
  for (const auto &label : catalog_labels(Integer(100000))) {
    const Group g = load_builtin(label);
    if (g.order() == 1)
      continue;
    CAPTURE(label);
    const auto ex = minimal_degree_exhaustive(g);
    const auto bt = minimal_degree_backtrack(g);
    CHECK(ex.m == bt.m);
    CHECK(ex.witness == bt.witness);
  }
}

TEST_CASE("intransitive and imprimitive groups") {
  const Group g = make_group(7, {"(1,2,3)(4,5)", "(6,7)"});
  CHECK(min_degree(g, MinDegMethod::backtrack).m == 2);
  CHECK(min_degree(g, MinDegMethod::exhaustive).m == 2);
  const Group h = make_group(6, {"(1,2,3)(4,5,6)", "(1,4)(2,5)(3,6)"});
  CHECK(minimal_degree_backtrack(h).m == minimal_degree_exhaustive(h).m);
}

TEST_CASE("2-transitive groups without Alt have minimal degree at least 4") {
  std::size_t checked = 0;
  for (const auto &label : catalog_labels(Integer(100000))) {
    const Group g = load_builtin(label);
    if (g.transitivity_degree() < 2 || g.contains_alternating())
      continue;
    ++checked;
    CAPTURE(label);
    CHECK(min_degree(g).m >= 4);
  }
  CHECK(checked > 10);
  // Without the 2-transitivity hypothesis the bound fails: D4 has the reflection (2,4).
  const Group d4 = load_builtin("D4");
  CHECK_FALSE(d4.contains_alternating());
  CHECK(min_degree(d4).m == 2);
}
