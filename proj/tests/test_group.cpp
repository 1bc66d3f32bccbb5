#include "helpers.hpp"

#include "bochert/catalog.hpp"

#include <doctest.h>

#include <set>
#include <unordered_set>

using namespace bochert;

TEST_CASE("orders from the chain") {
  CHECK(make_group(4, {"(1,2)", "(1,2,3,4)"}).order() == 24);
  CHECK(make_group(5, {}).order() == 1);
  CHECK(make_group(5, {"(1,2,3)", "(3,4,5)"}).order() == 60);
  // Orbit-stabilizer products: 11*10*9*8 and 12*11*10*9*8.
  CHECK(load_builtin("M11").order() == 11 * 10 * 9 * 8);
  CHECK(load_builtin("M12").order() == 12 * 11 * 10 * 9 * 8);
  CHECK(load_builtin("M23").order() == Integer(10200960));
  CHECK(load_builtin("M24").order() == Integer(244823040));
}

TEST_CASE("chain invariants") {
  const Group g = load_builtin("M12");
  const auto &chain = g.chain();
  Integer product = 1;
  for (const auto &level : chain.levels())
    product *= level.orbit.size();
  CHECK(product == g.order());
  for (const auto &s : chain.strong_generators())
    CHECK(chain.sift(s).residue.is_identity());
  for (std::size_t i = 0; i < chain.depth(); ++i)
    for (const auto &gen : chain.level(i).generators)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(gen(chain.base()[j]) == chain.base()[j]);
}

TEST_CASE("base prefix is honoured") {
  const Group g = load_builtin("M11");
  const std::vector<Point> prefix{5, 3};
  auto chain = build_chain(g.generators(), prefix);
  CHECK(chain.base()[0] == 5);
  CHECK(chain.base()[1] == 3);
  CHECK(group_order(chain) == 7920);
}

TEST_CASE("membership") {
  const Group a5 = make_group(5, {"(1,2,3)", "(3,4,5)"});
  CHECK_FALSE(a5.contains(cyc("(1,2)", 5)));
  CHECK(a5.contains(cyc("(1,2)(3,4)", 5)));
  const Group m11 = load_builtin("M11");
  const auto &gens = m11.generators().generators;
  for (const auto &g : gens)
    CHECK(m11.contains(g));
  CHECK(m11.contains(gens[0] * gens[1] * gens[0].inverse()));
  CHECK_FALSE(m11.contains(cyc("(1,2)", 11)));
  CHECK_THROWS_AS((void)m11.contains(cyc("(1,2)", 10)), DegreeMismatch);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_elements(make_group(3, {"(1,2)", "(1,2,3)"}).chain()).size() == 6);
  auto c4 = enumerate_elements(make_group(4, {"(1,2,3,4)"}).chain());
  std::set<std::string> got;
  for (const auto &p : c4)
    got.insert(format_cycles(p));
  CHECK(got == std::set<std::string>{"()", "(1,2,3,4)", "(1,3)(2,4)", "(1,4,3,2)"});
}

TEST_CASE("enumeration is exhaustive and duplicate-free on the catalog") {
  for (const auto &label : catalog_labels(Integer(100000))) {
    CAPTURE(label);
    const Group g = load_builtin(label);
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto &p : enumerate_elements(g.chain()))
      seen.insert(p);
    CHECK(Integer(seen.size()) == g.order());
  }
}

TEST_CASE("orbits") {
  const Group c4 = make_group(4, {"(1,2,3,4)"});
  CHECK(orbit(c4.generators(), 0).size() == 4);
  CHECK(orbit(make_group(5, {}).generators(), 2).to_string() == "{3}");
  const Group g = make_group(6, {"(1,2)", "(4,5,6)"});
  CHECK(orbit(g.generators(), 4).to_string() == "{4,5,6}");
  CHECK(g.order() % orbit(g.generators(), 0).size() == 0);
}

TEST_CASE("pointwise stabilizers") {
  const Group s4 = make_group(4, {"(1,2)", "(1,2,3,4)"});
  CHECK(pointwise_stabilizer(s4, PointSet(4, {0})).order() == 6);
  const Group m11 = load_builtin("M11");
  const Group h = pointwise_stabilizer(m11, PointSet(11, {0, 1}));
  CHECK(h.order() == 7920 / (11 * 10));
  for (const auto &g : h.generators().generators) {
    CHECK(g(0) == 0);
    CHECK(g(1) == 1);
  }
  CHECK(pointwise_stabilizer(m11, PointSet(11)).order() == 7920);
}

TEST_CASE("transporter") {
  const Group s4 = make_group(4, {"(1,2)", "(1,2,3,4)"});
  const std::vector<Point> src{0, 1}, dst{2, 3};
  auto g = transporter(s4, src, dst);
  REQUIRE(g);
  CHECK((*g)(0) == 2);
  CHECK((*g)(1) == 3);

  const Group c3 = make_group(3, {"(1,2,3)"});
  const std::vector<Point> a{0}, b{1};
  auto h = transporter(c3, a, b);
  REQUIRE(h);
  CHECK(format_cycles(*h) == "(1,2,3)");
  const std::vector<Point> a2{0, 1}, b2{0, 2};
  CHECK_FALSE(transporter(c3, a2, b2));

  const std::vector<Point> bad{0, 0}, one{1};
  CHECK_THROWS_AS(transporter(c3, bad, b2), PreconditionError);
  CHECK_THROWS_AS(transporter(c3, a2, one), PreconditionError);
}

TEST_CASE("transitivity degree") {
  CHECK(make_group(4, {"(1,2)", "(1,2,3,4)"}).transitivity_degree() == 4);
  CHECK(make_group(5, {"(1,2,3)", "(3,4,5)"}).transitivity_degree() == 3);
  CHECK(make_group(4, {"(1,2,3,4)"}).transitivity_degree() == 1);
  CHECK(make_group(3, {}).transitivity_degree() == 0);
  CHECK(make_group(6, {"(1,2)", "(4,5,6)"}).transitivity_degree() == 0);
  CHECK(load_builtin("M11").transitivity_degree() == 4);
  CHECK(load_builtin("M12").transitivity_degree() == 5);
  CHECK(load_builtin("M23").transitivity_degree() == 4);
  CHECK(load_builtin("M24").transitivity_degree() == 5);
}

TEST_CASE("property: chain and tuple-orbit transitivity agree for n <= 8") {
  for (const auto &label : catalog_labels(Integer(100000))) {
    const Group g = load_builtin(label);
    if (g.degree() > 8)
      continue;
    CAPTURE(label);
    CHECK(g.transitivity_degree() == transitivity_degree_by_tuples(g.generators()));
  }
}

TEST_CASE("conjugate orbits") {
  const Group m11 = load_builtin("M11");
  const Permutation u = cyc("(4,10)(5,8)(6,7)(9,11)", 11);
  REQUIRE(m11.contains(u));
  const PointSet delta(11, {3, 9});
  const Group stab = pointwise_stabilizer(m11, delta);
  ConjugateOrbit e = conjugate_orbit(stab, u);
  CHECK(e.elements.front() == u);
  for (const auto &x : e.elements) {
    CHECK(delta.is_subset_of(support(x)));
    CHECK(x.support_size() == u.support_size());
  }
  CHECK(stab.order() % e.elements.size() == 0);
  CHECK_THROWS_AS(conjugate_orbit(m11, u, 5), CapExceeded);
}

TEST_CASE("property: |E| divides |G_(D)| on random samples") {
  const Group g = load_builtin("PGL2_7");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Permutation u = g.chain().random_element(rng);
    const PointSet supp = support(u);
    PointSet delta(g.degree());
    if (!supp.empty())
      delta.insert(supp.front());
    const Group stab = pointwise_stabilizer(g, delta);
    CHECK(stab.order() % conjugate_orbit(stab, u).elements.size() == 0);
  }
}

TEST_CASE("alternating-group probe matches ground truth") {
  for (const auto &label : catalog_labels(Integer(100000))) {
    CAPTURE(label);
    const Group g = load_builtin(label);
    const std::size_t n = g.degree();
    bool truth = n <= 2;
    if (!truth && g.order() * 2 >= factorial(static_cast<unsigned>(n))) {
      // Alt(n) is generated by the 3-cycles (1,2,k).
      truth = true;
      for (std::size_t k = 3; k <= n; ++k)
        truth = truth && g.contains(cyc(("(1,2," + std::to_string(k) + ")").c_str(), n));
    }
    CHECK(g.contains_alternating() == truth);
  }
}

TEST_CASE("cached values match recomputation") {
  const Group g = load_builtin("PSL2_7");
  const auto t1 = g.transitivity_degree();
  CHECK(t1 == transitivity_degree(build_chain(g.generators())));
  const Group copy = g;
  CHECK(copy.transitivity_degree() == t1);
}
