#include "helpers.hpp"

#include "bochert/permutation.hpp"
#include "bochert/stabilizer_chain.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace bochert;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64 &rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(img[i - 1], img[uniform_below(rng, i)]);
  return Permutation(std::move(img));
}

std::vector<Point> points(const PointSet &s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("parse_cycles") {
  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(parse_cycles("(1,2,3)", 5).images()[0] == 1);
  const auto p = parse_cycles("(1,2,3)", 5);
  CHECK(std::vector<Point>(p.images().begin(), p.images().end()) == std::vector<Point>{1, 2, 0, 3, 4});
  CHECK(parse_cycles(" (1, 2)(3,4) ", 4) == parse_cycles("(3,4)(1,2)", 4));
  CHECK(parse_cycles("(1)", 3) == Permutation::identity(3));

  CHECK_THROWS_AS(parse_cycles("(1,2)(1,3)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(a,b)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
}

TEST_CASE("format_cycles is canonical") {
  CHECK(format_cycles(Permutation::identity(4)) == "()");
  CHECK(format_cycles(Permutation(std::vector<Point>{1, 2, 0, 3, 4})) == "(1,2,3)");
  CHECK(format_cycles(parse_cycles("(5,4)(3,1,2)", 5)) == "(1,2,3)(4,5)");
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), PreconditionError);
}

TEST_CASE("compose applies left to right") {
  const auto a = cyc("(1,2,3)", 5), b = cyc("(3,4,5)", 5);
  CHECK(compose(a, b)(1) == 3); // 2 -> 3 -> 4, 0-based
  CHECK(compose(a, Permutation::identity(5)) == a);
  CHECK_THROWS_AS(compose(a, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("inverse, conjugate, commutator examples") {
  CHECK(format_cycles(inverse(cyc("(1,2,3)", 3))) == "(1,3,2)");
  CHECK(inverse(Permutation::identity(3)) == Permutation::identity(3));
  CHECK(format_cycles(conjugate(cyc("(1,2)", 3), cyc("(1,3)", 3))) == "(2,3)");
  CHECK(conjugate(cyc("(1,2,3)", 4), Permutation::identity(4)) == cyc("(1,2,3)", 4));
  CHECK(format_cycles(commutator(cyc("(1,2,3)", 5), cyc("(3,4,5)", 5))) == "(2,3,5)");
  CHECK(commutator(cyc("(1,2)", 4), cyc("(3,4)", 4)).is_identity());
  const auto u = cyc("(1,2,3,4)", 4);
  CHECK(commutator(u, u).is_identity());
}

TEST_CASE("commutator by image chase on all points") {
  const auto u = cyc("(1,2,3)", 5), v = cyc("(3,4,5)", 5);
  const auto ui = u.inverse(), vi = v.inverse();
  const auto c = commutator(u, v);
  for (Point a = 0; a < 5; ++a)
    CHECK(c(a) == vi(ui(v(u(a)))));
}

TEST_CASE("support_fix") {
  auto [s, f] = support_fix(Permutation::identity(4));
  CHECK(s.empty());
  CHECK(points(f) == std::vector<Point>{0, 1, 2, 3});
  auto [s2, f2] = support_fix(cyc("(1,2,3)", 5));
  CHECK(points(s2) == std::vector<Point>{0, 1, 2});
  CHECK(points(f2) == std::vector<Point>{3, 4});
  CHECK(s2.to_string() == "{1,2,3}");
}

TEST_CASE("power, order, prime-order witness") {
  const auto p = cyc("(1,2)(3,4,5)", 5);
  CHECK(element_order(p) == 6);
  CHECK(power(p, 6).is_identity());
  CHECK(power(p, -1) == p.inverse());
  CHECK(power(p, 0).is_identity());
  CHECK(format_cycles(prime_order_witness(p)) == "(1,2)"); // p^3, order 2
  CHECK_THROWS_AS(prime_order_witness(Permutation::identity(3)), PreconditionError);
  CHECK(element_order(Permutation::identity(3)) == 1);
}

TEST_CASE("cycles") {
  auto cs = cycles(cyc("(4,5)(1,3,2)", 6));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<Point>{0, 2, 1});
  CHECK(cs[1] == std::vector<Point>{3, 4});
}

TEST_CASE("PointSet algebra") {
  PointSet a(6, {0, 2, 4}), b(6, {2, 3});
  CHECK(points(a | b) == std::vector<Point>{0, 2, 3, 4});
  CHECK(points(a & b) == std::vector<Point>{2});
  CHECK(points(a - b) == std::vector<Point>{0, 4});
  CHECK(PointSet(6, {2}).is_subset_of(b));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(cyc("(1,2,3)", 6).image_of(a).to_string() == "{1,2,5}");
}

TEST_CASE("property: round trip and group axioms in Sym(8)") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_perm(8, rng), q = random_perm(8, rng);
    CHECK(parse_cycles(format_cycles(p), 8) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(inverse(inverse(p)) == p);
    CHECK(support(p).size() + fixed_points(p).size() == 8);
    CHECK(support(compose(p, q)).is_subset_of(support(p) | support(q)));
    CHECK(commutator(q, p) == inverse(commutator(p, q)));
    CHECK(support(conjugate(p, q)) == q.image_of(support(p)));
    CHECK(power(p, static_cast<std::int64_t>(element_order(p))).is_identity());
  }
}

TEST_CASE("property: prime-order witness support in Sym(10)") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    auto p = random_perm(10, rng);
    if (p.is_identity())
      continue;
    const auto w = prime_order_witness(p);
    CHECK_FALSE(w.is_identity());
    CHECK(support(w).is_subset_of(support(p)));
    const auto ord = element_order(w);
    bool prime = ord >= 2;
    for (std::uint64_t d = 2; d * d <= ord; ++d)
      prime = prime && ord % d != 0;
    CHECK(prime);
  }
}
