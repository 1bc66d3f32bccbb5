#include "helpers.hpp"

#include "bochert/catalog.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

using namespace bochert;

TEST_CASE("builtin families") {
  CHECK(load_builtin(Family::symmetric, 5).order() == 120);
  CHECK(load_builtin(Family::alternating, 7).order() == 2520);
  CHECK(load_builtin(Family::cyclic, 6).order() == 6);
  CHECK(load_builtin(Family::dihedral, 8).order() == 16);
  CHECK(load_builtin(Family::pgl2, 7).order() == 336);
  CHECK(load_builtin(Family::psl2, 7).order() == 168);
  CHECK(load_builtin(Family::pgl2, 9).order() == 720);
  CHECK(load_builtin(Family::pgl2, 8).order() == 504);
  CHECK(load_builtin(Family::psl2, 8).order() == 504);
  CHECK(load_builtin(Family::psl2, 9).order() == 360);
  CHECK(load_builtin("PGL(2,7)").order() == 336);
  CHECK(load_builtin("M11").label() == "M11");
  CHECK(load_builtin("S4").degree() == 4);
}

TEST_CASE("builtin transitivity metadata") {
  CHECK(load_builtin("S6").transitivity_degree() == 6);
  CHECK(load_builtin("A7").transitivity_degree() == 5);
  CHECK(load_builtin("PGL2_7").transitivity_degree() == 3);
  CHECK(load_builtin("PSL2_7").transitivity_degree() == 2);
  CHECK(load_builtin("D3").transitivity_degree() == 3);
  CHECK(load_builtin("C5").transitivity_degree() == 1);
}

TEST_CASE("invalid builtins") {
  CHECK_THROWS_AS(load_builtin(Family::pgl2, 6), PreconditionError);
  CHECK_THROWS_AS(load_builtin(Family::mathieu, 22), PreconditionError);
  CHECK_THROWS(load_builtin("Q8"));
  CHECK_THROWS_AS(parse_family("quaternion"), PreconditionError);
}

TEST_CASE("catalog listing") {
  auto labels = catalog_labels(Integer(100000));
  auto has = [&](const std::string &s) { return std::find(labels.begin(), labels.end(), s) != labels.end(); };
  CHECK(has("M11"));
  CHECK(has("M12"));
  CHECK(has("S8"));
  CHECK(has("A8"));
  CHECK(has("PGL2_9"));
  CHECK(has("PGL2_4"));
  CHECK_FALSE(has("S9"));
  CHECK_FALSE(has("M23"));
}

TEST_CASE("generator text format") {
  const auto gens = parse_generator_text("# label: Klein\ndegree 4\n(1,2)(3,4)  # first\n\n(1,3)(2,4)\n");
  CHECK(gens.label == "Klein");
  CHECK(gens.degree == 4);
  REQUIRE(gens.generators.size() == 2);
  CHECK(Group(gens).order() == 4);
  CHECK(parse_generator_text(format_generator_text(gens)) == gens);

  CHECK_THROWS_AS(parse_generator_text("(1,2)\n"), ParseError);
  try {
    parse_generator_text("degree 3\n(1,2)\n(1,5)\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("generator files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "bochert_test_group.perm";
  const GeneratorSet gens = load_builtin("M11").generators();
  save_generator_file(gens, path);
  const GeneratorSet back = load_generator_file(path);
  CHECK(back.generators == gens.generators);
  CHECK(back.label == "M11");
  CHECK(resolve_group_spec("file:" + path.string()).order() == 7920);

  const auto unlabeled = dir / "klein4.perm";
  std::ofstream(unlabeled) << "degree 4\n(1,2)(3,4)\n(1,3)(2,4)\n";
  CHECK(load_generator_file(unlabeled).label == "klein4");
  std::filesystem::remove(path);
  std::filesystem::remove(unlabeled);

  CHECK_THROWS_AS(load_generator_file(dir / "does_not_exist.perm"), Error);
  CHECK_THROWS_AS(resolve_group_spec("file:/nonexistent/x.perm"), Error);
  CHECK_THROWS_AS(resolve_group_spec("bogus"), Error);
  CHECK(resolve_group_spec("catalog:S5").order() == 120);
}
