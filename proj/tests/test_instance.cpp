#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "mi/instance.hpp"
#include "mi/oracle.hpp"
#include "mi/solvers.hpp"

namespace {

mi::InstanceSpec parse_text(const std::string& text, std::string name = "") {
  std::istringstream in(text);
  return mi::parse_instance(in, std::move(name));
}

}  // namespace

TEST_CASE("parses a two-stanza uniform instance") {
  auto inst = parse_text("uniform 4 2\nuniform 4 3\n", "tiny");
  CHECK(inst.name == "tiny");
  CHECK(inst.n() == 4);
  const auto& u1 = std::get<mi::UniformSpec>(inst.m1);
  CHECK(u1.n == 4);
  CHECK(u1.k == 2);
  CHECK(std::get<mi::UniformSpec>(inst.m2).k == 3);

  auto o1 = mi::build_oracle(inst.m1);
  CHECK(o1->ground_size() == 4);
  mi::ElementSet s(4);
  s.add(0);
  s.add(1);
  CHECK(o1->independent(s));
  s.add(2);
  CHECK_FALSE(o1->independent(s));
}

TEST_CASE("every stanza kind round-trips through format_instance") {
  const std::string text =
      "partition 6 0 0 1 1 2 2 2 1 2\n"
      "graphic 4 6 0 1 0 2 0 3 1 2 1 3 2 3\n";
  auto inst = parse_text(text);
  CHECK(inst.n() == 6);
  CHECK(mi::format_instance(inst) == text);

  const auto& p = std::get<mi::PartitionSpec>(inst.m1);
  CHECK(p.class_of == std::vector<int>{0, 0, 1, 1, 2, 2});
  CHECK(p.cap == std::vector<int>{2, 1, 2});
  const auto& g = std::get<mi::GraphicSpec>(inst.m2);
  CHECK(g.num_vertices == 4);
  CHECK(g.edges.size() == 6);

  const std::string text2 =
      "gf2 3 5 10010 01010 00111\n"
      "uniform 5 3\n";
  auto inst2 = parse_text(text2);
  CHECK(inst2.n() == 5);
  CHECK(mi::format_instance(inst2) == text2);

  // Column 4 repeats column 2, so the pair is dependent.
  auto gf2 = mi::build_oracle(inst2.m1);
  mi::ElementSet cols(5);
  cols.add(2);
  cols.add(4);
  CHECK_FALSE(gf2->independent(cols));
  cols.remove(4);
  cols.add(0);
  cols.add(1);
  CHECK(gf2->independent(cols));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_text("uniform x 2\nuniform 4 2\n");
    FAIL("expected ParseError");
  } catch (const mi::ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 9);
  }

  try {
    parse_text("cycle 3 1\nuniform 3 1\n");
    FAIL("expected ParseError");
  } catch (const mi::ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 1);
  }

  try {
    parse_text("uniform 4\n");  // truncated stanza
    FAIL("expected ParseError");
  } catch (const mi::ParseError& e) {
    CHECK(e.line == 2);
  }

  try {
    parse_text("uniform 3 1\nuniform 3 2\nextra\n");
    FAIL("expected ParseError");
  } catch (const mi::ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 1);
  }

  try {
    parse_text("gf2 2 3 101 1x1\nuniform 3 1\n");
    FAIL("expected ParseError");
  } catch (const mi::ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 13);
  }
}

TEST_CASE("semantic errors carry the stanza index") {
  try {
    parse_text("uniform 4 2\nuniform 5 3\n");
    FAIL("expected SemanticError");
  } catch (const mi::SemanticError& e) {
    CHECK(e.stanza == 2);
  }

  try {
    parse_text("graphic 4 2 0 1 0 9\nuniform 2 1\n");
    FAIL("expected SemanticError");
  } catch (const mi::SemanticError& e) {
    CHECK(e.stanza == 1);
  }

  CHECK_THROWS_AS(parse_text("partition 2 0 1 1 -1\nuniform 2 1\n"),
                  mi::SemanticError);
  CHECK_THROWS_AS(parse_text("partition 2 0 -1 1\nuniform 2 1\n"),
                  mi::SemanticError);
  CHECK_THROWS_AS(parse_text("uniform 3 -1\nuniform 3 1\n"), mi::SemanticError);
  CHECK_THROWS_AS(parse_text("gf2 2 3 101 10\nuniform 3 1\n"),
                  mi::SemanticError);
}

TEST_CASE("parse_instance_file reads from disk") {
  const auto path =
      std::filesystem::temp_directory_path() / "mi_inst_roundtrip.txt";
  {
    std::ofstream out(path);
    out << "uniform 4 2\nuniform 4 4\n";
  }
  auto inst = mi::parse_instance_file(path.string());
  CHECK(inst.n() == 4);
  CHECK(inst.name == "mi_inst_roundtrip");
  std::filesystem::remove(path);

  CHECK_THROWS_AS(mi::parse_instance_file("/nonexistent/mi_missing.txt"),
                  std::runtime_error);
}

TEST_CASE("generator is deterministic and output parses back cleanly") {
  auto params_for = [](const std::string& family) {
    mi::GenParams p;
    p.family = family;
    p.seed = 11;
    if (family == "bipartite-matching") {
      p.left = 3;
      p.right = 3;
      p.edges = 5;
    } else if (family == "partition-pair") {
      p.n = 8;
      p.classes1 = 3;
      p.classes2 = 4;
      p.max_cap = 2;
    } else if (family == "graphic-vs-partition") {
      p.vertices = 5;
      p.n = 8;
      p.classes2 = 3;
      p.max_cap = 2;
    } else if (family == "gf2-pair") {
      p.rows = 4;
      p.n = 8;
    } else {
      p.n = 10;
      p.k1 = 4;
      p.k2 = 6;
    }
    return p;
  };

  const auto& families = mi::known_families();
  REQUIRE(families.size() == 5);
  for (const auto& family : families) {
    CAPTURE(family);
    const auto p = params_for(family);
    auto a = mi::generate_instance(p);
    auto b = mi::generate_instance(p);
    CHECK(mi::format_instance(a) == mi::format_instance(b));

    auto parsed = parse_text(mi::format_instance(a), a.name);
    CHECK(mi::format_instance(parsed) == mi::format_instance(a));

    auto o1 = mi::build_oracle(a.m1);
    auto o2 = mi::build_oracle(a.m2);
    CHECK(o1->ground_size() == a.n());
    CHECK(o2->ground_size() == a.n());
    CHECK(mi::checked_matroid_axioms(*o1));
    CHECK(mi::checked_matroid_axioms(*o2));

    if (family != "uniform-pair") {
      auto q = p;
      q.seed = 12;
      CHECK(mi::format_instance(mi::generate_instance(q)) !=
            mi::format_instance(a));
    }
  }
}

TEST_CASE("uniform-pair optimum is the smaller cap") {
  mi::GenParams p;
  p.family = "uniform-pair";
  p.n = 10;
  p.k1 = 4;
  p.k2 = 6;
  auto inst = mi::generate_instance(p);
  auto o1 = mi::build_oracle(inst.m1);
  auto o2 = mi::build_oracle(inst.m2);
  mi::CountingOracle c1(*o1), c2(*o2);
  auto rep = mi::exact_intersect(c1, c2);
  CHECK(rep.solution_size == 4);
}

TEST_CASE("bipartite-matching generator draws distinct edges with unit caps") {
  mi::GenParams p;
  p.family = "bipartite-matching";
  p.left = 3;
  p.right = 3;
  p.edges = 5;
  p.seed = 7;
  auto inst = mi::generate_instance(p);
  CHECK(inst.n() == 5);
  const auto& m1 = std::get<mi::PartitionSpec>(inst.m1);
  const auto& m2 = std::get<mi::PartitionSpec>(inst.m2);
  for (int cap : m1.cap) CHECK(cap == 1);
  for (int cap : m2.cap) CHECK(cap == 1);
  std::vector<std::pair<int, int>> seen;
  for (int e = 0; e < 5; ++e) {
    CHECK(m1.class_of[e] >= 0);
    CHECK(m1.class_of[e] < 3);
    CHECK(m2.class_of[e] >= 0);
    CHECK(m2.class_of[e] < 3);
    std::pair<int, int> edge{m1.class_of[e], m2.class_of[e]};
    for (const auto& prev : seen) CHECK(prev != edge);
    seen.push_back(edge);
  }
}

TEST_CASE("graphic-vs-partition generator stays in range") {
  mi::GenParams p;
  p.family = "graphic-vs-partition";
  p.vertices = 5;
  p.n = 8;
  p.classes2 = 3;
  p.max_cap = 2;
  p.seed = 3;
  auto inst = mi::generate_instance(p);
  const auto& g = std::get<mi::GraphicSpec>(inst.m1);
  CHECK(g.num_vertices == 5);
  REQUIRE(g.edges.size() == 8);
  for (auto [u, v] : g.edges) {
    CHECK(u >= 0);
    CHECK(v >= 0);
    CHECK(u < 5);
    CHECK(v < 5);
    CHECK(u != v);
  }
  const auto& part = std::get<mi::PartitionSpec>(inst.m2);
  CHECK(part.class_of.size() == 8);
  for (int cap : part.cap) {
    CHECK(cap >= 1);
    CHECK(cap <= 2);
  }
}

TEST_CASE("generator rejects unknown families and impossible shapes") {
  mi::GenParams p;
  p.family = "frobnicate";
  CHECK_THROWS_AS(mi::generate_instance(p), std::invalid_argument);

  mi::GenParams q;
  q.family = "bipartite-matching";
  q.left = 3;
  q.right = 3;
  q.edges = 10;  // only 9 distinct pairs exist
  CHECK_THROWS_AS(mi::generate_instance(q), std::invalid_argument);

  mi::GenParams u;
  u.family = "uniform-pair";
  u.n = 5;
  u.k1 = -1;
  u.k2 = 2;
  CHECK_THROWS_AS(mi::generate_instance(u), std::invalid_argument);
}
